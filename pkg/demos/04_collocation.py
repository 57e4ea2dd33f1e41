# %% [markdown]
# # Collocation for two model problems
#
#     model1:   u'' + (alpha - x^2) u = f
#     model2:  -u'' + alpha u = f
#
# Both are collocated at the zeros of psi_{n+1}. When the exact solution lies
# in span{psi_0..psi_{n+1}} the error is exactly a multiple of psi_{n+1}, so
# it vanishes at the nodes; its derivatives vanish at tau and eta.

# %%
import numpy as np

from hermsc.collocation import CollocationProblem, diff_matrix, solve, spectrum_check, verify_exactness
from hermsc.errors import SolvabilityError
from hermsc.functions import FUNCTIONS
from hermsc.interpolation import approximation_error_curve
from hermsc.nodes import gauss_hermite_nodes

for model, alpha in (("model1", 0.5), ("model2", 2.0)):
    r = verify_exactness(model, alpha, 16, seed=3)
    print(f"{model}: coeff error {r.coeff_error:.1e}, node {r.node_error:.1e}, "
          f"tau {r.tau_error:.1e}, eta {r.eta_error:.1e}, passed={r.passed}")

# %% [markdown]
# The second-derivative matrix has real, negative, distinct eigenvalues
# -mu^2, with mu running over the positive zeros of psi_{n+1} and psi_{n+1}'.

# %%
r = spectrum_check(6)
print(np.round(np.sort(r.eigenvalues.real), 8))
print(np.round(r.expected, 8))

# %% [markdown]
# Smooth solutions outside the span still superconverge at the nodes.

# %%
for model, alpha, name in (("model1", 0.5, "pole2"), ("model2", 2.0, "loggauss")):
    f = FUNCTIONS[name]
    sol = solve(CollocationProblem(model, alpha, f.model_rhs(model, alpha), 45))
    c = approximation_error_curve(sol.expansion, f, 0, 45)
    print(f"{model} {name}: node error {c.marked_max:.2e}, sup error {c.sup_estimate:.2e}, "
          f"cond {sol.cond:.1f}")

# %% [markdown]
# Model 2 at an eigenvalue of D is rejected with its condition estimate.

# %%
x = gauss_hermite_nodes(8).nodes
try:
    solve(CollocationProblem("model2", -np.min(x[x > 0]) ** 2, np.ones_like, 8))
except SolvabilityError as exc:
    print("rejected:", exc)
