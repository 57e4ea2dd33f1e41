# %% [markdown]
# # Nodes, weights and superconvergence points
#
# The interpolation nodes of degree n are the zeros of psi_{n+1}. The tau
# points are the zeros of psi_{n+1}', and the eta points are the zeros of
# psi_{n+1}''. Because psi_{n+1}'' = (x^2 - (2n+3)) psi_{n+1}, the eta set is
# simply the node set plus +-sqrt(2n+3).

# %%
import numpy as np

from hermsc.basis import psi_table
from hermsc.nodes import eta_points, gauss_hermite_nodes, tau_points

n = 6
ns = gauss_hermite_nodes(n)
print("nodes  :", np.round(ns.nodes, 6))
print("weights:", np.round(ns.weights, 6))
print("tau    :", np.round(tau_points(n), 6))
print("eta    :", np.round(eta_points(n), 6))

# %% [markdown]
# The weights make the sampled psi_k orthonormal.

# %%
for n in (10, 60, 200):
    ns = gauss_hermite_nodes(n)
    t = psi_table(n, ns.nodes)
    gram = (t * ns.weights) @ t.T
    print(f"n={n:3d}  max |gram - I| = {np.max(np.abs(gram - np.eye(n + 1))):.2e}")

# %% [markdown]
# tau interlaces the nodes, with one extra point beyond each end.

# %%
x, t = gauss_hermite_nodes(8).nodes, tau_points(8)
print(np.all(x[:-1] < t[1:-1]) and np.all(t[1:-1] < x[1:]), t[0] < x[0], t[-1] > x[-1])
