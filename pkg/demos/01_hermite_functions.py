# %% [markdown]
# # Hermite functions and their sup norms
#
# psi_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)) is evaluated by the
# normalized three-term recurrence, which never forms H_n on its own and so
# does not overflow even at degree 2000.

# %%
import math

import numpy as np

from hermsc.basis import (NORM_CONSTANTS, eval_hermite_poly, eval_psi, eval_psi_derivative,
                          norm_exponent, scaled_sup_norm)

x = np.linspace(-3, 3, 7)
print("psi_5 on a coarse grid:", np.round(eval_psi(5, x), 6))
print("psi_2000 at 0, 40, 63:", eval_psi(2000, [0.0, 40.0, 63.0]))

# %% [markdown]
# Cross-check against the raw polynomial where that is still representable.

# %%
n = 12
ref = np.exp(-x * x / 2) * eval_hermite_poly(n, x) / math.sqrt(2.0 ** n * math.factorial(n) * math.sqrt(math.pi))
print("max |psi_12 - raw form|:", np.max(np.abs(eval_psi(n, x) - ref)))

# %% [markdown]
# Derivatives come from the ladder psi_m' = sqrt(m/2) psi_{m-1} - sqrt((m+1)/2) psi_{m+1},
# and they satisfy the harmonic-oscillator identity -psi'' + x^2 psi = (2n+1) psi.

# %%
n = 9
g = np.linspace(-6, 6, 201)
lhs = -eval_psi_derivative(n, 2, g) + g * g * eval_psi(n, g)
print("oscillator identity defect:", np.max(np.abs(lhs - (2 * n + 1) * eval_psi(n, g))))

# %% [markdown]
# The scaled sup norms ||psi_n^(k)|| n^{-e(k)} never exceed the optimal
# constants C_k, and each constant is attained at a small degree.

# %%
for k in range(4):
    vals = [scaled_sup_norm(n, k) for n in range(1, 61)]
    print(f"k={k}  exponent {norm_exponent(k):+.4f}  max scaled {max(vals):.15f}  C{k} {NORM_CONSTANTS[k]:.15f}")
