# %% [markdown]
# # Interpolation error and its superconvergence
#
# For f = e^{-x^2/2}/(x^2+1) the first-derivative error of the interpolant is
# much smaller at the tau points than elsewhere. For the wave packet
# e^{-x^2}cos(5x) the same holds for the second derivative at the eta points.

# %%
import numpy as np

from hermsc.functions import FUNCTIONS
from hermsc.interpolation import decay_slope, error_curve, ratio_series

for name, n, m in (("pole", 55, 1), ("wavepacket", 62, 2)):
    c = error_curve(FUNCTIONS[name], m, n)
    print(f"{name:10s} n={n} m={m}: {c.mark_points.size} {c.mark_kind} points, "
          f"marked max {c.marked_max:.3e}, sup {c.sup_estimate:.3e}")

# %% [markdown]
# The ratios R1 (at tau) and R2 (at eta) decay like n^{-1/2}. For this even f
# the odd and even degrees settle on two different constants: at odd n the
# point 0 belongs to tau and the odd derivative error vanishes there exactly.

# %%
rs = ratio_series(FUNCTIONS["pole"], range(20, 201, 20), workers=4)
for e in rs.entries:
    print(f"n={e.n:3d}  sqrt(n) R1 = {e.sqrt_n_r1:.4f}   sqrt(n) R2 = {e.sqrt_n_r2:.4f}")
rs = ratio_series(FUNCTIONS["pole"], range(21, 202, 20), workers=4)
for e in rs.entries:
    print(f"n={e.n:3d}  sqrt(n) R1 = {e.sqrt_n_r1:.4f}   sqrt(n) R2 = {e.sqrt_n_r2:.4f}")

# %% [markdown]
# The sup error decays like exp(-sqrt(2n)) for poles at +-i.

# %%
slope, errs = decay_slope(FUNCTIONS["pole"], range(20, 121, 10))
print(f"fitted slope against sqrt(2n): {slope:.3f}")
