# %% [markdown]
# # Merging two collocation solutions
#
# u_n and u_{n+1} are accurate at their own node sets. A least-squares fit
# in span{psi_0..psi_m} to both sets of nodal values is more accurate than
# either input inside the hull of the nodes. For larger m it loses accuracy
# outside that hull.

# %%
from hermsc.functions import FUNCTIONS
from hermsc.postprocess import run_postprocess

u = FUNCTIONS["twingauss"]
for n, m in ((40, 41), (40, 51), (90, 91), (90, 101)):
    run = run_postprocess(u, 1.0, n, m)
    rep = run.report
    print(f"n={n} m={m}: inputs inside {run.inputs_inside[0]:.2e} / {run.inputs_inside[1]:.2e}, "
          f"phi inside {rep.inside:.2e}, phi outside {rep.outside:.2e}")
