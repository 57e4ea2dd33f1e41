"""Gauss-Hermite nodes, discrete weights and superconvergence point sets.

For degree n the interpolation nodes x_0 < ... < x_n are the zeros of
psi_{n+1}. The tau-set (n+2 points) holds the zeros of psi_{n+1}', the
eta-set (n+3 points) the zeros of psi_{n+1}''. Since

    psi_{n+1}'' = (x**2 - (2n+3)) psi_{n+1},

the eta-set is the node set plus +-sqrt(2n+3).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .basis import MAX_DEGREE, NORM_CONSTANTS, _check_degree, eval_psi_derivative, psi_table
from .errors import NumericalError
from .numkit import SymTridiag, tridiag_eigenvalues
from .output import write_csv

NEWTON_STEPS = 5
BISECTION_STEPS = 3
NEWTON_MAX = 60


@dataclass(frozen=True, eq=False)
class NodeSet:
    n: int
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return self.nodes.size


@dataclass(frozen=True, eq=False)
class SuperconPoints:
    n: int
    tau: np.ndarray
    eta: np.ndarray


def _psi_and_slope(m, x):
    """psi_m(x) and psi_m'(x) = sqrt(2m) psi_{m-1}(x) - x psi_m(x)."""
    rows = psi_table(m, x)
    val = rows[m]
    below = rows[m - 1] if m >= 1 else np.zeros_like(x)
    return val, math.sqrt(2.0 * m) * below - x * val


@lru_cache(maxsize=256)
def _nodes_cached(n):
    x = tridiag_eigenvalues(SymTridiag.hermite_jacobi(n + 1))
    m = n + 1
    for _ in range(NEWTON_STEPS):
        val, slope = _psi_and_slope(m, x)
        step = val / slope
        x = x - step
        if np.max(np.abs(step)) <= 1e-16 * (1.0 + np.max(np.abs(x))):
            break
    # exact mirror symmetry; the middle node of an even count is 0
    x = np.sort(x)
    x = 0.5 * (x - x[::-1])
    if not np.all(np.diff(x) > 0):
        raise NumericalError(f"node computation for n={n} produced non-simple zeros")
    psi_n = psi_table(n, x)[n]
    weights = 1.0 / ((n + 1) * psi_n ** 2)
    x.setflags(write=False)
    weights.setflags(write=False)
    return NodeSet(n, x, weights)


def gauss_hermite_nodes(n):
    """Zeros of psi_{n+1} (ascending) with weights 1/((n+1) psi_n(x_j)**2).

    Golub-Welsch eigenvalues of the Jacobi matrix with off-diagonal
    sqrt(m/2), polished by Newton steps on psi_{n+1}. Results are cached
    and returned read-only.
    """
    _check_degree(n, max_degree=MAX_DEGREE)
    return _nodes_cached(int(n))


def _bracketed_roots(fun, lo, hi):
    """One root per sign-changing bracket: bisection, then safeguarded Newton.

    ``fun(x)`` returns the pair (value, slope).

    Newton iterates that leave the current bracket fall back to a
    bisection step, so every bracket converges.
    """
    a = np.array(lo, dtype=float)
    b = np.array(hi, dtype=float)
    fa = fun(a)[0]
    fb = fun(b)[0]
    if np.any(np.sign(fa) * np.sign(fb) > 0):
        bad = np.flatnonzero(np.sign(fa) * np.sign(fb) > 0)
        raise NumericalError(f"no sign change in brackets {bad.tolist()}")
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (a + b)
        fm = fun(mid)[0]
        left = np.sign(fm) * np.sign(fa) <= 0
        b = np.where(left, mid, b)
        a = np.where(left, a, mid)
        fa = np.where(left, fa, fm)
    x = 0.5 * (a + b)
    finishing = False
    for _ in range(NEWTON_MAX):
        fx, dx = fun(x)
        left = np.sign(fx) * np.sign(fa) <= 0
        b = np.where(left, x, b)
        a = np.where(left, a, x)
        fa = np.where(left, fa, fx)
        with np.errstate(divide="ignore", invalid="ignore"):
            trial = x - fx / dx
        ok = np.isfinite(trial) & (trial >= a) & (trial <= b)
        x_new = np.where(ok, trial, 0.5 * (a + b))
        close = np.abs(x_new - x) <= 1e-12 * (1.0 + np.abs(x))
        x = x_new
        # quadratic convergence: one step past 1e-12 lands at rounding level
        if finishing:
            return x
        finishing = bool(np.all(close | (fx == 0)))
    raise NumericalError("safeguarded Newton did not converge")


@lru_cache(maxsize=256)
def _tau_cached(n):
    nodes = gauss_hermite_nodes(n).nodes
    m = n + 1

    def slope_and_curvature(t):
        rows = psi_table(m, t)
        d1 = math.sqrt(2.0 * m) * rows[m - 1] - t * rows[m]
        d2 = (t * t - (2 * m + 1)) * rows[m]
        return d1, d2

    outer = math.sqrt(2 * n + 5)
    inner = _bracketed_roots(slope_and_curvature, nodes[:-1], nodes[1:]) if n else np.empty(0)
    right = _bracketed_roots(slope_and_curvature, np.array([nodes[-1]]), np.array([outer]))
    tau = np.sort(np.concatenate([-right, inner, right]))
    tau = 0.5 * (tau - tau[::-1])
    scale = NORM_CONSTANTS[1] * m ** 0.25  # sharp bound on ||psi_m'||_inf
    resid = np.max(np.abs(eval_psi_derivative(m, 1, tau)))
    if resid > 1e-12 * scale:
        raise NumericalError(f"tau residual {resid:.3e} too large for n={n}")
    tau.setflags(write=False)
    return tau


def tau_points(n):
    """The n+2 zeros of psi_{n+1}', ascending, interlacing the nodes."""
    _check_degree(n)
    return _tau_cached(int(n))


def eta_points(n, verify=True):
    """The n+3 zeros of psi_{n+1}'': nodes plus +-sqrt(2n+3), ascending."""
    _check_degree(n)
    nodes = gauss_hermite_nodes(n).nodes
    edge = math.sqrt(2 * n + 3)
    eta = np.concatenate([[-edge], nodes, [edge]])
    if verify:
        resid = np.max(np.abs(eval_psi_derivative(n + 1, 2, eta)))
        if resid > 1e-10:
            raise NumericalError(f"eta residual {resid:.3e} exceeds 1e-10 for n={n}")
    return eta


def supercon_points(n):
    return SuperconPoints(n, tau_points(n), eta_points(n))


def write_points_csv(path, n):
    """One row per point: index, kind (node/tau/eta), value, weight or empty."""
    ns = gauss_hermite_nodes(n)
    rows = [(j, "node", x, w) for j, (x, w) in enumerate(zip(ns.nodes, ns.weights))]
    rows += [(j, "tau", x, "") for j, x in enumerate(tau_points(n))]
    rows += [(j, "eta", x, "") for j, x in enumerate(eta_points(n))]
    return write_csv(path, ["index", "kind", "value", "weight"], rows)
