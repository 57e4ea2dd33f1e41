"""Hermite spectral collocation for two second-order ODEs on the real line.

    model1:   u'' + (alpha - x^2) u = f      alpha not in {1, 3, 5, ...}
    model2:  -u'' + alpha u = f              alpha not an eigenvalue of D

Both are collocated at the zeros x_j of psi_{n+1}. Nodal values are
linked to second derivatives through D[i, j] = sigma_j''(x_i), where
sigma_j = psi_{n+1}(x) / (psi_{n+1}'(x_j) (x - x_j)) is the cardinal
function of node j.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .basis import NORM_CONSTANTS, _check_degree, eval_psi_derivative, ladder, psi_table, times_x
from .errors import InputError, SingularMatrixError, SolvabilityError
from .interpolation import HermiteExpansion, interpolate
from .nodes import gauss_hermite_nodes, tau_points, eta_points
from .numkit import dense_eigenvalues, lu_solve

MODELS = ("model1", "model2")
COND_LIMIT = 1e12


def is_forbidden_model1_alpha(alpha):
    a = float(alpha)
    return a > 0 and a.is_integer() and int(a) % 2 == 1


@dataclass(frozen=True)
class CollocationProblem:
    model: str
    alpha: float
    rhs: Callable
    n: int

    def __post_init__(self):
        if self.model not in MODELS:
            raise InputError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if not math.isfinite(self.alpha):
            raise InputError("alpha must be finite")
        if self.model == "model1" and is_forbidden_model1_alpha(self.alpha):
            raise InputError(f"model1 requires alpha not in {{1, 3, 5, ...}}, got {float(self.alpha)!r}")
        _check_degree(self.n)


@dataclass(frozen=True, eq=False)
class DiffMatrix:
    n: int
    nodes: np.ndarray
    entries: np.ndarray


@lru_cache(maxsize=64)
def _diff_matrix(n):
    x = gauss_hermite_nodes(n).nodes
    slope = eval_psi_derivative(n + 1, 1, x)
    dx = x[:, None] - x[None, :]
    np.fill_diagonal(dx, 1.0)
    d = -2.0 * slope[:, None] / (slope[None, :] * dx * dx)
    # psi'' = (x^2 - (2n+3)) psi vanishes at nodes, so psi''' = (x^2 - (2n+3)) psi' there
    np.fill_diagonal(d, (x * x - (2 * n + 3)) / 3.0)
    d.setflags(write=False)
    return DiffMatrix(n, x, d)


def diff_matrix(n):
    """Second-derivative collocation matrix D[i, j] = sigma_j''(x_i)."""
    _check_degree(n)
    return _diff_matrix(int(n))


def cardinal_second_derivative(n, i, j):
    return float(diff_matrix(n).entries[i, j])


def cardinal(n, j, xs):
    """Cardinal function sigma_j of degree n at ``xs`` (equals 1 at x_j)."""
    x = np.asarray(xs, dtype=float)
    xj = gauss_hermite_nodes(n).nodes[j]
    slope = eval_psi_derivative(n + 1, 1, [xj])[0]
    num = psi_table(n + 1, x)[n + 1]
    with np.errstate(invalid="ignore", divide="ignore"):
        vals = num / (slope * (x - xj))
    return np.where(x == xj, 1.0, vals)


def system_matrix(model, alpha, n):
    d = diff_matrix(n)
    if model == "model1":
        return d.entries + np.diag(alpha - d.nodes ** 2)
    if model == "model2":
        return -d.entries + alpha * np.eye(n + 1)
    raise InputError(f"unknown model {model!r}")


@dataclass(frozen=True, eq=False)
class CollocationSolution:
    problem: CollocationProblem
    nodes: np.ndarray
    nodal: np.ndarray
    expansion: HermiteExpansion
    residual: float
    cond: float
    rhs_nodal: np.ndarray = field(repr=False)


def solve(problem):
    """Solve the collocation system and return nodal values plus expansion.

    Raises ``SolvabilityError`` (carrying the condition estimate) when the
    system is singular or its condition estimate exceeds 1e12.
    """
    n = problem.n
    x = gauss_hermite_nodes(n).nodes
    fhat = np.asarray(problem.rhs(x), dtype=float)
    if fhat.shape != x.shape or not np.all(np.isfinite(fhat)):
        raise InputError("right-hand side must give finite values at every node")
    a = system_matrix(problem.model, problem.alpha, n)
    try:
        uhat, cond = lu_solve(a, fhat)
        cond = float(cond)
    except SingularMatrixError as exc:
        raise SolvabilityError(f"collocation system is singular: {exc}") from exc
    if cond > COND_LIMIT:
        raise SolvabilityError(
            f"{problem.model} with alpha={float(problem.alpha)!r} at n={n} is numerically "
            f"singular (condition estimate {cond:.3e})", cond)
    fnorm = np.linalg.norm(fhat)
    residual = float(np.linalg.norm(a @ uhat - fhat) / (fnorm if fnorm > 0 else 1.0))
    return CollocationSolution(problem, x, uhat, interpolate(uhat, n), residual, cond, fhat)


def apply_operator(model, alpha, coeffs):
    """Coefficients of the model operator applied to sum a_k psi_k.

    Built from the derivative ladder and multiplication by x, not from the
    harmonic-oscillator eigenvalues, so it stays an independent check.
    """
    a = np.asarray(coeffs, dtype=float)
    d2 = ladder(ladder(a))
    u = np.zeros(d2.size)
    u[: a.size] = a
    if model == "model1":
        x2u = times_x(times_x(a))
        return d2 + alpha * u - x2u
    if model == "model2":
        return -d2 + alpha * u
    raise InputError(f"unknown model {model!r}")


@dataclass(frozen=True)
class ExactnessReport:
    model: str
    alpha: float
    n: int
    seed: int
    coeff_error: float
    node_error: float
    tau_error: float
    eta_error: float
    node_tol: float
    tau_tol: float
    eta_tol: float
    residual: float
    passed: bool
    worst: str


def verify_exactness(model, alpha, n, seed, tol=1e-9):
    """Draw u in H_{n+1}, collocate, and check u - u_n = a_{n+1} psi_{n+1}.

    The error must vanish at the nodes, its first derivative at the tau
    points and its second derivative at the eta points.
    """
    rng = np.random.default_rng(seed)
    a = rng.standard_normal(n + 2)
    f = HermiteExpansion(apply_operator(model, alpha, a))
    sol = solve(CollocationProblem(model, alpha, f, n))
    err = HermiteExpansion(a) - sol.expansion
    coeff_error = float(np.max(np.abs(err.coeffs[: n + 1])))
    lead = abs(a[n + 1])
    m = n + 1
    node_tol = tol * lead * NORM_CONSTANTS[0] * m ** (-1 / 12)
    tau_tol = tol * lead * NORM_CONSTANTS[1] * m ** 0.25
    eta_tol = tol * lead * NORM_CONSTANTS[2] * m ** 0.75
    node_error = float(np.max(np.abs(err(sol.nodes))))
    tau_error = float(np.max(np.abs(err.deriv(1)(tau_points(n)))))
    eta_error = float(np.max(np.abs(err.deriv(2)(eta_points(n)))))
    checks = {
        "coefficients": coeff_error / tol,
        "nodes": node_error / node_tol,
        "tau": tau_error / tau_tol,
        "eta": eta_error / eta_tol,
    }
    worst = max(checks, key=checks.get)
    passed = all(v <= 1.0 for v in checks.values())
    return ExactnessReport(model, float(alpha), n, seed, coeff_error, node_error, tau_error,
                           eta_error, node_tol, tau_tol, eta_tol, sol.residual, passed, worst)


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    n: int
    eigenvalues: np.ndarray
    expected: np.ndarray
    max_rel_error: float
    max_imag: float
    min_gap: float
    unmatched: list
    passed: bool


def expected_spectrum(n):
    """-mu^2 for mu over positive zeros of psi_{n+1} and of psi_{n+1}'."""
    x = gauss_hermite_nodes(n).nodes
    tau = tau_points(n)
    mu = np.concatenate([x[x > 0], tau[tau > 0]])
    return np.sort(-mu * mu)


def spectrum_check(n, rtol=1e-7, imag_tol=1e-8, gap_tol=1e-6):
    """Eigenvalues of D against the root-based prediction, as multisets."""
    if n > 40:
        raise InputError("spectrum_check is limited to n <= 40")
    eig = dense_eigenvalues(diff_matrix(n).entries)
    expected = expected_spectrum(n)
    if expected.size != n + 1:
        raise InputError(f"expected {n + 1} predicted eigenvalues, got {expected.size}")
    re = np.sort(eig.real)
    rel = np.abs(re - expected) / np.abs(expected)
    unmatched = [float(v) for v, r in zip(re, rel) if r > rtol]
    max_imag = float(np.max(np.abs(eig.imag)))
    gap = float(np.min(np.diff(re))) if re.size > 1 else math.inf
    passed = not unmatched and max_imag <= imag_tol and gap >= gap_tol and np.all(re < 0)
    return SpectrumReport(n, eig, expected, float(np.max(rel)), max_imag, gap, unmatched,
                          bool(passed))
