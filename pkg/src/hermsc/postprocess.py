"""Least-squares merge of two collocation solutions.

Given model2 solutions u_n and u_{n+1}, which superconverge at the zeros
x_j of psi_{n+1} and y_j of psi_{n+2} respectively, fit phi in H_m
(m <= 2n+1) to both nodal sample vectors at once:

    min || [A1; A2] a - [u_n(x); u_{n+1}(y)] ||,   A[j, k] = psi_k(point_j).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import psi_table
from .collocation import CollocationProblem, solve
from .errors import ConditioningError, InputError
from .interpolation import DEFAULT_GRID_POINTS, DEFAULT_WINDOW_PAD, HermiteExpansion, plot_window
from .numkit import lstsq


@dataclass(frozen=True)
class MergeSpec:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise InputError("degrees must be nonnegative")
        if self.m > 2 * self.n + 1:
            raise InputError(f"m={self.m} exceeds 2n+1={2 * self.n + 1}")


@dataclass(frozen=True, eq=False)
class MergeResult:
    spec: MergeSpec
    phi: HermiteExpansion
    residual: float
    residuals_x: np.ndarray
    residuals_y: np.ndarray
    x_nodes: np.ndarray
    y_nodes: np.ndarray
    rank: int


def merge_samples(x, ux, y, uy, spec):
    """Least-squares phi in H_m through samples (x, ux) and (y, uy)."""
    pts = np.concatenate([x, y])
    rhs = np.concatenate([ux, uy])
    a = psi_table(spec.m, pts).T
    sol = lstsq(a, rhs)
    if sol.rank < spec.m + 1:
        raise ConditioningError(
            f"design matrix has numerical rank {sol.rank} < {spec.m + 1} columns",
            sol.rank, spec.m + 1)
    resid = a @ sol.x - rhs
    return MergeResult(spec, HermiteExpansion(sol.x), float(np.linalg.norm(resid)),
                       resid[: x.size], resid[x.size:], np.asarray(x), np.asarray(y), sol.rank)


def merge(u_n, u_n1, spec):
    """Merge CollocationSolution objects of degrees n and n+1 into phi_m."""
    if u_n.problem.n != spec.n or u_n1.problem.n != spec.n + 1:
        raise InputError(
            f"expected solutions of degrees {spec.n} and {spec.n + 1}, "
            f"got {u_n.problem.n} and {u_n1.problem.n}")
    return merge_samples(u_n.nodes, u_n.nodal, u_n1.nodes, u_n1.nodal, spec)


@dataclass(frozen=True)
class WindowReport:
    inside: float
    outside: float
    hull: tuple
    window: float


def windowed_error_report(result, exact, window=None):
    """Sup error of phi inside [y_0, y_{n+1}] and outside it up to ``window``."""
    y = result.y_nodes
    n = result.spec.n
    if window is None:
        window = math.sqrt(2 * n + 3) + DEFAULT_WINDOW_PAD
    grid = np.linspace(-window, window, DEFAULT_GRID_POINTS)
    err = np.abs(exact(grid) - result.phi(grid))
    inside = (grid >= y[0]) & (grid <= y[-1])
    # hull endpoints are sampled exactly so the inside maximum never misses them
    edge = np.abs(exact(y[[0, -1]]) - result.phi(y[[0, -1]]))
    inside_sup = float(max(np.max(err[inside], initial=0.0), np.max(edge)))
    outside_sup = float(np.max(err[~inside], initial=0.0))
    return WindowReport(inside_sup, outside_sup, (float(y[0]), float(y[-1])), float(window))


@dataclass(frozen=True, eq=False)
class PostprocessRun:
    u_n: object
    u_n1: object
    merged: MergeResult
    grid: np.ndarray
    err_u_n: np.ndarray
    err_u_n1: np.ndarray
    err_phi: np.ndarray
    report: WindowReport
    inputs_inside: tuple
    inputs_outside: tuple


def run_postprocess(exact, alpha, n, m, grid_points=DEFAULT_GRID_POINTS, pad=DEFAULT_WINDOW_PAD):
    """Solve model2 at degrees n and n+1 for a built-in exact solution, merge, compare.

    ``exact`` is a TestFunction (needs the second derivative for the
    manufactured right-hand side).
    """
    spec = MergeSpec(n, m)
    rhs = exact.model_rhs("model2", alpha)
    u_n = solve(CollocationProblem("model2", alpha, rhs, n))
    u_n1 = solve(CollocationProblem("model2", alpha, rhs, n + 1))
    merged = merge(u_n, u_n1, spec)
    grid = plot_window(n, grid_points, pad)
    u = exact(grid)
    errs = [u - u_n.expansion(grid), u - u_n1.expansion(grid), u - merged.phi(grid)]
    window = float(grid[-1])
    report = windowed_error_report(merged, exact, window)
    y = merged.y_nodes
    inside = (grid >= y[0]) & (grid <= y[-1])
    inputs_inside = tuple(float(np.max(np.abs(e[inside]))) for e in errs[:2])
    inputs_outside = tuple(float(np.max(np.abs(e[~inside]), initial=0.0)) for e in errs[:2])
    return PostprocessRun(u_n, u_n1, merged, grid, *errs, report, inputs_inside, inputs_outside)
