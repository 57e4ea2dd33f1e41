"""Hermite spectral interpolation at the zeros of psi_{n+1}.

The interpolant h_n in span{psi_0..psi_n} is built through the discrete
transform a_k = sum_j w_j psi_k(x_j) f(x_j), which is exact thanks to the
discrete orthogonality of the psi_k on the nodes. Derivatives are exact
coefficient maps, so error curves of f^(m) - h_n^(m) carry no
finite-difference noise.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .basis import PI_M14, ladder, psi_table
from .errors import InputError
from .nodes import eta_points, gauss_hermite_nodes, tau_points

DEFAULT_GRID_POINTS = 4000
DEFAULT_WINDOW_PAD = 2.0
# beyond this |x| the Clenshaw sums (polynomial part ~ e^{x^2/2}) could overflow
_CLENSHAW_LIMIT = math.sqrt(2 * 600.0)


@dataclass(frozen=True, eq=False)
class HermiteExpansion:
    """sum_k coeffs[k] psi_k(x)."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if c.ndim != 1 or c.size == 0:
            raise InputError("coefficients must be a non-empty vector")
        if not np.all(np.isfinite(c)):
            raise InputError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self):
        return self.coeffs.size - 1

    def __call__(self, xs):
        return evaluate(self, xs)

    def deriv(self, order=1):
        e = self
        for _ in range(order):
            e = differentiate(e)
        return e

    def padded(self, degree):
        c = np.zeros(max(degree, self.degree) + 1)
        c[: self.coeffs.size] = self.coeffs
        return c

    def __add__(self, other):
        n = max(self.degree, other.degree)
        return HermiteExpansion(self.padded(n) + other.padded(n))

    def __sub__(self, other):
        n = max(self.degree, other.degree)
        return HermiteExpansion(self.padded(n) - other.padded(n))

    def __mul__(self, scalar):
        return HermiteExpansion(self.coeffs * float(scalar))

    __rmul__ = __mul__


def differentiate(e):
    """Exact derivative: b_{k-1} += a_k sqrt(k/2), b_{k+1} -= a_k sqrt((k+1)/2)."""
    return HermiteExpansion(ladder(e.coeffs))


def _clenshaw(a, x):
    n = a.size - 1
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    for k in range(n, 0, -1):
        b1, b2 = a[k] + math.sqrt(2.0 / (k + 1)) * x * b1 - math.sqrt((k + 1) / (k + 2)) * b2, b1
    # b1 = b_1, b2 = b_2; psi_0, psi_1 carry the Gaussian factor
    return PI_M14 * np.exp(-0.5 * x * x) * (a[0] + math.sqrt(2.0) * x * b1 - math.sqrt(0.5) * b2)


def evaluate(e, xs):
    """Values of the expansion at ``xs``.

    Clenshaw backward recurrence on the psi three-term recurrence; for
    |x| large enough that the polynomial part could overflow, falls back
    to the rescaled forward table.
    """
    x = np.asarray(xs, dtype=float)
    a = e.coeffs
    out = np.empty_like(x)
    near = np.abs(x) <= _CLENSHAW_LIMIT
    if np.any(near):
        out[near] = _clenshaw(a, x[near])
    if not np.all(near):
        far = ~near
        out[far] = a @ psi_table(a.size - 1, x[far])
    return out


def _samples(f, x):
    vals = np.asarray(f(x), dtype=float)
    bad = ~np.isfinite(vals)
    if np.any(bad):
        j = int(np.flatnonzero(bad)[0])
        raise InputError(f"non-finite sample f(x_{j}) at node x_{j} = {x[j]!r}")
    return vals


def interpolate(f, n):
    """Interpolant h_n of ``f`` at the n+1 zeros of psi_{n+1}.

    ``f`` is a callable on arrays, or an array of values already sampled
    at the nodes.
    """
    ns = gauss_hermite_nodes(n)
    if callable(f):
        vals = _samples(f, ns.nodes)
    else:
        vals = np.asarray(f, dtype=float)
        if vals.shape != ns.nodes.shape:
            raise InputError(f"expected {ns.nodes.size} nodal values, got {vals.shape}")
        _samples(lambda _: vals, ns.nodes)
    table = psi_table(n, ns.nodes)
    return HermiteExpansion(table @ (ns.weights * vals))


def marked_points(n, m):
    """Point set where the m-th derivative error superconverges."""
    if m == 0:
        return "node", gauss_hermite_nodes(n).nodes
    if m == 1:
        return "tau", tau_points(n)
    if m == 2:
        return "eta", eta_points(n)
    raise InputError(f"derivative order {m} has no superconvergence set (use 0, 1 or 2)")


def plot_window(n, grid_points=DEFAULT_GRID_POINTS, pad=DEFAULT_WINDOW_PAD):
    half = math.sqrt(2 * n + 3) + pad
    return np.linspace(-half, half, grid_points)


@dataclass(frozen=True, eq=False)
class ErrorCurve:
    n: int
    order: int
    abscissae: np.ndarray
    values: np.ndarray
    mark_kind: str
    mark_points: np.ndarray
    mark_errors: np.ndarray
    sup_estimate: float

    @property
    def marked_max(self):
        return float(np.max(np.abs(self.mark_errors)))


def _exact_sampler(f, m):
    if hasattr(f, "derivative"):
        return f.derivative(m)
    try:
        return f[m]
    except (TypeError, IndexError):
        raise InputError(f"no exact sampler for derivative order {m}") from None


def approximation_error_curve(approx, f, m, n, grid_points=DEFAULT_GRID_POINTS,
                              pad=DEFAULT_WINDOW_PAD, marks=None):
    """Error f^(m) - approx^(m) on the plotting window with superconvergence marks."""
    exact = _exact_sampler(f, m)
    d = approx.deriv(m)
    grid = plot_window(n, grid_points, pad)
    values = exact(grid) - d(grid)
    kind, pts = marks if marks is not None else marked_points(n, m)
    errs = exact(pts) - d(pts)
    return ErrorCurve(n, m, grid, values, kind, np.asarray(pts), errs,
                      float(np.max(np.abs(values))))


def error_curve(f, m, n, grid_points=DEFAULT_GRID_POINTS, pad=DEFAULT_WINDOW_PAD):
    """Interpolation error curve (f - h_n)^(m) with marks at nodes / tau / eta."""
    exact = _exact_sampler(f, 0)
    return approximation_error_curve(interpolate(exact, n), f, m, n, grid_points, pad)


class RatioEntry(NamedTuple):
    n: int
    r1: float
    r2: float
    degenerate: bool

    @property
    def sqrt_n_r1(self):
        return math.sqrt(self.n) * self.r1

    @property
    def sqrt_n_r2(self):
        return math.sqrt(self.n) * self.r2


@dataclass(frozen=True)
class RatioSeries:
    entries: tuple

    def column(self, name):
        return np.array([getattr(e, name) for e in self.entries], dtype=float)


def _ratio(curve, scale):
    if curve.sup_estimate <= 1e-12 * max(scale, 1.0):
        return math.nan, True
    return curve.marked_max / curve.sup_estimate, False


def ratio_entry(f, n, grid_points=DEFAULT_GRID_POINTS, pad=DEFAULT_WINDOW_PAD):
    exact = _exact_sampler(f, 0)
    h = interpolate(exact, n)
    grid = plot_window(n, grid_points, pad)
    r = []
    degenerate = False
    for m in (1, 2):
        c = approximation_error_curve(h, f, m, n, grid_points, pad)
        scale = float(np.max(np.abs(_exact_sampler(f, m)(grid))))
        value, flag = _ratio(c, scale)
        r.append(value)
        degenerate |= flag
    return RatioEntry(n, r[0], r[1], degenerate)


def ratio_series(f, ns, grid_points=DEFAULT_GRID_POINTS, pad=DEFAULT_WINDOW_PAD, workers=None):
    """R1(n) = max|(f-h_n)'(tau)| / sup|(f-h_n)'| and R2(n) analog at eta.

    Entries with zero error (f already in H_n) are flagged degenerate and
    carry NaN ratios. ``workers`` > 1 evaluates degrees concurrently;
    entries always come back in the order of ``ns``.
    """
    ns = [int(n) for n in ns]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(lambda n: ratio_entry(f, n, grid_points, pad), ns))
    else:
        entries = [ratio_entry(f, n, grid_points, pad) for n in ns]
    return RatioSeries(tuple(entries))


def decay_slope(f, ns, grid_points=DEFAULT_GRID_POINTS, pad=DEFAULT_WINDOW_PAD):
    """Least-squares slope of log ||f - h_n||_inf against sqrt(2n)."""
    ns = np.asarray(list(ns))
    errs = np.array([error_curve(f, 0, int(n), grid_points, pad).sup_estimate for n in ns])
    slope, _ = np.polyfit(np.sqrt(2.0 * ns), np.log(errs), 1)
    return float(slope), errs
