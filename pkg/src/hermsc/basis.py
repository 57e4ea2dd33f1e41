"""Hermite polynomials and orthonormal Hermite functions.

    psi_n(x) = exp(-x**2/2) H_n(x) / sqrt(2**n n! sqrt(pi))

Everything is evaluated with the normalized three-term recurrence

    psi_{m+1} = sqrt(2/(m+1)) x psi_m - sqrt(m/(m+1)) psi_{m-1}

run on the polynomial part only, with a per-abscissa power-of-two
rescaling; the Gaussian factor is folded back in at the end through the
accumulated log scale. Nothing overflows for any degree up to the
configured maximum, and the tails underflow gracefully to zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import CapabilityError, InputError

MAX_DEGREE = 2000
MAX_ORDER = 4
MAX_POLY_DEGREE = 60

PI_M14 = math.pi ** -0.25
_LN2 = math.log(2.0)
_RESCALE_EXP = 200
_RESCALE_AT = 2.0 ** _RESCALE_EXP
_NO_RESCALE_BELOW = 600.0

# Smallest constants with ||psi_n^(k)||_inf <= C_k n^exponent(k) for all n >= 1.
NORM_CONSTANTS = {
    0: 2.0 ** (19 / 12) * math.exp(-1.25) * PI_M14,
    1: math.sqrt(2.0) * PI_M14,
    2: 5.0 * 2.0 ** -1.25 * PI_M14,
    3: 3.0 * math.sqrt(2.0) * PI_M14,
}


def norm_exponent(k):
    """Growth exponent of ||psi_n^(k)||_inf in n."""
    return -1.0 / 12.0 if k == 0 else k / 2.0 - 0.25


class TurningPoint(NamedTuple):
    n: int
    xi: float


def turning_point(n):
    """Abscissa sqrt(2n+1) separating oscillatory and decaying regimes of psi_n."""
    return TurningPoint(n, math.sqrt(2 * n + 1))


def _check_degree(n, k=0, max_degree=MAX_DEGREE, max_order=MAX_ORDER):
    if int(n) != n or n < 0:
        raise InputError(f"degree must be a nonnegative integer, got {n!r}")
    if int(k) != k or k < 0:
        raise InputError(f"derivative order must be a nonnegative integer, got {k!r}")
    if n > max_degree:
        raise CapabilityError(f"degree {n} exceeds configured maximum {max_degree}")
    if k > max_order:
        raise CapabilityError(f"derivative order {k} exceeds configured maximum {max_order}")


def _as_abscissae(xs):
    x = np.asarray(xs, dtype=float)
    if not np.all(np.isfinite(x)):
        raise InputError("abscissae must be finite")
    return x


def psi_table(nmax, xs):
    """Rows psi_0(xs), ..., psi_nmax(xs) as an array of shape (nmax+1, *xs.shape).

    No degree cap here: callers needing psi_{n+k} for derivative
    expansions go one past the public limit.
    """
    x = _as_abscissae(xs)
    out = np.empty((nmax + 1,) + x.shape)
    logscale = -0.5 * x * x
    scale = np.exp(logscale)
    prev = np.full(x.shape, PI_M14)
    out[0] = prev * scale
    if nmax == 0:
        return out
    # |psi_m| e^{x^2/2} <= pi^{-1/4} e^{x^2/2}: no rescaling needed for moderate |x|
    guard = x.size > 0 and float(np.max(-logscale)) > _NO_RESCALE_BELOW
    cur = math.sqrt(2.0) * x * PI_M14
    out[1] = cur * scale
    for m in range(1, nmax):
        prev, cur = cur, math.sqrt(2.0 / (m + 1)) * x * cur - math.sqrt(m / (m + 1)) * prev
        if guard:
            big = np.abs(cur) > _RESCALE_AT
            if big.any():
                cur = np.where(big, np.ldexp(cur, -_RESCALE_EXP), cur)
                prev = np.where(big, np.ldexp(prev, -_RESCALE_EXP), prev)
                logscale = np.where(big, logscale + _RESCALE_EXP * _LN2, logscale)
                scale = np.exp(logscale)
        out[m + 1] = cur * scale
    return out


def _psi_scalar_window(lo, hi, x):
    """psi_lo(x), ..., psi_hi(x) for one float x, pure-Python recurrence."""
    logscale = -0.5 * x * x
    prev, cur = PI_M14, math.sqrt(2.0) * x * PI_M14
    vals = []
    if lo == 0:
        vals.append(prev * math.exp(logscale))
    if hi == 0:
        return vals
    if lo <= 1:
        vals.append(cur * math.exp(logscale))
    for m in range(1, hi):
        prev, cur = cur, math.sqrt(2.0 / (m + 1)) * x * cur - math.sqrt(m / (m + 1)) * prev
        if abs(cur) > _RESCALE_AT:
            cur = math.ldexp(cur, -_RESCALE_EXP)
            prev = math.ldexp(prev, -_RESCALE_EXP)
            logscale += _RESCALE_EXP * _LN2
        if m + 1 >= lo:
            vals.append(cur * math.exp(logscale))
    return vals


def ladder_coefficients(n, k):
    """Coefficients c with psi_n^(k) = sum_j c[j] psi_j, j = 0..n+k.

    Built by applying psi_m' = sqrt(m/2) psi_{m-1} - sqrt((m+1)/2) psi_{m+1}
    k times, so the expansion is exact.
    """
    c = np.zeros(n + k + 1)
    c[n] = 1.0
    for _ in range(k):
        c = ladder(c)[: n + k + 1]
    return c


def ladder(coeffs):
    """Coefficient vector of d/dx sum a_m psi_m (one degree longer)."""
    a = np.asarray(coeffs, dtype=float)
    b = np.zeros(a.size + 1)
    m = np.arange(a.size)
    b[:-2] += a[1:] * np.sqrt(m[1:] / 2.0)
    b[1:] -= a * np.sqrt((m + 1) / 2.0)
    return b


def times_x(coeffs):
    """Coefficient vector of x * sum a_m psi_m (one degree longer)."""
    a = np.asarray(coeffs, dtype=float)
    b = np.zeros(a.size + 1)
    m = np.arange(a.size)
    b[:-2] += a[1:] * np.sqrt(m[1:] / 2.0)
    b[1:] += a * np.sqrt((m + 1) / 2.0)
    return b


def eval_psi(n, xs):
    """Hermite function psi_n at ``xs``."""
    _check_degree(n)
    x = _as_abscissae(xs)
    return psi_table(n, x)[n]


def eval_psi_derivative(n, k, xs):
    """k-th derivative of psi_n at ``xs`` via the exact ladder expansion."""
    _check_degree(n, k)
    x = _as_abscissae(xs)
    if k == 0:
        return psi_table(n, x)[n]
    lo = max(n - k, 0)
    coeffs = ladder_coefficients(n, k)[lo:]
    rows = psi_table(n + k, x)[lo:]
    return np.tensordot(coeffs, rows, axes=1)


def _psi_derivative_scalar(n, k, x):
    lo = max(n - k, 0)
    coeffs = ladder_coefficients(n, k)[lo:]
    vals = _psi_scalar_window(lo, n + k, float(x))
    return math.fsum(c * v for c, v in zip(coeffs, vals))


def eval_hermite_poly(n, xs):
    """Physicists' Hermite polynomial H_n at ``xs`` (degree capped at 60)."""
    _check_degree(n, max_degree=MAX_POLY_DEGREE)
    x = _as_abscissae(xs)
    prev = np.ones_like(x)
    if n == 0:
        return prev
    cur = 2.0 * x
    for m in range(1, n):
        prev, cur = cur, 2.0 * x * cur - 2.0 * m * prev
    return cur


def _golden_max(fun, a, b, tol=1e-11):
    """Maximizer of a unimodal ``fun`` on [a, b] by golden-section search."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fun(c), fun(d)
    while b - a > tol * (1.0 + abs(a) + abs(b)):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fun(d)
    return (c, fc) if fc >= fd else (d, fd)


def sup_norm_estimate(n, k=0):
    """Estimate of ||psi_n^(k)||_inf over the whole real line.

    Dense grid on [-L, L], L = sqrt(2n+3) + 2, with 20(n+1)+1 points
    (extrema of psi_n^(k), k <= 4, all lie inside |x| <= sqrt(2(n+k)+1)),
    followed by golden-section refinement around the grid argmax. The
    result is never below the grid maximum.
    """
    _check_degree(n, k)
    half_width = math.sqrt(2 * n + 3) + 2.0
    grid = np.linspace(-half_width, half_width, 20 * (n + 1) + 1)
    vals = np.abs(eval_psi_derivative(n, k, grid))
    i = int(np.argmax(vals))
    grid_max = float(vals[i])
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, grid.size - 1)]
    _, refined = _golden_max(lambda t: abs(_psi_derivative_scalar(n, k, t)), lo, hi)
    return max(grid_max, refined)


def scaled_sup_norm(n, k):
    """||psi_n^(k)||_inf * n**(-exponent(k)); bounded above by NORM_CONSTANTS[k]."""
    if n < 1:
        raise InputError("scaled sup norm is defined for n >= 1")
    return sup_norm_estimate(n, k) * n ** (-norm_exponent(k))


@dataclass(frozen=True)
class EvalRequest:
    """Degree ``n``, derivative order ``k`` and abscissae for psi_n^(k)."""

    n: int
    k: int
    xs: tuple

    def __post_init__(self):
        _check_degree(self.n, self.k)
        _as_abscissae(self.xs)

    def evaluate(self):
        return eval_psi_derivative(self.n, self.k, np.asarray(self.xs, dtype=float))
