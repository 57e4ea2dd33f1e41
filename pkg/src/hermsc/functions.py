"""Built-in test functions with closed-form first and second derivatives.

Each entry is a product ``g(x) * r(x)`` of a Gaussian-type factor and a
smooth factor; derivatives come from the product rule on hand-written
factor derivatives. There is no expression parser on purpose: the
derivative samplers feed error curves and manufactured right-hand sides,
so they have to be exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .basis import eval_psi_derivative
from .errors import InputError


@dataclass(frozen=True)
class TestFunction:
    """A function of x together with its first two derivatives."""

    __test__ = False  # keep pytest from collecting this class

    name: str
    derivs: tuple
    formula: str = ""
    note: str = field(default="", compare=False)

    def __call__(self, x):
        return self.derivs[0](np.asarray(x, dtype=float))

    def derivative(self, m) -> Callable:
        if m >= len(self.derivs):
            raise InputError(f"{self.name}: no sampler for derivative order {m}")
        return lambda x: self.derivs[m](np.asarray(x, dtype=float))

    def model_rhs(self, model, alpha):
        """Manufactured right-hand side sampler for a collocation model."""
        u, d2 = self.derivs[0], self.derivs[2]
        if model == "model1":
            return lambda x: d2(x) + (alpha - x * x) * u(x)
        if model == "model2":
            return lambda x: -d2(x) + alpha * u(x)
        raise InputError(f"unknown model {model!r}")


def _product(g, r):
    """(g r), (g r)', (g r)'' from factor triples (v, v', v'')."""
    g0, g1, g2 = g
    r0, r1, r2 = r
    return (
        lambda x: g0(x) * r0(x),
        lambda x: g1(x) * r0(x) + g0(x) * r1(x),
        lambda x: g2(x) * r0(x) + 2.0 * g1(x) * r1(x) + g0(x) * r2(x),
    )


def _gauss(c):
    """exp(-c x^2) and its derivatives."""
    return (
        lambda x: np.exp(-c * x * x),
        lambda x: -2.0 * c * x * np.exp(-c * x * x),
        lambda x: (4.0 * c * c * x * x - 2.0 * c) * np.exp(-c * x * x),
    )


def _inverse_quadratic(a, c):
    """1 / (a x^2 + c) and its derivatives."""
    return (
        lambda x: 1.0 / (a * x * x + c),
        lambda x: -2.0 * a * x / (a * x * x + c) ** 2,
        lambda x: (6.0 * a * a * x * x - 2.0 * a * c) / (a * x * x + c) ** 3,
    )


_COS5 = (
    lambda x: np.cos(5.0 * x),
    lambda x: -5.0 * np.sin(5.0 * x),
    lambda x: -25.0 * np.cos(5.0 * x),
)

_LOG1P_SQ = (
    lambda x: np.log1p(x * x),
    lambda x: 2.0 * x / (x * x + 1.0),
    lambda x: (2.0 - 2.0 * x * x) / (x * x + 1.0) ** 2,
)


def _twin_gauss():
    def e(x, s):
        return np.exp(-(x - s) ** 2)

    return (
        lambda x: e(x, 1.0) + e(x, -1.0),
        lambda x: -2.0 * (x - 1.0) * e(x, 1.0) - 2.0 * (x + 1.0) * e(x, -1.0),
        lambda x: (4.0 * (x - 1.0) ** 2 - 2.0) * e(x, 1.0) + (4.0 * (x + 1.0) ** 2 - 2.0) * e(x, -1.0),
    )


def _hermite_function(n):
    return tuple((lambda x, k=k: eval_psi_derivative(n, k, x)) for k in range(3))


FUNCTIONS = {
    f.name: f
    for f in [
        TestFunction("pole", _product(_gauss(0.5), _inverse_quadratic(1.0, 1.0)),
                     "exp(-x^2/2)/(x^2+1)", "poles at +-i; interpolation figures 2, 3, 5"),
        TestFunction("wavepacket", _product(_gauss(1.0), _COS5),
                     "exp(-x^2)cos(5x)", "entire; interpolation figures 3-4"),
        TestFunction("pole2", _product(_gauss(0.5), _inverse_quadratic(1.0, 2.0)),
                     "exp(-x^2/2)/(x^2+2)", "model 1 exact solution, alpha=1/2"),
        TestFunction("loggauss", _product(_gauss(1.0), _LOG1P_SQ),
                     "exp(-x^2)ln(x^2+1)", "model 2 exact solution, alpha=2"),
        TestFunction("twingauss", _product(_twin_gauss(), _inverse_quadratic(4.0, 1.0)),
                     "(exp(-(x-1)^2)+exp(-(x+1)^2))/(4x^2+1)", "post-processing exact solution"),
        TestFunction("psi2", _hermite_function(2),
                     "psi_2(x)", "member of H_n for n >= 2; exact reproduction check"),
    ]
}


def get_function(name):
    try:
        return FUNCTIONS[name]
    except KeyError:
        raise InputError(f"unknown function id {name!r}; choose from {sorted(FUNCTIONS)}") from None
