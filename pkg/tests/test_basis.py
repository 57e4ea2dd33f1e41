import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermsc.basis import (MAX_DEGREE, NORM_CONSTANTS, PI_M14, EvalRequest, eval_hermite_poly,
                          eval_psi, eval_psi_derivative, ladder, ladder_coefficients,
                          norm_exponent, psi_table, scaled_sup_norm, sup_norm_estimate, times_x,
                          turning_point)
from hermsc.errors import CapabilityError, InputError


def test_norm_constants_closed_forms():
    assert NORM_CONSTANTS[0] == pytest.approx(0.644874576859960, abs=1e-14)
    assert NORM_CONSTANTS[1] == pytest.approx(1.062251932027197, abs=1e-14)
    assert NORM_CONSTANTS[2] == pytest.approx(1.579046944365162, abs=1e-14)
    assert NORM_CONSTANTS[3] == pytest.approx(3.186755796081591, abs=1e-14)
    assert norm_exponent(0) == pytest.approx(-1 / 12)
    assert norm_exponent(3) == pytest.approx(1.25)


def test_turning_point():
    tp = turning_point(7)
    assert tp.xi ** 2 == pytest.approx(15.0, rel=1e-15)


def test_psi_at_zero():
    assert eval_psi(0, [0.0])[0] == pytest.approx(0.7511255444649425, rel=1e-15)
    assert eval_psi(1, [0.0])[0] == 0.0
    assert eval_psi(2, [0.0])[0] == pytest.approx(-0.5311259660135985, rel=1e-14)


def test_psi_derivative_examples():
    assert eval_psi_derivative(1, 1, [0.0])[0] == pytest.approx(1.062251932027197, rel=1e-14)
    assert eval_psi_derivative(0, 1, [1.0])[0] == pytest.approx(-0.4555806720113325, rel=1e-14)
    zeros = np.array([-math.sqrt(1.5), 0.0, math.sqrt(1.5)])
    assert np.max(np.abs(eval_psi_derivative(3, 2, zeros))) < 1e-14


def test_hermite_poly_examples():
    assert eval_hermite_poly(1, [3.0])[0] == 6.0
    assert eval_hermite_poly(2, [0.0])[0] == -2.0
    assert abs(eval_hermite_poly(3, [math.sqrt(1.5)])[0]) < 1e-13
    with pytest.raises(CapabilityError):
        eval_hermite_poly(61, [0.0])


def test_psi_matches_raw_polynomials():
    x = np.linspace(-8, 8, 301)
    for n in range(31):
        ref = np.exp(-x * x / 2) * eval_hermite_poly(n, x) / math.sqrt(
            2.0 ** n * math.factorial(n) * math.sqrt(math.pi))
        psi = eval_psi(n, x)
        mask = np.abs(psi) > 1e-8
        assert np.max(np.abs(psi[mask] - ref[mask]) / np.abs(ref[mask])) < 1e-11


def test_sup_norm_examples():
    assert sup_norm_estimate(0, 0) == pytest.approx(PI_M14, abs=1e-12)
    assert sup_norm_estimate(2, 0) == pytest.approx(0.6086805, abs=1e-6)
    assert sup_norm_estimate(2, 2) == pytest.approx(5 * 2 ** -0.5 * PI_M14, abs=1e-6)


def test_sup_norm_is_at_least_grid_max():
    for n, k in [(5, 0), (17, 1), (40, 2), (9, 3), (12, 4)]:
        half = math.sqrt(2 * n + 3) + 2
        grid = np.linspace(-half, half, 20 * (n + 1) + 1)
        assert sup_norm_estimate(n, k) >= np.max(np.abs(eval_psi_derivative(n, k, grid)))


def test_scaled_sup_norm_bounded_by_constants():
    for k in range(4):
        for n in (1, 2, 3, 10, 50, 150):
            assert scaled_sup_norm(n, k) <= NORM_CONSTANTS[k] * (1 + 1e-9)


def test_large_degree_no_overflow():
    x = np.array([0.0, 10.0, 40.0, 63.0, 100.0, 1e3])
    v = eval_psi(MAX_DEGREE, x)
    assert np.all(np.isfinite(v))
    assert np.all(np.abs(v) <= PI_M14)
    assert v[-1] == 0.0


def test_psi_table_rows_match_single_eval():
    x = np.linspace(-12, 12, 77)
    t = psi_table(50, x)
    for n in (0, 1, 7, 50):
        np.testing.assert_allclose(t[n], eval_psi(n, x), rtol=0, atol=1e-15)


def test_ladder_coefficients_first_order():
    c = ladder_coefficients(3, 1)
    np.testing.assert_allclose(c, [0.0, 0.0, math.sqrt(1.5), 0.0, -math.sqrt(2.0)])


def test_ladder_consistency_and_oscillator_identity():
    rng = np.random.default_rng(11)
    x = rng.uniform(-10, 10, 100)
    for n in range(41):
        t = psi_table(n + 1, x)
        below = t[n - 1] if n else 0.0
        ref = math.sqrt(n / 2) * below - math.sqrt((n + 1) / 2) * t[n + 1]
        assert np.max(np.abs(eval_psi_derivative(n, 1, x) - ref)) <= 1e-12
        lhs = -eval_psi_derivative(n, 2, x) + (x * x - (2 * n + 1)) * t[n]
        assert np.max(np.abs(lhs)) <= 1e-9 * (2 * n + 1)


def test_derivative_vs_finite_differences():
    x = np.linspace(-5, 5, 41)
    h = 1e-4
    for n in (0, 3, 12):
        for k in (1, 2, 3):
            lo = eval_psi_derivative(n, k - 1, x - h)
            hi = eval_psi_derivative(n, k - 1, x + h)
            fd = (hi - lo) / (2 * h)
            assert np.max(np.abs(fd - eval_psi_derivative(n, k, x))) < 1e-6 * (n + 1) ** k


def test_times_x_matches_pointwise_product():
    rng = np.random.default_rng(3)
    a = rng.standard_normal(9)
    x = np.linspace(-4, 4, 33)
    lhs = times_x(a) @ psi_table(9, x)
    rhs = x * (a @ psi_table(8, x))
    np.testing.assert_allclose(lhs, rhs, atol=1e-13)
    assert ladder(a).size == 10


def test_eval_request_validation():
    assert EvalRequest(2, 0, (0.0,)).evaluate()[0] == pytest.approx(-0.5311259660135985)
    with pytest.raises(CapabilityError):
        EvalRequest(MAX_DEGREE + 1, 0, (0.0,))
    with pytest.raises(CapabilityError):
        EvalRequest(3, 5, (0.0,))
    with pytest.raises(InputError):
        EvalRequest(-1, 0, (0.0,))
    with pytest.raises(InputError):
        eval_psi(3, [float("nan")])


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 300), x=st.floats(-60, 60, allow_nan=False))
def test_parity_and_bound(n, x):
    a = eval_psi(n, [x])[0]
    b = eval_psi(n, [-x])[0]
    assert b == (-1) ** n * a
    assert abs(a) <= PI_M14 * (1 + 1e-14)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 200), x=st.floats(-25, 25, allow_nan=False))
def test_recurrence_property(n, x):
    t = psi_table(n + 1, [x])[:, 0]
    lhs = t[n + 1]
    rhs = math.sqrt(2 / (n + 1)) * x * t[n] - math.sqrt(n / (n + 1)) * t[n - 1]
    assert abs(lhs - rhs) <= 1e-13 * (1 + abs(x))
