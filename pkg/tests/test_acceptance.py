"""Acceptance criteria, each at its stated tolerance and time budget.

Run with ``pytest tests/test_acceptance.py -v``; a per-criterion PASS/FAIL
summary is printed at the end of the session.
"""
import math
import time

import numpy as np
import pytest

from hermsc.basis import NORM_CONSTANTS, eval_psi_derivative, psi_table, scaled_sup_norm
from hermsc.cli import main
from hermsc.collocation import spectrum_check, verify_exactness
from hermsc.functions import FUNCTIONS
from hermsc.interpolation import HermiteExpansion, decay_slope, interpolate, ratio_series
from hermsc.nodes import eta_points, gauss_hermite_nodes
from hermsc.postprocess import run_postprocess
from hermsc.verify import band_ratios


@pytest.mark.criterion(1, "optimal sup-norm constants and sharpness for 1 <= n <= 200")
def test_criterion_1_optimal_constants():
    t0 = time.perf_counter()
    for (n, k) in [(2, 0), (1, 1), (2, 2), (1, 3)]:
        assert abs(scaled_sup_norm(n, k) - NORM_CONSTANTS[k]) <= 1e-9, (n, k)
    for k in range(4):
        excess = max(scaled_sup_norm(n, k) - NORM_CONSTANTS[k] for n in range(1, 201))
        assert excess <= 1e-9, f"k={k} exceeds C{k} by {excess:.3e}"
    assert time.perf_counter() - t0 < 30


@pytest.mark.criterion(2, "interpolation reproduces H_n to 1e-10 * coefficient norm")
def test_criterion_2_interpolation_exactness():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    grid = np.linspace(-15, 15, 1000)
    for n in (5, 20, 60):
        for _ in range(50):
            a = rng.standard_normal(n + 1)
            g = HermiteExpansion(a)
            err = np.max(np.abs(interpolate(g, n)(grid) - g(grid)))
            assert err <= 1e-10 * np.linalg.norm(a), (n, err)
    assert time.perf_counter() - t0 < 10


@pytest.mark.criterion(3, "eta set equals nodes plus +-sqrt(2n+3), n = 1..100")
def test_criterion_3_eta_identity():
    for n in range(1, 101):
        eta = eta_points(n)
        ref = np.sort(np.concatenate([gauss_hermite_nodes(n).nodes,
                                      [-math.sqrt(2 * n + 3), math.sqrt(2 * n + 3)]]))
        assert np.max(np.abs(eta - ref)) <= 1e-12, n
        assert np.max(np.abs(eval_psi_derivative(n + 1, 2, eta))) <= 1e-10, n


@pytest.mark.criterion(4, "discrete orthogonality for n in {10, 30, 60}")
def test_criterion_4_discrete_orthogonality():
    for n in (10, 30, 60):
        ns = gauss_hermite_nodes(n)
        t = psi_table(n, ns.nodes)
        gram = (t * ns.weights) @ t.T
        assert np.max(np.abs(gram - np.eye(n + 1))) <= 1e-10, n


@pytest.mark.criterion(5, "collocation exactness, 20 seeds x 4 degrees x 2 models")
def test_criterion_5_collocation_exactness():
    t0 = time.perf_counter()
    failures = []
    for seed in range(20):
        for n in (4, 8, 16, 32):
            for model, alpha in (("model1", 0.5), ("model2", 2.0)):
                r = verify_exactness(model, alpha, n, seed, tol=1e-9)
                if not r.passed:
                    failures.append((model, n, seed, r.worst))
    assert not failures, failures[:5]
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion(6, "spectrum of D real, negative, distinct and root-matched, n = 1..25")
def test_criterion_6_spectrum():
    for n in range(1, 26):
        r = spectrum_check(n, rtol=1e-7, imag_tol=1e-8, gap_tol=1e-6)
        assert r.passed, (n, r.unmatched, r.max_imag, r.min_gap)


@pytest.mark.criterion(7, "sqrt(n) R1, sqrt(n) R2 within [min, 3 min], upper-half max/min <= 2")
def test_criterion_7_ratio_band():
    t0 = time.perf_counter()
    rs = ratio_series(FUNCTIONS["pole"], range(20, 201), workers=4)
    elapsed = time.perf_counter() - t0
    msgs = []
    for col in ("sqrt_n_r1", "sqrt_n_r2"):
        v = rs.column(col)
        assert np.all(np.isfinite(v)) and np.all(v > 0)
        band, upper = band_ratios(v)
        if band > 3.0:
            msgs.append(f"{col} max/min = {band:.3f} > 3")
        if upper > 2.0:
            msgs.append(f"{col} upper-half max/min = {upper:.3f} > 2")
    assert elapsed < 300
    assert not msgs, "; ".join(msgs)


@pytest.mark.criterion(8, "decay slope of log sup error vs sqrt(2n) in [-1.2, -0.8]")
def test_criterion_8_decay_rate():
    slope, errs = decay_slope(FUNCTIONS["pole"], range(20, 121, 10))
    assert -1.2 <= slope <= -0.8, slope
    assert np.all(np.diff(errs) < 0)


@pytest.mark.criterion(9, "post-processing improves inside the hull and deteriorates outside")
def test_criterion_9_postprocess():
    t0 = time.perf_counter()
    u = FUNCTIONS["twingauss"]
    run = run_postprocess(u, 1.0, 40, 41)
    assert run.report.inside <= min(run.inputs_inside), (run.report.inside, run.inputs_inside)
    run = run_postprocess(u, 1.0, 40, 51)
    assert run.report.outside > run.report.inside, (run.report.outside, run.report.inside)
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion(10, "verify --suite all exits 0 within 5 minutes")
def test_criterion_10_verify_all(tmp_path):
    t0 = time.perf_counter()
    code = main(["verify", "--suite", "all", "--out-dir", str(tmp_path)])
    elapsed = time.perf_counter() - t0
    assert elapsed < 300, f"took {elapsed:.0f} s"
    assert code == 0, f"exit code {code}; see {tmp_path / 'verify_all.json'}"
