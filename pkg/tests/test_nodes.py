import csv
import math

import numpy as np
import pytest

from hermsc.basis import eval_psi, eval_psi_derivative, psi_table
from hermsc.errors import CapabilityError, InputError
from hermsc.nodes import (eta_points, gauss_hermite_nodes, supercon_points, tau_points,
                          write_points_csv)


def test_small_node_sets():
    np.testing.assert_allclose(gauss_hermite_nodes(0).nodes, [0.0])
    np.testing.assert_allclose(gauss_hermite_nodes(1).nodes, [-1 / math.sqrt(2), 1 / math.sqrt(2)],
                               atol=1e-15)
    np.testing.assert_allclose(gauss_hermite_nodes(2).nodes,
                               [-math.sqrt(1.5), 0.0, math.sqrt(1.5)], atol=1e-15)


def test_weight_closed_form_n1():
    # 1 / (2 psi_1(1/sqrt 2)^2) = sqrt(pi) e^{1/2} / 2
    w = gauss_hermite_nodes(1).weights
    np.testing.assert_allclose(w, math.sqrt(math.pi) * math.exp(0.5) / 2, rtol=1e-14)
    x = gauss_hermite_nodes(1).nodes
    np.testing.assert_allclose(w * eval_psi(0, x) ** 2, 0.5, rtol=1e-14)


def test_node_invariants_up_to_200():
    for n in range(201):
        ns = gauss_hermite_nodes(n)
        x, w = ns.nodes, ns.weights
        assert x.size == n + 1
        assert np.all(np.diff(x) > 0)
        assert np.max(np.abs(x + x[::-1])) <= 1e-14 * max(1.0, x[-1])
        assert np.max(np.abs(eval_psi(n + 1, x))) <= 1e-13
        assert np.all(w > 0)
        np.testing.assert_allclose(w, w[::-1], rtol=1e-13)


def test_nodes_are_readonly_and_cached():
    a = gauss_hermite_nodes(12)
    assert a is gauss_hermite_nodes(12)
    with pytest.raises(ValueError):
        a.nodes[0] = 1.0


def test_discrete_orthogonality():
    for n in range(61):
        ns = gauss_hermite_nodes(n)
        t = psi_table(n, ns.nodes)
        assert np.max(np.abs((t * ns.weights) @ t.T - np.eye(n + 1))) <= 1e-10


def test_tau_examples():
    np.testing.assert_allclose(tau_points(0), [-1.0, 1.0], atol=1e-15)
    np.testing.assert_allclose(tau_points(1), [-math.sqrt(10) / 2, 0.0, math.sqrt(10) / 2],
                               atol=1e-15)


def test_tau_interlacing_symmetry_and_residual():
    for n in range(0, 151):
        x = gauss_hermite_nodes(n).nodes
        t = tau_points(n)
        assert t.size == n + 2
        assert t[0] < x[0] and t[-1] > x[-1]
        assert np.all(x[:-1] < t[1:-1]) and np.all(t[1:-1] < x[1:])
        assert t[-1] < math.sqrt(2 * n + 5)
        assert np.max(np.abs(t + t[::-1])) <= 1e-13 * t[-1]
        resid = np.max(np.abs(eval_psi_derivative(n + 1, 1, t)))
        assert resid <= 1e-12 * 1.062251932027197 * (n + 1) ** 0.25


def test_eta_examples_and_identity():
    np.testing.assert_allclose(eta_points(1), [-math.sqrt(5), -1 / math.sqrt(2),
                                               1 / math.sqrt(2), math.sqrt(5)], atol=1e-15)
    np.testing.assert_allclose(eta_points(2), [-math.sqrt(7), -math.sqrt(1.5), 0.0,
                                               math.sqrt(1.5), math.sqrt(7)], atol=1e-15)
    for n in (0, 5, 50, 100):
        eta = eta_points(n)
        assert eta.size == n + 3
        assert np.max(np.abs(eval_psi_derivative(n + 1, 2, eta))) <= 1e-10


def test_supercon_points_bundle():
    sp = supercon_points(9)
    assert sp.tau.size == 11 and sp.eta.size == 12


def test_degree_validation():
    with pytest.raises(InputError):
        gauss_hermite_nodes(-1)
    with pytest.raises(CapabilityError):
        gauss_hermite_nodes(5000)


def test_points_csv(tmp_path):
    path = write_points_csv(tmp_path / "pts.csv", 3)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["index", "kind", "value", "weight"]
    kinds = [r[1] for r in rows[1:]]
    assert kinds.count("node") == 4 and kinds.count("tau") == 5 and kinds.count("eta") == 6
    node_vals = [float(r[2]) for r in rows[1:] if r[1] == "node"]
    np.testing.assert_array_equal(node_vals, gauss_hermite_nodes(3).nodes)
    assert all(r[3] == "" for r in rows[1:] if r[1] != "node")
