import math
import os
import subprocess

import pytest

import qvest


def test_closed_form_matches_brute_force():
    a = qvest.qv_closed_form(1, 10**6, 1e-4)
    b = qvest.qv_brute_force(1, 10**6, 1e-4)
    assert a.value == pytest.approx(100.0)
    assert a.regime == qvest.Regime.ErrorLimited
    assert abs(a.value - b.value) <= 1.0


def test_qubit_limited():
    e = qvest.qv_closed_form(2, 20, 1e-6)
    assert e.value == 20.0
    assert e.regime == qvest.Regime.QubitLimited


def test_topology():
    assert qvest.average_swap_count("complete", 30) == 0.0
    assert qvest.average_swap_count("linear", 3) == pytest.approx(1 / 3)
    assert qvest.average_swap_count_edges(3, [(0, 1), (1, 2)]) == pytest.approx(1 / 3)
    m, _ = qvest.fit_connectivity_exponent("linear")
    assert abs(m - 1.0) <= 0.1
    with pytest.raises(qvest.DisconnectedGraph):
        qvest.average_swap_count_edges(4, [(0, 1), (2, 3)])


def test_synthesis_and_code():
    assert qvest.su4_error(1e-4, 1e-3) == pytest.approx(3.6949e-3, rel=1e-4)
    assert qvest.t_count(2.0**-10) == pytest.approx(30.0)
    assert qvest.optimal_precision(1e-6) == pytest.approx(3e-6 / math.log(2))
    assert qvest.logical_error(1e-3, 3) == pytest.approx(1e-4)
    assert qvest.qubits_per_logical(5) == 81
    assert qvest.optimize_naive_qec(1, 25, 1e-3).best_distance == 1


def test_distillation_and_architecture():
    assert qvest.distill(0, 1e-3).eps_T == 1e-3
    best = qvest.optimize_ft(1, 10**6, 1e-3)
    assert best.beats_unencoded
    assert best.metric.value <= best.layout.n_L


def test_monte_carlo_deterministic():
    a = qvest.simulate_depth(20, 1e-3, 20000, seed=42)
    b = qvest.simulate_depth(20, 1e-3, 20000, seed=42)
    assert a == b
    assert abs(a[0] - qvest.exact_mean_depth(20, 1e-3)) <= 4 * a[1]


def test_invalid_parameter_raises():
    with pytest.raises(qvest.InvalidParameter):
        qvest.qv_closed_form(1, 10, 1e-3, m=2.0)
    with pytest.raises(qvest.QvestError):
        qvest.simulate_depth(20, 1e-3, 0)


@pytest.mark.skipif(not os.environ.get("QVEST_CLI"), reason="CLI not built")
def test_cli_exit_code_for_zero_trials():
    proc = subprocess.run([os.environ["QVEST_CLI"], "validate", "--trials", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
