"""Randomized invariant sweeps: determinism, coverage, and bundling."""

import numpy as np
import pytest

from loopamp import run_checks
from loopamp.checks import (
    check_conjugate_pairing,
    check_cyclic_shift,
    check_decoherence_pruning,
    check_gamma_rule_vs_born,
    check_graph_gauge_invariance,
    check_loop_gauge_invariance,
    check_reversal_conjugation,
    random_cyclic_path,
    random_graph,
)
from loopamp.report import InvariantRecord, record_from_sweep

EXPECTED_RECORD_NAMES = [
    "gauge-invariance-gamma",
    "gauge-invariance-phase",
    "reversal-conjugation",
    "cyclic-shift-invariance",
    "gamma-rule-vs-born",
    "conjugate-pairing",
    "gauge-invariance-probability",
    "decoherence-pruning",
    "classical-law-restoration",
    "tagged-composite-equivalence",
]


class TestGenerators:
    def test_random_cyclic_path_bounds(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            path = random_cyclic_path(rng, max_dim=5)
            assert 2 <= path.dim <= 5
            assert 2 <= len(path) <= 6

    def test_random_graph_bounds(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            g = random_graph(rng, max_dim=5, max_routes=4, max_interior_layers=3)
            assert 2 <= g.dim <= 5
            assert 1 <= len(g.interior_layers) <= 3
            assert all(1 <= len(layer) <= 4 for layer in g.interior_layers)
            assert len(g.layers[0]) == 1 and len(g.layers[-1]) == 1

    def test_random_graph_pinned_depth(self):
        rng = np.random.default_rng(2)
        g = random_graph(rng, max_dim=4, max_routes=3, interior_layers=2)
        assert len(g.interior_layers) == 2


class TestIndividualSweeps:
    def test_loop_gauge_invariance(self):
        records = check_loop_gauge_invariance(30, 6, seed=11)
        assert [r.name for r in records] == [
            "gauge-invariance-gamma", "gauge-invariance-phase",
        ]
        assert all(r.passed for r in records)

    def test_reversal_conjugation(self):
        (record,) = check_reversal_conjugation(30, 6, seed=12)
        assert record.passed
        assert record.tolerance == 1e-15

    def test_cyclic_shift(self):
        (record,) = check_cyclic_shift(30, 6, seed=13)
        assert record.passed

    def test_gamma_rule_vs_born(self):
        (record,) = check_gamma_rule_vs_born(30, 6, 4, seed=14)
        assert record.passed
        assert record.instances == 30

    def test_conjugate_pairing(self):
        (record,) = check_conjugate_pairing(30, 6, 4, seed=15)
        assert record.passed

    def test_graph_gauge_invariance(self):
        (record,) = check_graph_gauge_invariance(30, 6, 4, seed=16)
        assert record.passed

    def test_decoherence_pruning(self):
        records = check_decoherence_pruning(20, 6, 4, seed=17)
        assert [r.name for r in records] == [
            "decoherence-pruning",
            "classical-law-restoration",
            "tagged-composite-equivalence",
        ]
        assert all(r.passed for r in records)


class TestRunChecks:
    def test_all_sweeps_present_and_passing(self):
        report = run_checks(trials=20, max_dim=6, max_routes=4, seed=0)
        assert [r.name for r in report.records] == EXPECTED_RECORD_NAMES
        assert report.passed
        for record in report.records:
            assert record.instances == 20
            assert record.max_deviation < record.tolerance

    def test_same_seed_reproduces_the_report(self):
        a = run_checks(trials=10, max_dim=5, max_routes=3, seed=123)
        b = run_checks(trials=10, max_dim=5, max_routes=3, seed=123)
        assert a.records == b.records

    def test_different_seed_changes_deviations(self):
        a = run_checks(trials=10, max_dim=5, max_routes=3, seed=1)
        b = run_checks(trials=10, max_dim=5, max_routes=3, seed=2)
        assert a.records != b.records

    def test_argument_validation(self):
        with pytest.raises(ValueError, match="trials"):
            run_checks(trials=0)
        with pytest.raises(ValueError, match="max_dim"):
            run_checks(trials=1, max_dim=1)
        with pytest.raises(ValueError, match="max_routes"):
            run_checks(trials=1, max_routes=0)

    def test_report_json_shape(self):
        report = run_checks(trials=5, max_dim=4, max_routes=3, seed=9)
        obj = report.to_json()
        assert obj["passed"] is True
        assert len(obj["records"]) == len(EXPECTED_RECORD_NAMES)
        first = obj["records"][0]
        assert set(first) == {
            "name", "instances", "max_deviation", "tolerance", "passed", "seed",
        }


class TestRecords:
    def test_failing_record_fails_the_report(self):
        good = record_from_sweep("fine", 10, 1e-16, 1e-12, seed=0)
        bad = record_from_sweep("broken", 10, 1e-3, 1e-12, seed=0)
        assert good.passed and not bad.passed
        from loopamp import CheckReport

        assert not CheckReport((good, bad)).passed
        assert CheckReport((good,)).passed

    def test_deviation_at_tolerance_fails(self):
        record = record_from_sweep("edge", 1, 1e-12, 1e-12, seed=0)
        assert not record.passed

    def test_record_json(self):
        record = InvariantRecord(
            name="n", instances=3, max_deviation=1e-14, tolerance=1e-12,
            passed=True, seed=7,
        )
        assert record.to_json() == {
            "name": "n", "instances": 3, "max_deviation": 1e-14,
            "tolerance": 1e-12, "passed": True, "seed": 7,
        }
