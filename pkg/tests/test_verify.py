"""The seeded verification harness itself."""

from __future__ import annotations

import pytest

from maxplus import verify


def test_run_smoke_all_theorems():
    for theorem in sorted(verify.CHECKS):
        report = verify.run(theorem, n=2, trials=5, seed=1)
        assert report.passed, f"{theorem}: {report.first_counterexample()}"
        assert report.summary() == "5/5 pass"
        assert report.first_counterexample() is None


def test_run_reproducible():
    a = verify.run("additive", n=3, trials=3, seed=42)
    b = verify.run("additive", n=3, trials=3, seed=42)
    assert a.failures == b.failures == []


def test_unknown_theorem():
    with pytest.raises(ValueError, match="unknown theorem"):
        verify.run("nonsense", n=2, trials=1, seed=0)


def test_negative_control_values():
    rhs, lhs, violated = verify.negative_control()
    assert rhs.format_coeffs() == "20, 2, 0"
    assert lhs.format_coeffs() == "20, 2, 0"
    assert violated is False


def test_failure_reporting():
    """Force a failure by breaking a check through a tiny stub."""
    report = verify.Report(theorem="stub", n=2, trials=2, seed=0)
    report.failures.append((1, "lhs: 1, 0\nrhs: 2, 0"))
    assert not report.passed
    assert report.summary() == "1/2 pass"
    assert report.first_counterexample().startswith("trial 1:")
