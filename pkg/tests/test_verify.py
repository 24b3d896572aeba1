import numpy as np
import pytest

from engine.src.errors import DomainError
from engine.src.functions import constant
from engine.src.norm_formulas import le32_sup, th34_upper
from engine.src.spaces import SpaceKind, SpaceSpec
from engine.src.special import reflection
from engine.src.verify import (MAX_RANDOM_DEGREE, SUITES, Check, SuiteContext, alpha_grid, attainment_ratio,
                               bound_certificate, crosscheck_representations, lemma_bruteforce,
                               lemma_polar_audit, radial_reduction_audit, random_polynomials,
                               representation_deviation, run_suite)


def test_random_polynomials_are_seeded_and_prefix_stable():
    """The first n draws do not depend on how many are requested"""
    short = random_polynomials(5, seed=7)
    long = random_polynomials(20, seed=7)
    for a, b in zip(short, long):
        np.testing.assert_array_equal(a, b)
    assert all(1 <= c.size <= MAX_RANDOM_DEGREE + 1 for c in long)
    other = random_polynomials(5, seed=8)
    assert any(a.size != b.size or not np.array_equal(a, b) for a, b in zip(short, other))


def test_bound_certificate_on_random_polynomials():
    """Random polynomials never beat the T_t upper bound"""
    alpha = 0.5
    cert = bound_certificate(SpaceSpec(SpaceKind.LOG_KORENBLUM, alpha), SpaceSpec(SpaceKind.KORENBLUM, alpha),
                             th34_upper(alpha), trials=5, seed=3)
    assert cert.passed
    assert cert.trials == 5
    assert 0.0 < cert.worst_ratio <= th34_upper(alpha)
    assert cert.to_dict()["source"] == "H^inf_0.5,log"


def test_bound_certificate_rejects_unbounded_pair():
    hardy = SpaceSpec(SpaceKind.HARDY_INF)
    with pytest.raises(DomainError):
        bound_certificate(hardy, hardy, 1.0, trials=1)


def test_attainment_probe():
    """The constant function's Bloch quantity at r = 1 - 1e-6 is within 1e-3 of 3"""
    assert attainment_ratio("TH61", r_probe=1.0 - 1e-6) == pytest.approx(3.0, abs=1e-3)
    with pytest.raises(DomainError):
        attainment_ratio("TH61", r_probe=1.0)


def test_representation_deviation():
    z = np.array([0.1, -0.4 + 0.3j])
    deviations = representation_deviation(constant(), z)
    assert set(deviations) == {"matrix-kernel", "matrix-composition", "kernel-composition"}
    assert max(deviations.values()) < 1e-10


def test_crosscheck_representations_small():
    report = crosscheck_representations(5, samples=10, polynomials=2)
    assert report.max_deviation < 1e-8
    assert report.to_dict()["degree"] == 5
    with pytest.raises(DomainError):
        crosscheck_representations(51)


def test_radial_reduction_audit_constant():
    """The constant has its weighted maximum at the origin: no gap"""
    report = radial_reduction_audit("const", 0.5, angles=8, radial_samples=16)
    assert report.gap == 0.0
    assert report.radial_sup == pytest.approx(1.0)


@pytest.mark.parametrize("kernel_id,angles", [("th99", 8), ("const", 0)])
def test_radial_reduction_audit_validation(kernel_id, angles):
    with pytest.raises(DomainError):
        radial_reduction_audit(kernel_id, 0.5, angles=angles)


@pytest.mark.parametrize("alpha,t", [(0.6, 0.5), (0.8, 0.2), (0.9, 0.05), (0.95, 0.7)])
def test_lemma_bruteforce_matches_closed_form(alpha, t):
    """Grid plus Brent on the real diameter reproduces the piecewise supremum"""
    assert lemma_bruteforce(alpha, t, grid=20_001) == pytest.approx(le32_sup(alpha, t), rel=1e-6)


def test_lemma_polar_audit_below_closed_form():
    value, point = lemma_polar_audit(0.8, 0.2, radii=16, angles=32)
    assert value <= le32_sup(0.8, 0.2) * (1.0 + 1e-9)
    assert abs(point) < 1.0


def test_check_to_dict():
    check = Check("special", "name", True, 1.0, 1.0, 1e-9)
    assert check.to_dict() == {"suite": "special", "name": "name", "passed": True, "observed": 1.0,
                               "expected": 1.0, "tolerance": 1e-9, "detail": ""}


def test_alpha_grid_is_interior():
    assert alpha_grid(0.0, 1.0, 3) == pytest.approx([0.25, 0.5, 0.75])


@pytest.mark.parametrize("suite", ["special", "quadrature", "monotonicity"])
def test_fast_suites_pass(suite):
    checks = run_suite(suite, SuiteContext(trials=5, sup_radii=16))
    assert checks
    assert all(c.suite == suite for c in checks)
    assert [c.name for c in checks if not c.passed] == []


@pytest.mark.parametrize("suite", ["lemma", "sandwich", "th41-limit", "th61", "th71", "representations",
                                   "certificates", "unbounded", "audit", "growth"])
def test_remaining_suites_pass(suite):
    """Every check of the numerical suites holds with the default settings"""
    checks = run_suite(suite, SuiteContext())
    assert checks
    assert all(c.suite == suite for c in checks)
    assert [c.name for c in checks if not c.passed] == []


@pytest.mark.parametrize("alpha", [0.3, 0.5, 0.7])
def test_th41_attainment_reaches_reflection(alpha):
    """The extremal quantity extrapolated from r = 1 - 1e-30, 1 - 1e-60, 1 - 1e-120 gives pi/sin(a pi)"""
    assert attainment_ratio("TH41", alpha) == pytest.approx(reflection(alpha).value, rel=2e-3)


def test_suite_names():
    assert len(SUITES) == 13
    assert "th41-limit" in SUITES
    with pytest.raises(DomainError):
        run_suite("everything")
