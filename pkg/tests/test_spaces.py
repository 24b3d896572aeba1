import math

import numpy as np
import pytest

from engine.src.errors import DomainError
from engine.src.functions import f_alpha, f_alpha_plain, h_alpha, polynomial
from engine.src.spaces import (SELECTORS, SpaceKind, SpaceSpec, derivative_function, g_aux,
                               norm_estimate, numeric_derivative, weight)


def test_selectors_map_to_spaces():
    """Every selector builds a space; bloch is alpha = 1, bloch-plus-one shifts alpha by 1"""
    assert SpaceSpec.from_selector("hardy-inf") == SpaceSpec(SpaceKind.HARDY_INF)
    assert SpaceSpec.from_selector("bloch") == SpaceSpec(SpaceKind.BLOCH_ALPHA, 1.0)
    assert SpaceSpec.from_selector("bloch-plus-one", 0.5) == SpaceSpec(SpaceKind.BLOCH_ALPHA, 1.5)
    assert SpaceSpec.from_selector("log-korenblum", 0.3).kind is SpaceKind.LOG_KORENBLUM
    assert len(SELECTORS) == 6


@pytest.mark.parametrize("selector,alpha", [
    ("korenblum", None),
    ("korenblum", 1.0),
    ("log-korenblum", 0.0),
    ("bloch-alpha", -1.0),
    ("besov", 0.5),
])
def test_selector_validation(selector, alpha):
    """Missing or out-of-range alpha and unknown selectors are rejected"""
    with pytest.raises(DomainError):
        SpaceSpec.from_selector(selector, alpha)


def test_hardy_inf_takes_no_alpha():
    with pytest.raises(DomainError):
        SpaceSpec(SpaceKind.HARDY_INF, 0.5)


def test_labels():
    assert SpaceSpec(SpaceKind.KORENBLUM, 0.5).label == "H^inf_0.5"
    assert SpaceSpec(SpaceKind.BLOCH_ALPHA, 1.5).label == "B^1.5"


def test_weights_at_origin():
    """w(0) is 1, or log 2 + 1/a for the log-weighted space"""
    assert weight(SpaceSpec(SpaceKind.KORENBLUM, 0.5), 0.0) == 1.0
    assert weight(SpaceSpec(SpaceKind.LOG_KORENBLUM, 0.5), 0.0) == pytest.approx(math.log(2.0) + 2.0)
    assert weight(SpaceSpec(SpaceKind.HARDY_INF), 0.7) == 1.0


def test_weight_rejects_radius_outside_disk():
    with pytest.raises(DomainError):
        weight(SpaceSpec(SpaceKind.KORENBLUM, 0.5), 1.0)
    with pytest.raises(DomainError):
        weight(SpaceSpec(SpaceKind.KORENBLUM, 0.5), np.array([0.2, -0.1]))


@pytest.mark.parametrize("alpha", [0.1 * k for k in range(1, 10)])
def test_g_aux_nondecreasing(alpha):
    """g(x) = x^a log(2e^(1/a)/x) has finite-difference slope >= -1e-12 on (0, 2)"""
    x = np.linspace(1e-6, 2.0, 10_000)
    slopes = np.diff(g_aux(alpha, x)) / np.diff(x)
    assert np.min(slopes) >= -1e-12


def test_g_aux_domain():
    with pytest.raises(DomainError):
        g_aux(1.0, 0.5)
    with pytest.raises(DomainError):
        g_aux(0.5, 2.5)


def test_korenblum_norm_of_extremal_function_is_one():
    """(1-r^2)^a f_a(r) = 1 for f_a = (1-z^2)^(-a)"""
    alpha = 0.5
    estimate = norm_estimate(SpaceSpec(SpaceKind.KORENBLUM, alpha), f_alpha_plain(alpha))
    assert estimate.value == pytest.approx(1.0, rel=1e-12)
    assert estimate.method["mode"] == "radial"


def test_log_korenblum_norm_of_extremal_function_is_one():
    alpha = 0.3
    estimate = norm_estimate(SpaceSpec(SpaceKind.LOG_KORENBLUM, alpha), f_alpha(alpha))
    assert estimate.value == pytest.approx(1.0, rel=1e-10)


def test_bloch_norm_of_h_alpha_approaches_one_at_boundary():
    """|h(0)| + sup (1-r^2)^a |h'(r)| = sup r, attained at the outermost radius"""
    alpha = 1.5
    estimate = norm_estimate(SpaceSpec(SpaceKind.BLOCH_ALPHA, alpha), h_alpha(alpha))
    assert estimate.value == pytest.approx(1.0, abs=1e-7)
    assert estimate.boundary_attained
    assert estimate.method["derivative"] == "closed-form"


def test_hardy_norm_radial_and_polar():
    """sup |1 + z| and sup |1 - z| are both 2; the second needs polar sampling"""
    hardy = SpaceSpec(SpaceKind.HARDY_INF)
    radial = norm_estimate(hardy, polynomial([1.0, 1.0]))
    polar = norm_estimate(hardy, polynomial([1.0, -1.0]))
    assert radial.value == pytest.approx(2.0, abs=1e-7)
    assert polar.value == pytest.approx(2.0, abs=1e-7)
    assert polar.method["mode"] == "polar"
    assert abs(polar.argsup + 1.0) < 1e-3


def test_bloch_norm_includes_value_at_zero():
    """For f = 2 + z: |f(0)| + sup (1-|z|^2)^a |f'| = 2 + 1"""
    estimate = norm_estimate(SpaceSpec(SpaceKind.BLOCH_ALPHA, 1.0), polynomial([2.0, 1.0]))
    assert estimate.value == pytest.approx(3.0, abs=1e-12)
    assert estimate.argsup == pytest.approx(0.0, abs=1e-6)


def test_derivative_selection():
    """Taylor data first, then closed forms, then complex step"""
    _, method = derivative_function(polynomial([1.0, 2.0]))
    assert method == "taylor"
    _, method = derivative_function(f_alpha_plain(0.5))
    assert method == "closed-form"


def test_numeric_derivative_complex_step_and_richardson():
    """Both numeric paths recover the derivative of (1 - z^2)^(-1/2)"""
    f = f_alpha_plain(0.5)
    x = np.array([0.3])
    expected = f.derivative_evaluator(x)
    np.testing.assert_allclose(numeric_derivative(f, x), expected, rtol=1e-12)
    z = np.array([0.2 + 0.3j])
    np.testing.assert_allclose(numeric_derivative(f, z), f.derivative_evaluator(z), rtol=1e-8)
