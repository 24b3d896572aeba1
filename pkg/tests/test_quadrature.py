import math
from unittest.mock import patch

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from engine.src.errors import ConvergenceError, DomainError
from engine.src.quadrature import (GAUSS_JACOBI, GRADED_JACOBI, TANH_SINH, SingularIntegrand,
                                   best_effort, crosscheck, integrate, integrate_with_log)
from engine.src.special import beta


def ones(t, tc):
    return np.ones_like(t)


@pytest.mark.parametrize("method", [TANH_SINH, GAUSS_JACOBI])
def test_polynomial_integrand(method):
    """int_0^1 t^2 dt = 1/3"""
    result = integrate(SingularIntegrand.from_function(lambda t: t ** 2), method=method)
    assert result.value == pytest.approx(1.0 / 3.0, rel=1e-12)
    assert result.method == method


@pytest.mark.parametrize("alpha", [0.1 + 0.05 * k for k in range(17)])
def test_reflection_identity(alpha):
    """int_0^1 t^(a-1) (1-t)^(-a) dt = pi/sin(a pi) to 1e-8"""
    result = integrate(SingularIntegrand(ones, alpha - 1.0, -alpha))
    assert result.value == pytest.approx(math.pi / math.sin(alpha * math.pi), rel=1e-8)


@pytest.mark.parametrize("method", [TANH_SINH, GAUSS_JACOBI])
@pytest.mark.parametrize("s,t", [(0.5, 0.5), (0.3, 2.0), (1.5, 0.25)])
def test_beta_integral(method, s, t):
    """Endpoint exponents s-1 and t-1 give B(s, t)"""
    result = integrate(SingularIntegrand(ones, s - 1.0, t - 1.0), method=method)
    assert result.value == pytest.approx(beta(s, t).value, rel=1e-9)


def test_complement_is_accurate_near_one():
    """tc is 1 - t without cancellation: int_0^1 log(1-t) dt = -1"""
    result = integrate(SingularIntegrand(lambda t, tc: np.log(tc)))
    assert result.value == pytest.approx(-1.0, rel=1e-10)


def test_sub_interval_with_left_exponent():
    """Exponents refer to (t - a): int_a^b (t-a)^(-1/2) dt = 2 sqrt(b - a)"""
    result = integrate(SingularIntegrand(ones, -0.5, 0.0), interval=(0.25, 0.75))
    assert result.value == pytest.approx(2.0 * math.sqrt(0.5), rel=1e-10)


def test_sub_interval_complement_is_global():
    """tc is 1 - t on any sub-interval: int_0^(1/2) (1-t) dt = 3/8"""
    result = integrate(SingularIntegrand(lambda t, tc: tc), interval=(0.0, 0.5))
    assert result.value == pytest.approx(0.375, rel=1e-12)


def test_batched_integrand():
    """A leading batch axis gives one integral per row"""
    scales = np.array([1.0, 2.0, 3.0])[:, None]
    result = integrate(SingularIntegrand(lambda t, tc: scales * t))
    np.testing.assert_allclose(result.value, [0.5, 1.0, 1.5], rtol=1e-12)


def test_complex_integrand():
    """Complex smooth parts integrate componentwise"""
    z = 0.5j
    result = integrate(SingularIntegrand(lambda t, tc: 1.0 / (1.0 - t * z)))
    expected = -np.log(1.0 - z) / z
    assert abs(result.value - expected) < 1e-11


@pytest.mark.parametrize("exponent", [-1.0, -1.5, float("nan")])
def test_non_integrable_exponent(exponent):
    """Exponents <= -1 are rejected before any evaluation"""
    with pytest.raises(DomainError):
        integrate(SingularIntegrand(ones, exponent, 0.0))


def test_bad_tolerance_and_method():
    """Tolerances must be positive and the method known"""
    with pytest.raises(DomainError):
        integrate(SingularIntegrand(ones), tol_abs=0.0)
    with pytest.raises(DomainError):
        integrate(SingularIntegrand(ones), method="simpson")
    with pytest.raises(DomainError):
        integrate(SingularIntegrand(ones), interval=(0.5, 0.25))


def test_budget_exhaustion_carries_best_estimate():
    """A tiny budget raises ConvergenceError with the best estimate"""
    with pytest.raises(ConvergenceError) as info:
        integrate(SingularIntegrand(ones, -0.5, -0.5), max_evaluations=10)
    assert info.value.best_estimate is not None
    assert info.value.abs_error is not None


def test_best_effort_returns_estimate():
    """best_effort hands back the non-converged estimate instead of raising"""
    result = best_effort(SingularIntegrand(ones, -0.5, -0.5), max_evaluations=10)
    assert result.levels == -1
    assert result.value == pytest.approx(math.pi, rel=1e-2)


def test_integrate_with_log():
    """int_0^1 dt / (2 - t) = log 2"""
    integrand = SingularIntegrand(ones)
    result = integrate_with_log(integrand, lambda t, tc: 1.0 + tc)
    assert result.value == pytest.approx(math.log(2.0), rel=1e-12)


def test_integrate_with_log_requires_positive_factor():
    """A log factor that changes sign is rejected"""
    with pytest.raises(DomainError):
        integrate_with_log(SingularIntegrand(ones), lambda t, tc: t - 0.5)


def test_nonfinite_integrand():
    """A non-finite smooth part at an interior node is an error"""
    with pytest.raises(DomainError):
        integrate(SingularIntegrand(lambda t, tc: 1.0 / (t - 0.5)))


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
def test_crosscheck_agrees(alpha):
    """tanh-sinh and the graded Gauss-Jacobi oracle agree on an endpoint-singular integrand with a log factor"""
    c = math.log(2.0) + 1.0 / alpha
    integrand = SingularIntegrand(lambda t, tc: (1.0 + t) ** (-alpha), 0.0, -alpha)
    check = crosscheck(integrand, lambda t, tc: c - np.log(tc * (1.0 + t)))
    assert check.agrees
    assert check.oracle_converged
    assert check.oracle.method == GRADED_JACOBI
    assert check.oracle.value == pytest.approx(check.primary.value, rel=1e-9)


def test_crosscheck_without_log_factor_uses_plain_jacobi():
    check = crosscheck(SingularIntegrand(lambda t, tc: np.cos(t), -0.5, -0.5))
    assert check.agrees
    assert check.oracle.method == GAUSS_JACOBI


@patch("engine.src.quadrature._integrate_gauss_jacobi")
def test_crosscheck_fails_when_oracle_does_not_converge(mock_gauss_jacobi):
    """A non-converged oracle never counts as agreement, however large its error estimate"""
    mock_gauss_jacobi.side_effect = ConvergenceError("out of nodes", best_estimate=2.0, abs_error=1.0)

    check = crosscheck(SingularIntegrand.from_function(lambda t: 2.0 * t + 1.0))

    assert check.primary.value == pytest.approx(2.0, rel=1e-12)
    assert not check.oracle_converged
    assert not check.agrees
    assert check.oracle.levels == -1


@pytest.mark.parametrize("s,t", [(0.5, 0.5), (0.3, 2.0), (1.5, 0.25)])
def test_graded_jacobi_beta_integral(s, t):
    """The graded rule reproduces B(s, t)"""
    result = integrate(SingularIntegrand(ones, s - 1.0, t - 1.0), method=GRADED_JACOBI)
    assert result.value == pytest.approx(beta(s, t).value, rel=1e-10)
    assert result.method == GRADED_JACOBI


def test_graded_jacobi_log_endpoint():
    """int_0^1 dt / (1 + log(1/(1-t))) = e E1(1), which plain Gauss-Jacobi cannot reach"""
    reference = 0.5963473623231940
    integrand = SingularIntegrand(lambda t, tc: 1.0 / (1.0 - np.log(tc)))
    result = integrate(integrand, method=GRADED_JACOBI)
    assert result.value == pytest.approx(reference, rel=1e-10)
    with pytest.raises(ConvergenceError):
        integrate(integrand, method=GAUSS_JACOBI)


def test_graded_jacobi_whole_interval_only():
    with pytest.raises(DomainError):
        integrate(SingularIntegrand(ones), method=GRADED_JACOBI, interval=(0.0, 0.5))


@settings(max_examples=25, deadline=None)
@given(a=st.floats(min_value=-5.0, max_value=5.0), b=st.floats(min_value=-5.0, max_value=5.0))
def test_linearity(a, b):
    """integrate(a f + b g) = a integrate(f) + b integrate(g)"""
    f = SingularIntegrand(lambda t, tc: np.cos(t), 0.0, -0.5)
    g = SingularIntegrand(lambda t, tc: np.exp(t), 0.0, -0.5)
    h = SingularIntegrand(lambda t, tc: a * np.cos(t) + b * np.exp(t), 0.0, -0.5)
    rf, rg, rh = integrate(f), integrate(g), integrate(h)
    combined = a * rf.value + b * rg.value
    allowed = abs(a) * rf.abs_error + abs(b) * rg.abs_error + rh.abs_error + 1e-11 * (abs(a) + abs(b) + 1.0)
    assert abs(rh.value - combined) <= allowed + 1e-10 * abs(combined)
