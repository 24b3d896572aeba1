import math

import numpy as np
import pytest

from engine.src.errors import DomainError
from engine.src.functions import (FunctionRegistry, constant, f_alpha, f_alpha_plain, h_alpha, h_one,
                                  monomial, polynomial, registry, resolve_function)


def test_polynomial_evaluation_and_derivative():
    """1 + 2z + 3z^2 and its derivative"""
    f = polynomial([1.0, 2.0, 3.0])
    assert f(np.array(0.5)) == pytest.approx(2.75)
    assert f.derivative_evaluator(np.array(0.5)) == pytest.approx(5.0)
    assert f.degree == 2
    assert f.radial_profile_known
    np.testing.assert_allclose(f.taylor_derivative(), [2.0, 6.0])


def test_polynomial_with_negative_coefficient_needs_polar_sampling():
    """|f| need not peak on the positive axis"""
    assert not polynomial([1.0, -1.0]).radial_profile_known


@pytest.mark.parametrize("coefficients", [[], [1.0, math.nan], [[1.0, 2.0]]])
def test_polynomial_rejects_bad_coefficients(coefficients):
    """Coefficients must be a non-empty finite list"""
    with pytest.raises(DomainError):
        polynomial(coefficients)


def test_constant_and_monomial():
    """const = 1 everywhere, monomial:k = z^k"""
    z = np.array([0.0, 0.5, -0.25 + 0.1j])
    np.testing.assert_allclose(constant()(z), np.ones(3))
    np.testing.assert_allclose(monomial(3)(z), z ** 3)
    assert constant().name == "const"
    with pytest.raises(DomainError):
        monomial(-1)


def test_f_alpha_unit_weighted_value():
    """(1-r^2)^a log(2e^(1/a)/(1-r^2)) f_a(r) = 1 on [0, 1)"""
    alpha = 0.4
    f = f_alpha(alpha)
    r = np.array([0.0, 0.3, 0.9, 0.999999])
    q = (1.0 - r) * (1.0 + r)
    weighted = q ** alpha * (math.log(2.0) + 1.0 / alpha - np.log(q)) * f(r)
    np.testing.assert_allclose(weighted, 1.0, rtol=1e-12)
    assert f.boundary_exponent == -alpha


def test_f_alpha_regular_part_factorization():
    """f(w) = (1-w)^e R(w)"""
    for f in (f_alpha(0.6), f_alpha_plain(0.6), h_alpha(1.5)):
        w = np.array([0.1, 0.5, 0.9])
        np.testing.assert_allclose(f(w), (1.0 - w) ** f.boundary_exponent * f.regular_part(w), rtol=1e-12)


def test_closed_form_derivatives_match_complex_step():
    """Closed-form derivatives agree with complex-step differentiation"""
    h = 1e-20
    x = np.array([0.1, 0.4, 0.8])
    for f in (f_alpha(0.3), f_alpha_plain(0.5), h_alpha(0.5), h_alpha(1.5), h_one()):
        numeric = np.imag(f(x + 1j * h)) / h
        np.testing.assert_allclose(f.derivative_evaluator(x), numeric, rtol=1e-10)


def test_h_alpha_properties():
    """h_a(0) = 0 and h_a'(z) = z/(1-z^2)^a"""
    f = h_alpha(0.75)
    assert f(np.array(0.0)) == pytest.approx(0.0, abs=1e-15)
    z = np.array(0.6)
    assert f.derivative_evaluator(z) == pytest.approx(0.6 / 0.64 ** 0.75)
    with pytest.raises(DomainError):
        h_alpha(1.0)


def test_h_one():
    """h_1(z) = log(1/(1-z))"""
    assert h_one()(np.array(0.5)) == pytest.approx(math.log(2.0))


@pytest.mark.parametrize("alpha", [None, 0.0, 1.0, -0.5])
def test_f_alpha_needs_alpha_in_unit_interval(alpha):
    """f_alpha is defined for 0 < alpha < 1"""
    with pytest.raises(DomainError):
        f_alpha(alpha)


def test_scaled_handle():
    """c * f keeps growth and scales values, Taylor data and derivatives"""
    f = polynomial([1.0, 1.0]).scaled(2.5)
    assert f(np.array(0.2)) == pytest.approx(3.0)
    np.testing.assert_allclose(f.taylor, [2.5, 2.5])
    assert f.derivative_evaluator(np.array(0.2)) == pytest.approx(2.5)
    with pytest.raises(DomainError):
        f.scaled(-1.0)


def test_registry_resolves_parametrized_ids():
    """Ids split at the first colon"""
    assert resolve_function("const").name == "const"
    assert resolve_function("monomial:4").degree == 4
    np.testing.assert_allclose(resolve_function("poly:[1, 0, 2]").taylor, [1.0, 0.0, 2.0])
    assert resolve_function("f_alpha", 0.5).boundary_exponent == -0.5
    assert "h_one" in registry.names


@pytest.mark.parametrize("identifier", ["sin", "monomial:x", "poly:[1,", "poly:{\"a\": 1}"])
def test_registry_rejects_unknown_or_malformed(identifier):
    """Unknown ids and malformed parameters are domain errors"""
    with pytest.raises(DomainError):
        resolve_function(identifier)


def test_registry_custom_builder():
    """Builders receive the argument text and alpha"""
    custom = FunctionRegistry()
    custom.register("scaled_const", lambda argument, alpha: constant().scaled(float(argument)))
    assert custom.resolve("scaled_const:3")(np.array(0.1)) == pytest.approx(3.0)
    assert custom.names == ["scaled_const"]
