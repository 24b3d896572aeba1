"""
Singular Quadrature
===================

Overview:
---------
Integration over an interval [a, b] (default [0, 1]) of integrands of the form

    (t - a)^left_exponent * (b - t)^right_exponent * smooth_part(t, 1 - t)

where the exponents are declared by the caller and may be anywhere in (-1, inf).
This is the workhorse behind every norm formula of the engine.

Features:
---------
* Double-exponential (tanh-sinh) rule, the default backend. Nodes are generated
  as t = expit(2y), 1 - t = expit(-2y), so the complement 1 - t reaches 1e-300
  without cancellation. Smooth parts receive both t and 1 - t.
* Gauss-Jacobi rule with the declared exponents as the Jacobi weight, used as
  an independent cross-check oracle.
* Graded Gauss-Jacobi rule: each half of [0, 1] is mapped by t = s^m/2 towards
  its endpoint, so smooth parts with a logarithmic endpoint factor still converge.
* Batched integrands: a smooth part may return an array with leading batch
  axes; one node set then integrates a whole family (e.g. many points z).
* Logarithmic denominators through integrate_with_log.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy.special import expit, roots_jacobi

from .errors import DomainError, ConvergenceError

logger = logging.getLogger(__name__)

DEFAULT_TOL_ABS = 1e-12
DEFAULT_TOL_REL = 1e-10
DEFAULT_MAX_EVALUATIONS = 2_000_000

TANH_SINH = "tanh-sinh"
GAUSS_JACOBI = "gauss-jacobi"
GRADED_JACOBI = "graded-jacobi"

Evaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]
Value = Union[float, complex, np.ndarray]

_EPS = float(np.finfo(float).eps)

# y = (pi/2) sinh(tau) is capped so that expit(-2y) stays a normal double
_Y_MAX = 350.0
_TAU_MAX = math.asinh(2.0 * _Y_MAX / math.pi)
_TAU_CUT = math.floor(_TAU_MAX / 0.5) * 0.5
_H0 = 0.5
_MIN_LEVELS = 3
_MAX_LEVELS = 14
_LOG_TINY = -700.0

_GJ_START_NODES = 16
_GJ_MAX_NODES = 2048
# power of s left at each graded end, and the cap on the grading exponent m
_GRADE_ORDER = 8.0
_GRADE_MAX = 64
_TINY = float(np.finfo(float).tiny)


@dataclass(frozen=True)
class SingularIntegrand:
    """
    Integrand with algebraic endpoint behavior factored out.

    Attributes:
        smooth_part: Evaluator (t, tc) -> values, tc = 1 - t given without cancellation
        left_exponent: Power of (t - a) at the left end, must be > -1
        right_exponent: Power of (b - t) at the right end, must be > -1
    """
    smooth_part: Evaluator
    left_exponent: float = 0.0
    right_exponent: float = 0.0

    @classmethod
    def from_function(cls, fn: Callable[[np.ndarray], np.ndarray],
                      left_exponent: float = 0.0,
                      right_exponent: float = 0.0) -> "SingularIntegrand":
        """Wrap a one-argument smooth part that does not need the complement."""
        return cls(lambda t, tc: fn(t), left_exponent, right_exponent)

    def validate(self) -> None:
        """
        Check integrability of the declared exponents.

        Raises:
            DomainError: If an exponent is not finite or is <= -1
        """
        for side, exponent in (("left", self.left_exponent), ("right", self.right_exponent)):
            if not math.isfinite(exponent) or exponent <= -1.0:
                raise DomainError(
                    f"{side} exponent {exponent} is not integrable (must be > -1)")


@dataclass(frozen=True)
class QuadResult:
    """
    Result of a quadrature.

    Attributes:
        value: Integral (scalar, or array for batched integrands)
        abs_error: Error estimate, same shape as value
        evaluations: Number of smooth-part evaluations (nodes times batch size)
        method: Backend that produced the value
        levels: Refinement levels (tanh-sinh) or node doublings (Gauss-Jacobi)
    """
    value: Value
    abs_error: Union[float, np.ndarray]
    evaluations: int
    method: str = TANH_SINH
    levels: int = 0


@dataclass(frozen=True)
class CrossCheck:
    """Two-backend comparison of one integral."""
    primary: QuadResult
    oracle: QuadResult
    difference: float
    agrees: bool
    oracle_converged: bool = True


def _as_output(x: np.ndarray) -> Value:
    x = np.asarray(x)
    if x.ndim == 0:
        return complex(x) if np.iscomplexobj(x) else float(x)
    return x


def _converged(error: np.ndarray, estimate: np.ndarray, tol_abs: float, tol_rel: float) -> bool:
    return bool(np.all(error <= np.maximum(tol_abs, tol_rel * np.abs(estimate))))


def _check_interval(interval: Tuple[float, float]) -> Tuple[float, float]:
    a, b = float(interval[0]), float(interval[1])
    if not (0.0 <= a < b <= 1.0):
        raise DomainError(f"integration interval must satisfy 0 <= a < b <= 1, got {interval}")
    return a, b


def _check_tolerances(tol_abs: float, tol_rel: float) -> None:
    if not (tol_abs > 0 and tol_rel > 0):
        raise DomainError(f"tolerances must be positive, got tol_abs={tol_abs}, tol_rel={tol_rel}")


class _TanhSinhRule:
    """Nested tanh-sinh levels on [a, b] for one integrand, truncated at |tau| <= _TAU_CUT."""

    def __init__(self, integrand: SingularIntegrand, a: float, b: float):
        self.integrand = integrand
        self.a = a
        self.b = b
        self.width = b - a
        self.nodes = 0
        self.batch = 1
        self._ends = self._end_values()

    def _terms(self, tau: np.ndarray) -> np.ndarray:
        le = self.integrand.left_exponent
        re = self.integrand.right_exponent
        y = 0.5 * np.pi * np.sinh(tau)
        log_u = -np.logaddexp(0.0, -2.0 * y)
        log_uc = -np.logaddexp(0.0, 2.0 * y)
        log_w = (np.log(np.pi * np.cosh(tau)) + (le + 1.0) * log_u + (re + 1.0) * log_uc
                 + (le + re + 1.0) * math.log(self.width))
        keep = log_w > _LOG_TINY
        if not np.any(keep):
            return np.zeros(0)
        t = self.a + self.width * expit(2.0 * y[keep])
        tc = (1.0 - self.b) + self.width * expit(-2.0 * y[keep])
        values = np.asarray(self.integrand.smooth_part(t, tc))
        terms = values * np.exp(log_w[keep])
        if not np.all(np.isfinite(terms)):
            finite = np.all(np.isfinite(np.reshape(terms, (-1, t.size))), axis=0)
            raise DomainError(f"integrand is not finite at t = {t[~finite][:3]}")
        self.nodes += int(keep.sum())
        self.batch = max(1, values.size // t.size)
        return terms

    def _end_values(self) -> Tuple[np.ndarray, np.ndarray]:
        y = 0.5 * np.pi * math.sinh(_TAU_CUT)
        tiny, near_one = expit(-2.0 * y), expit(2.0 * y)
        left = np.array([self.a + self.width * tiny])
        right = np.array([self.b - self.width * tiny])
        ends = []
        for t, tc in ((left, np.array([(1.0 - self.b) + self.width * near_one])),
                      (right, np.array([(1.0 - self.b) + self.width * tiny]))):
            with np.errstate(all="ignore"):
                value = np.asarray(self.integrand.smooth_part(t, tc))
            if value.ndim > 0:
                value = value[..., 0]
            ends.append(np.where(np.isfinite(value), value, 0.0))
        return ends[0], ends[1]

    def tail(self, h: float) -> np.ndarray:
        """Analytic mass of s(end)*u^e over the part of (0, 1) beyond the last trapezoid cell."""
        y = 0.5 * np.pi * math.sinh(_TAU_CUT + 0.5 * h)
        log_eps = -float(np.logaddexp(0.0, 2.0 * y))
        le = self.integrand.left_exponent
        re = self.integrand.right_exponent
        scale = self.width ** (le + re + 1.0)
        left = self._ends[0] * math.exp((le + 1.0) * log_eps) / (le + 1.0)
        right = self._ends[1] * math.exp((re + 1.0) * log_eps) / (re + 1.0)
        return scale * (left + right)

    def level_sum(self, level: int) -> Tuple[np.ndarray, np.ndarray, float]:
        h = _H0 / 2 ** level
        k_max = int(round(_TAU_CUT / h))
        k = np.arange(-k_max, k_max + 1)
        if level > 0:
            k = k[k % 2 != 0]
        terms = self._terms(k * h)
        if terms.size == 0:
            return np.zeros(()), np.zeros(()), h
        return terms.sum(axis=-1), np.abs(terms).sum(axis=-1), h


def _integrate_tanh_sinh(integrand: SingularIntegrand, tol_abs: float, tol_rel: float,
                         a: float, b: float, max_evaluations: int) -> QuadResult:
    rule = _TanhSinhRule(integrand, a, b)
    total, total_abs, h = rule.level_sum(0)
    estimate = h * total + rule.tail(h)
    error = np.full(np.shape(estimate), np.inf)
    for level in range(1, _MAX_LEVELS + 1):
        new_sum, new_abs, h = rule.level_sum(level)
        total = total + new_sum
        total_abs = total_abs + new_abs
        previous = estimate
        estimate = h * total + rule.tail(h)
        error = np.abs(estimate - previous) + _EPS * h * total_abs
        logger.debug(f"tanh-sinh level {level}: nodes={rule.nodes}, max error={np.max(error):.3e}")
        if level >= _MIN_LEVELS and _converged(error, estimate, tol_abs, tol_rel):
            return QuadResult(_as_output(estimate), _as_output(error),
                              rule.nodes * rule.batch, TANH_SINH, level)
        if rule.nodes > max_evaluations:
            break
    raise ConvergenceError(
        f"tanh-sinh did not reach tol_abs={tol_abs:g}, tol_rel={tol_rel:g} "
        f"within {rule.nodes} nodes",
        best_estimate=_as_output(estimate), abs_error=_as_output(error))


def _integrate_gauss_jacobi(integrand: SingularIntegrand, tol_abs: float, tol_rel: float,
                            a: float, b: float, max_evaluations: int) -> QuadResult:
    le = integrand.left_exponent
    re = integrand.right_exponent
    width = b - a
    scale = (width / 2.0) ** (le + re + 1.0)
    n = _GJ_START_NODES
    evaluations = 0
    previous = None
    estimate = None
    error = np.inf
    doublings = 0
    while n <= _GJ_MAX_NODES and evaluations + n <= max_evaluations:
        # scipy's Jacobi weight is (1-x)^alpha (1+x)^beta on [-1, 1]
        x, w = roots_jacobi(n, re, le)
        t = a + width * (1.0 + x) / 2.0
        tc = (1.0 - b) + width * (1.0 - x) / 2.0
        values = np.asarray(integrand.smooth_part(t, tc))
        estimate = scale * np.sum(values * w, axis=-1)
        evaluations += n
        if previous is not None:
            error = np.abs(estimate - previous)
            if _converged(error, estimate, tol_abs, tol_rel):
                return QuadResult(_as_output(estimate), _as_output(error),
                                  evaluations, GAUSS_JACOBI, doublings)
        previous = estimate
        n *= 2
        doublings += 1
    raise ConvergenceError(
        f"Gauss-Jacobi did not converge with {n // 2} nodes",
        best_estimate=None if estimate is None else _as_output(estimate),
        abs_error=_as_output(error))


def _graded_end(exponent: float) -> Tuple[int, float]:
    m = min(_GRADE_MAX, max(1, math.ceil(_GRADE_ORDER / (exponent + 1.0))))
    return m, m * (exponent + 1.0) - 1.0


def _integrate_graded_jacobi(integrand: SingularIntegrand, tol_abs: float, tol_rel: float,
                             max_evaluations: int) -> QuadResult:
    le = integrand.left_exponent
    re = integrand.right_exponent
    m_left, p_left = _graded_end(le)
    m_right, p_right = _graded_end(re)
    n = _GJ_START_NODES
    evaluations = 0
    previous = None
    estimate = None
    error = np.inf
    doublings = 0
    while n <= _GJ_MAX_NODES and evaluations + 2 * n <= max_evaluations:
        # [0, 1/2] with t = s^m/2, then [1/2, 1] with 1 - t = s^m/2; s^p goes into the weight
        x, w = roots_jacobi(n, 0.0, p_left)
        s = 0.5 * (1.0 + x)
        t = np.maximum(0.5 * s ** m_left, _TINY)
        left = np.sum(np.asarray(integrand.smooth_part(t, 1.0 - t)) * (1.0 - t) ** re * w, axis=-1)
        left = left * m_left * 0.5 ** (le + 1.0) * 0.5 ** (p_left + 1.0)
        x, w = roots_jacobi(n, 0.0, p_right)
        s = 0.5 * (1.0 + x)
        tc = np.maximum(0.5 * s ** m_right, _TINY)
        right = np.sum(np.asarray(integrand.smooth_part(1.0 - tc, tc)) * (1.0 - tc) ** le * w, axis=-1)
        right = right * m_right * 0.5 ** (re + 1.0) * 0.5 ** (p_right + 1.0)
        estimate = left + right
        evaluations += 2 * n
        if previous is not None:
            error = np.abs(estimate - previous)
            if _converged(error, estimate, tol_abs, tol_rel):
                return QuadResult(_as_output(estimate), _as_output(error),
                                  evaluations, GRADED_JACOBI, doublings)
        previous = estimate
        n *= 2
        doublings += 1
    raise ConvergenceError(
        f"graded Gauss-Jacobi did not converge with {n // 2} nodes per half",
        best_estimate=None if estimate is None else _as_output(estimate),
        abs_error=_as_output(error))


def integrate(integrand: SingularIntegrand,
              tol_abs: float = DEFAULT_TOL_ABS,
              tol_rel: float = DEFAULT_TOL_REL,
              method: str = TANH_SINH,
              interval: Tuple[float, float] = (0.0, 1.0),
              max_evaluations: int = DEFAULT_MAX_EVALUATIONS) -> QuadResult:
    """
    Integrate a singular integrand.

    Args:
        integrand: Smooth part and declared endpoint exponents
        tol_abs: Absolute tolerance
        tol_rel: Relative tolerance; success means error <= max(tol_abs, tol_rel*|value|)
        method: "tanh-sinh" (default), "gauss-jacobi" or "graded-jacobi"
        interval: Sub-interval [a, b] of [0, 1]; the graded rule needs the whole interval
        max_evaluations: Node budget

    Returns:
        QuadResult: Value, error estimate and bookkeeping

    Raises:
        DomainError: For non-integrable exponents, bad tolerances or a non-finite integrand
        ConvergenceError: If the budget is exhausted; carries the best estimate
    """
    integrand.validate()
    _check_tolerances(tol_abs, tol_rel)
    a, b = _check_interval(interval)
    if method == TANH_SINH:
        return _integrate_tanh_sinh(integrand, tol_abs, tol_rel, a, b, max_evaluations)
    if method == GAUSS_JACOBI:
        return _integrate_gauss_jacobi(integrand, tol_abs, tol_rel, a, b, max_evaluations)
    if method == GRADED_JACOBI:
        if (a, b) != (0.0, 1.0):
            raise DomainError(f"the graded rule integrates over [0, 1] only, got {interval}")
        return _integrate_graded_jacobi(integrand, tol_abs, tol_rel, max_evaluations)
    raise DomainError(f"unknown quadrature method '{method}'")


def integrate_with_log(integrand: SingularIntegrand,
                       log_factor: Evaluator,
                       tol_abs: float = DEFAULT_TOL_ABS,
                       tol_rel: float = DEFAULT_TOL_REL,
                       **kwargs) -> QuadResult:
    """
    Integrate smooth_part / log_factor against the declared singular weights.

    Args:
        integrand: Smooth part and exponents
        log_factor: Evaluator (t, tc) -> strictly positive values
        tol_abs: Absolute tolerance
        tol_rel: Relative tolerance
        **kwargs: Passed on to integrate (method, interval, max_evaluations)

    Returns:
        QuadResult: As integrate

    Raises:
        DomainError: If log_factor is not strictly positive at a node
    """
    def smooth(t: np.ndarray, tc: np.ndarray) -> np.ndarray:
        factor = np.asarray(log_factor(t, tc))
        if not np.all(factor > 0):
            raise DomainError("log factor must be strictly positive on (0, 1)")
        return integrand.smooth_part(t, tc) / factor

    wrapped = SingularIntegrand(smooth, integrand.left_exponent, integrand.right_exponent)
    return integrate(wrapped, tol_abs, tol_rel, **kwargs)


def best_effort(integrand: SingularIntegrand, **kwargs) -> QuadResult:
    """
    Like integrate, but returns the best estimate instead of raising on non-convergence.

    The returned abs_error is the estimate carried by the ConvergenceError.
    """
    try:
        return integrate(integrand, **kwargs)
    except ConvergenceError as e:
        logger.warning(f"Using non-converged quadrature estimate: {e}")
        method = kwargs.get("method", TANH_SINH)
        return QuadResult(e.best_estimate, e.abs_error, 0, method, -1)


def crosscheck(integrand: SingularIntegrand,
               log_factor: Optional[Evaluator] = None,
               tol_abs: float = DEFAULT_TOL_ABS,
               tol_rel: float = DEFAULT_TOL_REL) -> CrossCheck:
    """
    Integrate with both backends and compare.

    The oracle is Gauss-Jacobi, graded towards both ends when a log factor is
    present. The backends agree when the oracle converged and their difference
    is within 10x the larger reported error or within the requested tolerance.

    Args:
        integrand: Integrand to check
        log_factor: Optional logarithmic denominator
        tol_abs: Absolute tolerance for both backends
        tol_rel: Relative tolerance for both backends

    Returns:
        CrossCheck: Both results, their difference and the verdict
    """
    oracle_method = GAUSS_JACOBI
    if log_factor is not None:
        base = integrand

        def smooth(t, tc):
            return base.smooth_part(t, tc) / log_factor(t, tc)

        integrand = SingularIntegrand(smooth, base.left_exponent, base.right_exponent)
        oracle_method = GRADED_JACOBI
    primary = integrate(integrand, tol_abs, tol_rel, method=TANH_SINH)
    try:
        oracle = integrate(integrand, tol_abs, tol_rel, method=oracle_method)
        converged = True
    except ConvergenceError as e:
        logger.warning(f"Cross-check oracle did not converge: {e}")
        estimate = math.nan if e.best_estimate is None else e.best_estimate
        error = math.inf if e.abs_error is None else e.abs_error
        oracle = QuadResult(estimate, error, 0, oracle_method, -1)
        converged = False
    difference = float(np.max(np.abs(np.asarray(primary.value) - np.asarray(oracle.value))))
    if not math.isfinite(difference):
        difference = math.inf
    allowed = max(10.0 * max(float(np.max(primary.abs_error)), float(np.max(oracle.abs_error))),
                  tol_abs, tol_rel * float(np.max(np.abs(primary.value))))
    return CrossCheck(primary, oracle, difference, converged and difference <= allowed, converged)
