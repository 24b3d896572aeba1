"""
Norm Formulas
=============

Overview:
---------
Evaluators for the operator norm of the Hilbert matrix operator between the
weighted spaces of the disk: sup-integral kernels, the piecewise suprema of the
weighted composition operators T_t, closed-form bounds and exact values.

Features:
---------
* Formula registry (BoundFormula) with the exact alpha domain of every result
* Kernel integrals batched over radii, sup search with boundary limits
* Lemma suprema with a cancellation-free critical point
* Typed verdicts for unbounded settings and divergence probes
* Setting resolution from the command-line space selectors

Every kernel is written in the variables rc = 1 - r and tc = 1 - t so that the
factors (t-1)r + 1 = rc + r t and 1 - phi_t(r)^2 = rc tc ((t-1)r+1+t)/((t-1)r+1)^2
keep full precision near the corner r -> 1, t -> 1.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from .errors import DomainError, NumericalError, UnboundedRegimeError
from .quadrature import (DEFAULT_MAX_EVALUATIONS, DEFAULT_TOL_ABS, DEFAULT_TOL_REL,
                         QuadResult, SingularIntegrand, best_effort, integrate, integrate_with_log)
from .spaces import SpaceKind, SpaceSpec
from .special import reflection
from .supremum import (DEFAULT_R_MAX, DEFAULT_RADII, SupSearchResult, boundary_limit,
                       log_variable, sup_over_radius)

logger = logging.getLogger(__name__)

LOG2 = math.log(2.0)
TWO_THIRDS = 2.0 / 3.0
DISCRIMINANT_FLOOR = -1e-14
DIVERGENCE_FACTOR = 10.0
PROBE_DECADES = (1, 2, 3, 4, 5, 6)
MAX_PROBE_DECADE = 12
# probes r = 1 - 10^(-k); below k = 20 the rc^a power correction spoils the log-variable fit
TH41_DECADES = (30, 60, 120)
PREMISE_GRID = 100

EXACT = "exact"
LOWER = "lower"
UPPER = "upper"
BRACKET = "bracket"
UNBOUNDED = "unbounded"

BLOCH_ALPHA_LE1 = "Bloch_alpha_le1"
BLOCH_ALPHA_EQ1 = "Bloch_alpha_eq1"
BLOCH_ALPHA_GE2 = "Bloch_alpha_ge2"
KORENBLUM_TO_BLOCH_ALPHA_GE1 = "Korenblum_to_Bloch_alpha_ge1"
HARDY_INF_SELF = "Hardy_inf_self"
PROBE_CASES = (BLOCH_ALPHA_LE1, BLOCH_ALPHA_EQ1, BLOCH_ALPHA_GE2,
               KORENBLUM_TO_BLOCH_ALPHA_GE1, HARDY_INF_SELF)


@dataclass(frozen=True)
class Tolerance:
    """Quadrature tolerances shared by every formula."""
    abs: float = DEFAULT_TOL_ABS
    rel: float = DEFAULT_TOL_REL
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS

    def kwargs(self) -> Dict[str, Any]:
        return {"tol_abs": self.abs, "tol_rel": self.rel, "max_evaluations": self.max_evaluations}


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True)
class BoundFormula:
    """
    A registered norm expression.

    Attributes:
        id: Formula identifier, e.g. TH31_EXACT
        kind: exact, lower or upper
        alpha_domain: (lo, hi, lo_closed, hi_closed); None when the result has no alpha
        setting: Source and target spaces in words
        expression: The quantity that is evaluated
    """
    id: str
    kind: str
    alpha_domain: Optional[Tuple[float, float, bool, bool]]
    setting: str
    expression: str

    def contains(self, alpha: Optional[float]) -> bool:
        if self.alpha_domain is None:
            return True
        if alpha is None or not math.isfinite(alpha):
            return False
        lo, hi, lo_closed, hi_closed = self.alpha_domain
        above = alpha >= lo if lo_closed else alpha > lo
        below = alpha <= hi if hi_closed else alpha < hi
        return above and below

    def domain_text(self) -> str:
        if self.alpha_domain is None:
            return "no alpha"
        lo, hi, lo_closed, hi_closed = self.alpha_domain
        return f"{'[' if lo_closed else '('}{lo:g}, {hi:g}{']' if hi_closed else ')'}"

    def to_dict(self) -> Dict[str, Any]:
        return {"id": self.id, "kind": self.kind, "alpha_domain": self.domain_text(),
                "setting": self.setting, "expression": self.expression}


FORMULAS: Dict[str, BoundFormula] = {f.id: f for f in (
    BoundFormula("TH31_EXACT", EXACT, (0.0, 1.0, False, False), "log-korenblum -> korenblum",
                 "sup_r int_0^1 Phi(r, t) dt"),
    BoundFormula("TH31_LOWER", LOWER, (0.0, 1.0, False, False), "log-korenblum -> korenblum",
                 "int_0^1 dt/((1-t^2)^a log(2e^(1/a)/(1-t^2)))"),
    BoundFormula("LE32_SUP", EXACT, (0.5, 1.0, False, False), "T_t on korenblum",
                 "sup_z |1-(1-t)z|^(2a-1) ((1-|z|^2)/(|1-(1-t)z|^2-t^2))^a"),
    BoundFormula("LE33_TT", UPPER, (0.0, 1.0, False, False), "T_t, log-korenblum -> korenblum",
                 "lemma supremum / log((2-t)^2 e^(1/a)/(2-2t))"),
    BoundFormula("TH34_UPPER", UPPER, (0.0, 1.0, False, False), "log-korenblum -> korenblum",
                 "int_0^1 T_t bound dt"),
    BoundFormula("TH41_EXACT", EXACT, (0.0, 1.0, False, False), "log-korenblum -> log-korenblum",
                 "sup_r int_0^1 Psi(r, t) dt"),
    BoundFormula("TH41_LOWER", LOWER, (0.0, 1.0, False, False), "log-korenblum -> log-korenblum",
                 "pi/sin(a pi)"),
    BoundFormula("TH52_LOWER", LOWER, (1.0, 2.0, False, False), "bloch-alpha -> bloch-alpha",
                 "int_0^1 (1-t^2)^(1-a)/(2(a-1)) dt - 1/(2(a-1)) + pi/sin(pi(a-1))"),
    BoundFormula("TH53_UPPER", UPPER, (1.0, 2.0, False, False), "bloch-alpha -> bloch-alpha",
                 "2^a pi/sin((a-1)pi) + 1/(2-a)"),
    BoundFormula("TH61_EXACT", EXACT, None, "hardy-inf -> bloch", "3"),
    BoundFormula("TH71_EXACT", EXACT, (0.0, TWO_THIRDS, False, True), "korenblum -> bloch-plus-one",
                 "int_0^1 (1-t^2)^(-a) dt + 2 a pi/sin(a pi)"),
    BoundFormula("TH71_LOWER", LOWER, (TWO_THIRDS, 1.0, False, False), "korenblum -> bloch-plus-one",
                 "int_0^1 (1-t^2)^(-a) dt + 2 a pi/sin(a pi)"),
    BoundFormula("TH71_UPPER", UPPER, (TWO_THIRDS, 1.0, False, False), "korenblum -> bloch-plus-one",
                 "int_0^1 (1-t^2)^(-a) dt + 2 int_0^1 (1-t)^(1-a) t^(-a) dt"),
)}


def check_alpha(formula_id: str, alpha: Optional[float]) -> None:
    """
    Reject an alpha outside a formula's hypotheses.

    Raises:
        DomainError: For an unknown id or an alpha outside the domain
    """
    formula = FORMULAS.get(formula_id)
    if formula is None:
        raise DomainError(f"unknown formula '{formula_id}'")
    if not formula.contains(alpha):
        raise DomainError(f"{formula_id} requires alpha in {formula.domain_text()}, got {alpha}")


@dataclass(frozen=True)
class BoundReport:
    """
    Tagged norm result: exact value, bracket, or unbounded verdict.

    Attributes:
        theorem: Formula family, e.g. TH71
        alpha: Parameter
        kind: exact, bracket or unbounded
        value: Exact value (kind exact)
        lower: Lower bound (exact and bracket)
        upper: Upper bound (exact and bracket)
        regime: Probe case naming the unbounded regime
        details: Components and diagnostics
    """
    theorem: str
    alpha: Optional[float]
    kind: str
    value: Optional[float] = None
    lower: Optional[float] = None
    upper: Optional[float] = None
    regime: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"theorem": self.theorem, "alpha": self.alpha, "kind": self.kind,
                "value": self.value, "lower": self.lower, "upper": self.upper,
                "regime": self.regime, "details": self.details}


@dataclass(frozen=True)
class DivergenceReport:
    """
    A diverging quantity sampled along r_k = 1 - 10^(-k).

    Attributes:
        case: Probe case
        alpha: Parameter
        decades: The k of each probe
        values: Quantity at each probe
        ratio: values[-1] / values[0]
        verdict: "diverges" or "inconclusive"
        analytic: The verdict rests on a non-integrable exponent, not on the sequence
        quantity: What was sampled
    """
    case: str
    alpha: float
    decades: List[int]
    values: List[float]
    ratio: float
    verdict: str
    analytic: bool
    quantity: str

    @property
    def radii(self) -> List[float]:
        return [1.0 - 10.0 ** (-k) for k in self.decades]

    def to_dict(self) -> Dict[str, Any]:
        return {"case": self.case, "alpha": self.alpha, "decades": self.decades,
                "radii": self.radii, "values": self.values, "ratio": self.ratio,
                "verdict": self.verdict, "analytic": self.analytic, "quantity": self.quantity}


@dataclass(frozen=True)
class Th61Certificate:
    """Numeric evidence for the H^inf -> Bloch norm."""
    value: float
    upper: SupSearchResult
    lower_probe: float
    lower_radius: float

    def to_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "upper": self.upper.to_dict(),
                "lower_probe": self.lower_probe, "lower_radius": self.lower_radius}


def _quad(integrand: SingularIntegrand, tol: Tolerance, strict: bool = True, **kwargs) -> QuadResult:
    if strict:
        return integrate(integrand, **tol.kwargs(), **kwargs)
    return best_effort(integrand, **tol.kwargs(), **kwargs)


def _radii(r, rc=None) -> Tuple[np.ndarray, np.ndarray]:
    r = np.atleast_1d(np.asarray(r, dtype=float))
    rc = 1.0 - r if rc is None else np.atleast_1d(np.asarray(rc, dtype=float))
    if np.any(r < 0.0) or np.any(rc <= 0.0):
        raise DomainError("radius must lie in [0, 1)")
    return r, rc


def _log_constant(alpha: float) -> float:
    return LOG2 + 1.0 / alpha


# Kernels of the log-Korenblum results

def _phi_pieces(r, rc, t, tc):
    a = rc + r * t
    b = a + t
    # log(1 - phi_t(r)^2) with phi_t(r) = t/a
    log_q = np.log(rc) + np.log(tc) + np.log(b) - 2.0 * np.log(a)
    return a, b, log_q


def _th31_regular(alpha: float, r, rc):
    c = _log_constant(alpha)

    def smooth(t, tc):
        a, b, log_q = _phi_pieces(r, rc, t, tc)
        return (1.0 + r) ** alpha * a ** (2.0 * alpha - 1.0) * b ** (-alpha) / (c - log_q)

    return smooth


def th31_kernel(alpha: float, r: float, t, tc=None):
    """
    The integrand Phi(r, t) of the log-Korenblum to Korenblum norm.

    Args:
        alpha: Exponent in (0, 1)
        r: Radius in [0, 1)
        t: Point(s) in (0, 1)
        tc: 1 - t, when known more accurately than from t

    Returns:
        Phi(r, t) > 0
    """
    check_alpha("TH31_EXACT", alpha)
    t = np.asarray(t, dtype=float)
    tc = 1.0 - t if tc is None else np.asarray(tc, dtype=float)
    if np.any(t <= 0.0) or np.any(tc <= 0.0):
        raise DomainError("th31_kernel needs t in (0, 1)")
    if not (0.0 <= r < 1.0):
        raise DomainError(f"th31_kernel needs r in [0, 1), got {r}")
    value = _th31_regular(alpha, float(r), 1.0 - float(r))(t, tc) * tc ** (-alpha)
    return float(value) if value.ndim == 0 else value


def th31_integral(alpha: float, r, rc=None, tol: Tolerance = DEFAULT_TOLERANCE,
                  strict: bool = True) -> np.ndarray:
    """
    int_0^1 Phi(r, t) dt for one radius or a batch of radii.

    Equals (1 - r^2)^a H[f_alpha](r) for the log-Korenblum extremal function.
    """
    check_alpha("TH31_EXACT", alpha)
    r, rc = _radii(r, rc)
    smooth = _th31_regular(alpha, r[:, None], rc[:, None])
    result = _quad(SingularIntegrand(smooth, 0.0, -alpha), tol, strict)
    return np.atleast_1d(np.asarray(result.value, dtype=float))


def _th41_log_weight(alpha: float, r: np.ndarray, rc: np.ndarray) -> np.ndarray:
    return _log_constant(alpha) - np.log(rc * (1.0 + r))


def th41_integral(alpha: float, r, rc=None, tol: Tolerance = DEFAULT_TOLERANCE,
                  strict: bool = True) -> np.ndarray:
    """int_0^1 Psi(r, t) dt; Psi = Phi log(2e^(1/a)/(1 - r^2)), the weight being constant in t."""
    r, rc = _radii(r, rc)
    return _th41_log_weight(alpha, r, rc) * th31_integral(alpha, r, rc, tol, strict)


def th31_lower(alpha: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """
    int_0^1 dt/((1-t^2)^a log(2e^(1/a)/(1-t^2))), the r = 0 value of the kernel integral.

    Args:
        alpha: Exponent in (0, 1)
        tol: Quadrature tolerances

    Returns:
        float: Lower bound for the norm
    """
    check_alpha("TH31_LOWER", alpha)
    c = _log_constant(alpha)
    integrand = SingularIntegrand(lambda t, tc: (1.0 + t) ** (-alpha), 0.0, -alpha)
    result = integrate_with_log(integrand, lambda t, tc: c - np.log(tc * (1.0 + t)), **tol.kwargs())
    return float(result.value)


def th31_norm(alpha: float, n_radii: int = DEFAULT_RADII, r_max: float = DEFAULT_R_MAX,
              tol: Tolerance = DEFAULT_TOLERANCE) -> SupSearchResult:
    """
    sup_r int_0^1 Phi(r, t) dt.

    The kernel integral decays to 0 like 1/log(1/(1-r)) at the boundary, so the
    limit competing with the interior maximum is 0; the Richardson estimate of
    that limit is kept as a diagnostic.

    Args:
        alpha: Exponent in (0, 1)
        n_radii: Sample radii on [0, r_max]
        r_max: Outermost sampled radius
        tol: Quadrature tolerances

    Returns:
        SupSearchResult: Norm value with its argmax
    """
    check_alpha("TH31_EXACT", alpha)
    probe = boundary_limit(lambda rc: float(th31_integral(alpha, 1.0 - rc, rc, tol, strict=False)[0]),
                           log_variable, TH41_DECADES)
    result = sup_over_radius(lambda r: th31_integral(alpha, r, tol=tol, strict=False),
                             n_radii, r_max, limit=0.0, extrapolated=probe.value, vectorized=True)
    logger.info(f"TH31 alpha={alpha:g}: norm {result.value:.12g} at r={result.arg_r:.6g}")
    return result


def th41_lower(alpha: float) -> float:
    """pi/sin(a pi), the boundary limit of the log-Korenblum kernel integral."""
    check_alpha("TH41_LOWER", alpha)
    return reflection(alpha).value


def th41_norm(alpha: float, n_radii: int = DEFAULT_RADII, r_max: float = DEFAULT_R_MAX,
              tol: Tolerance = DEFAULT_TOLERANCE) -> SupSearchResult:
    """
    sup_r int_0^1 Psi(r, t) dt.

    The interior maximum competes with the proven boundary limit pi/sin(a pi);
    the Richardson extrapolation in s = 1/log(1/(1-r)) from 1 - r = 1e-30, 1e-60
    and 1e-120 is reported alongside.

    Args:
        alpha: Exponent in (0, 1)
        n_radii: Sample radii on [0, r_max]
        r_max: Outermost sampled radius
        tol: Quadrature tolerances

    Returns:
        SupSearchResult: Norm value, boundary flag and extrapolated limit
    """
    check_alpha("TH41_EXACT", alpha)
    probe = boundary_limit(lambda rc: float(th41_integral(alpha, 1.0 - rc, rc, tol, strict=False)[0]),
                           log_variable, TH41_DECADES)
    result = sup_over_radius(lambda r: th41_integral(alpha, r, tol=tol, strict=False),
                             n_radii, r_max, limit=th41_lower(alpha), extrapolated=probe.value,
                             vectorized=True)
    logger.info(f"TH41 alpha={alpha:g}: norm {result.value:.12g} "
                f"(extrapolated limit {probe.value:.12g}, boundary={result.boundary_attained})")
    return result


# Suprema of the weighted composition operators

def critical_t(alpha: float) -> float:
    """t* = (3a - 2)/(4a - 2), below which the interior critical point wins (2/3 < a < 1)."""
    return (3.0 * alpha - 2.0) / (4.0 * alpha - 2.0)


def _boundary_branch(alpha: float, t: np.ndarray, tc: np.ndarray) -> np.ndarray:
    return t ** (alpha - 1.0) * tc ** (-alpha)


def _critical_branch(alpha: float, t: np.ndarray, tc: np.ndarray) -> np.ndarray:
    s = 2.0 * alpha - 1.0
    disc = (1.0 - alpha) ** 2 + 2.0 * alpha * t * s
    if np.any(disc < DISCRIMINANT_FLOOR):
        raise NumericalError(f"negative discriminant {np.min(disc):.3e} at the critical point")
    root = np.sqrt(np.maximum(disc, 0.0))
    # w = 1 - x0, rationalized
    w = t * s * (2.0 - t) / (root + (1.0 - alpha) + t * s)
    return w ** s * ((2.0 - t - w) / (tc ** 2 * (t + w))) ** alpha


def critical_point(alpha: float, t) -> np.ndarray:
    """
    x0 = (a + 2at - t - sqrt(D))/(2a - 1) for 1/2 < a < 1.

    x0 = (1-t)z for the maximizing point z of the real diameter, so
    tt_real_profile(a, t, x0/(1-t)) is the critical branch of le32_sup.
    """
    t = np.asarray(t, dtype=float)
    s = 2.0 * alpha - 1.0
    disc = np.maximum((1.0 - alpha) ** 2 + 2.0 * alpha * t * s, 0.0)
    w = t * s * (2.0 - t) / (np.sqrt(disc) + (1.0 - alpha) + t * s)
    return 1.0 - w


def _lemma_max(alpha: float, t, tc=None) -> np.ndarray:
    t = np.atleast_1d(np.asarray(t, dtype=float))
    tc = 1.0 - t if tc is None else np.atleast_1d(np.asarray(tc, dtype=float))
    if np.any(t <= 0.0) or np.any(tc <= 0.0):
        raise DomainError("t must lie in (0, 1)")
    value = _boundary_branch(alpha, t, tc)
    if alpha > TWO_THIRDS:
        inner = t < critical_t(alpha)
        if np.any(inner):
            value = value.copy()
            value[inner] = _critical_branch(alpha, t[inner], tc[inner])
    return value


def _unwrap(value: np.ndarray, like) -> Any:
    return float(value[0]) if np.ndim(like) == 0 else value


def le32_sup(alpha: float, t, tc=None):
    """
    sup over the disk of |1-(1-t)z|^(2a-1) ((1-|z|^2)/(|1-(1-t)z|^2 - t^2))^a.

    t^(a-1)/(1-t)^a for a <= 2/3 or t >= t*, the value at the critical point
    x0 otherwise.

    Args:
        alpha: Exponent in (1/2, 1)
        t: Point(s) in (0, 1)
        tc: 1 - t, optional

    Returns:
        The supremum, scalar for scalar t

    Raises:
        NumericalError: If the discriminant is below -1e-14
    """
    check_alpha("LE32_SUP", alpha)
    return _unwrap(_lemma_max(alpha, t, tc), t)


def lemma_log_factor(alpha: float, t, tc=None):
    """log((2-t)^2 e^(1/a)/(2-2t)), strictly positive on (0, 1)."""
    t = np.asarray(t, dtype=float)
    tc = 1.0 - t if tc is None else np.asarray(tc, dtype=float)
    return 2.0 * np.log1p(tc) + 1.0 / alpha - LOG2 - np.log(tc)


def le33_tt_bound(alpha: float, t, tc=None):
    """
    Norm bound of T_t from the log-Korenblum space into the Korenblum space.

    Args:
        alpha: Exponent in (0, 1)
        t: Point(s) in (0, 1)
        tc: 1 - t, optional

    Returns:
        Lemma supremum divided by log((2-t)^2 e^(1/a)/(2-2t))
    """
    check_alpha("LE33_TT", alpha)
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    tc_arr = 1.0 - t_arr if tc is None else np.atleast_1d(np.asarray(tc, dtype=float))
    value = _lemma_max(alpha, t_arr, tc_arr) / lemma_log_factor(alpha, t_arr, tc_arr)
    return _unwrap(value, t)


def th34_upper(alpha: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """
    int_0^1 le33_tt_bound(a, t) dt.

    Above a = 2/3 the integral is split at t*: the critical branch behaves like
    t^(a-1) at 0 and is smooth at t*, the boundary branch carries (1-t)^(-a).

    Args:
        alpha: Exponent in (0, 1)
        tol: Quadrature tolerances

    Returns:
        float: Upper bound for the log-Korenblum to Korenblum norm
    """
    check_alpha("TH34_UPPER", alpha)

    def log_factor(t, tc):
        return lemma_log_factor(alpha, t, tc)

    if alpha <= TWO_THIRDS:
        integrand = SingularIntegrand(lambda t, tc: np.ones_like(t), alpha - 1.0, -alpha)
        return float(integrate_with_log(integrand, log_factor, **tol.kwargs()).value)

    t_star = critical_t(alpha)
    inner = SingularIntegrand(
        lambda t, tc: _critical_branch(alpha, t, tc) * t ** (1.0 - alpha), alpha - 1.0, 0.0)
    outer = SingularIntegrand(lambda t, tc: t ** (alpha - 1.0), 0.0, -alpha)
    head = integrate_with_log(inner, log_factor, interval=(0.0, t_star), **tol.kwargs())
    tail = integrate_with_log(outer, log_factor, interval=(t_star, 1.0), **tol.kwargs())
    return float(head.value) + float(tail.value)


def tt_quantity(alpha: float, t: float, z):
    """
    |1-(1-t)z|^(2a-1) ((1-|z|^2)/(|1-(1-t)z|^2 - t^2))^a at disk points z.

    The quantity whose supremum over the disk le32_sup gives in closed form.
    """
    if not (0.0 < t < 1.0):
        raise DomainError(f"t must lie in (0, 1), got {t}")
    z = np.asarray(z)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("tt_quantity needs |z| < 1")
    m = np.abs(1.0 - (1.0 - t) * z)
    return m ** (2.0 * alpha - 1.0) * ((1.0 - np.abs(z) ** 2) / (m ** 2 - t ** 2)) ** alpha


def tt_real_profile(alpha: float, t: float, s):
    """
    tt_quantity on the real diameter z = s in [-1, 1], with 1 - s cancelled.

    (1-(1-t)s)^(2a-1) ((1+s)/((1-t)(1+t-(1-t)s)))^a; at s = 1 this is the
    boundary branch t^(a-1)/(1-t)^a.
    """
    s = np.asarray(s, dtype=float)
    tc = 1.0 - t
    w = 1.0 - tc * s
    return w ** (2.0 * alpha - 1.0) * ((1.0 + s) / (tc * (w + t))) ** alpha


# Bloch-type targets

def th52_lower(alpha: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """
    int_0^1 (1-t^2)^(1-a)/(2(a-1)) dt - 1/(2(a-1)) + pi/sin(pi(a-1)).

    Args:
        alpha: Exponent in (1, 2)
        tol: Quadrature tolerances

    Returns:
        float: Lower bound for the norm on the a-Bloch space
    """
    check_alpha("TH52_LOWER", alpha)
    integrand = SingularIntegrand(lambda t, tc: (1.0 + t) ** (1.0 - alpha), 0.0, 1.0 - alpha)
    moment = float(_quad(integrand, tol).value)
    return (moment - 1.0) / (2.0 * (alpha - 1.0)) + reflection(alpha - 1.0).value


def th53_upper(alpha: float) -> float:
    """2^a pi/sin((a-1)pi) + 1/(2-a) for 1 < a < 2."""
    check_alpha("TH53_UPPER", alpha)
    return 2.0 ** alpha * reflection(alpha - 1.0).value + 1.0 / (2.0 - alpha)


def th61_value() -> float:
    """The norm from H^inf into the Bloch space."""
    return 3.0


def th61_lower_quantity(r: float, rc: Optional[float] = None) -> float:
    """1 + (1+r)/r - ((1-r^2)/r^2) log(1/(1-r)), the Bloch norm of H(1) read at r."""
    rc = 1.0 - r if rc is None else rc
    if not (0.0 < r < 1.0):
        raise DomainError(f"the lower-bound probe needs 0 < r < 1, got {r}")
    return 1.0 + (1.0 + r) / r - rc * (1.0 + r) / r ** 2 * math.log(1.0 / rc)


def th61_certificate(tol: Tolerance = DEFAULT_TOLERANCE, n_radii: int = DEFAULT_RADII,
                     r_max: float = DEFAULT_R_MAX) -> Th61Certificate:
    """
    Numeric evidence for the value 3.

    Upper side: 1 + sup_r (1-r^2) int_0^1 (1-tr)^(-2) dt, whose supremum is
    only approached as r -> 1 and is extrapolated in s = 1 - r. Lower side:
    the constant function probed at r = r_max.

    Args:
        tol: Quadrature tolerances
        n_radii: Sample radii for the upper sup
        r_max: Outermost radius, also the lower-probe radius

    Returns:
        Th61Certificate: Both sides
    """
    def upper_quantity(r, rc=None):
        r, rc = _radii(r, rc)
        rb, rcb = r[:, None], rc[:, None]
        smooth = lambda t, tc: (rcb + rb * tc) ** -2.0  # noqa: E731
        integral = _quad(SingularIntegrand(smooth), tol, strict=False).value
        return rc * (1.0 + r) * np.atleast_1d(np.asarray(integral, dtype=float))

    limit = boundary_limit(lambda rc: float(upper_quantity(1.0 - rc, rc)[0]), lambda rc: rc, (3, 4, 5, 6))
    search = sup_over_radius(upper_quantity, n_radii, r_max, limit=limit.value,
                             extrapolated=limit.value, vectorized=True)
    upper = SupSearchResult(value=1.0 + search.value, arg_r=search.arg_r,
                            boundary_attained=search.boundary_attained,
                            samples_used=search.samples_used,
                            interior_value=1.0 + search.interior_value,
                            limit_value=1.0 + limit.value, extrapolated_limit=1.0 + limit.value)
    lower = th61_lower_quantity(r_max)
    logger.info(f"TH61 certificate: upper sup {upper.value:.12g}, lower probe {lower:.12g}")
    return Th61Certificate(th61_value(), upper, lower, r_max)


def th71_first_term(alpha: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """int_0^1 (1-t^2)^(-a) dt = Hf(0) for f = (1-z^2)^(-a)."""
    integrand = SingularIntegrand(lambda t, tc: (1.0 + t) ** (-alpha), 0.0, -alpha)
    return float(_quad(integrand, tol).value)


def th71_upper_second_term(alpha: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """2 int_0^1 (1-t)^(1-a) t^(-a) dt."""
    integrand = SingularIntegrand(lambda t, tc: np.full_like(t, 2.0), -alpha, 1.0 - alpha)
    return float(_quad(integrand, tol).value)


def th71_radial_integral(alpha: float, r: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """
    (1+r)^(a+1) int_0^1 (1-t)(1-rt)^(2a-1)/(t^a (2-(1+r)t)^a) dt for r in [0, 1].

    At r = 1 the integrand is 2 t^(-a)(1-t)^a, giving 2B(1+a, 1-a).

    Args:
        alpha: Exponent in (0, 1)
        r: Radius in [0, 1]
        tol: Quadrature tolerances
    """
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"th71_radial_integral requires 0 < alpha < 1, got {alpha}")
    if not (0.0 <= r <= 1.0):
        raise DomainError(f"r must lie in [0, 1], got {r}")
    if r == 1.0:
        integrand = SingularIntegrand(lambda t, tc: np.full_like(t, 2.0), -alpha, alpha)
        return float(_quad(integrand, tol).value)
    rc = 1.0 - r

    def smooth(t, tc):
        # 1 - rt = rc + r(1-t); 2 - (1+r)t = (1-t) + (1-rt)
        one_minus_rt = rc + r * tc
        return ((1.0 + r) ** (alpha + 1.0) * one_minus_rt ** (2.0 * alpha - 1.0)
                * (tc + one_minus_rt) ** (-alpha))

    return float(_quad(SingularIntegrand(smooth, -alpha, 1.0), tol).value)


def th71_radial_sup(alpha: float, tol: Tolerance = DEFAULT_TOLERANCE,
                    n_radii: int = DEFAULT_RADII, r_max: float = DEFAULT_R_MAX) -> SupSearchResult:
    """
    sup over r of the radial integral, competing with its value at r = 1.

    For a <= 2/3 the integrand increases in r, so the supremum is the boundary value
    2B(1+a, 1-a) and is only approached as r -> 1.
    """
    limit = th71_radial_integral(alpha, 1.0, tol)
    return sup_over_radius(lambda r: th71_radial_integral(alpha, r, tol), n_radii, r_max, limit=limit)


def g71(alpha: float, r, t):
    """g(r, t) = (1-rt)^(2a-1)/(2-(1+r)t)^a."""
    r = np.asarray(r)
    t = np.asarray(t, dtype=float)
    return (1.0 - r * t) ** (2.0 * alpha - 1.0) / (2.0 - (1.0 + r) * t) ** alpha


def g71_dr(alpha: float, r, t):
    """dg/dr = t(1-rt)^(2a-2)/(2-(1+r)t)^(a+1) [(1-a)(1-rt) + (1-2a)(1-t)]."""
    r = np.asarray(r, dtype=float)
    t = np.asarray(t, dtype=float)
    u = 1.0 - r * t
    v = 2.0 - (1.0 + r) * t
    return (t * u ** (2.0 * alpha - 2.0) * v ** (-alpha - 1.0)
            * ((1.0 - alpha) * u + (1.0 - 2.0 * alpha) * (1.0 - t)))


def th71_premise_margin(alpha: float, grid: int = PREMISE_GRID) -> float:
    """
    min of dg/dr over an interior grid of (0, 1)^2, by complex-step differentiation.

    Nonnegative exactly when g is increasing in r on the grid.
    """
    if grid < 1:
        raise DomainError(f"grid must be positive, got {grid}")
    nodes = np.arange(1, grid + 1) / (grid + 1.0)
    r, t = np.meshgrid(nodes, nodes, indexing="ij")
    h = 1e-20
    slope = np.imag(g71(alpha, r + 1j * h, t)) / h
    return float(np.min(slope))


def th71_value(alpha: float, tol: Tolerance = DEFAULT_TOLERANCE) -> BoundReport:
    """
    Norm from the Korenblum space into the (a+1)-Bloch space.

    Exact for 0 < a <= 2/3, a bracket for 2/3 < a < 1 and unbounded for a >= 1,
    where Hf(0) = int_0^1 (1-t^2)^(-a) dt is already infinite.

    Args:
        alpha: Exponent > 0
        tol: Quadrature tolerances

    Returns:
        BoundReport: Tagged result with its components in details
    """
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise DomainError(f"th71_value requires alpha > 0, got {alpha}")
    if alpha >= 1.0:
        return BoundReport("TH71", alpha, UNBOUNDED, regime=KORENBLUM_TO_BLOCH_ALPHA_GE1,
                           details={"reason": "Hf(0) = int_0^1 (1-t^2)^(-a) dt diverges for a >= 1"})
    first = th71_first_term(alpha, tol)
    second = 2.0 * alpha * reflection(alpha).value
    lower = first + second
    details: Dict[str, Any] = {"first_term": first, "second_term": second}
    if alpha <= TWO_THIRDS:
        details["premise_margin"] = th71_premise_margin(alpha)
        details["radial_limit"] = th71_radial_integral(alpha, 1.0, tol)
        return BoundReport("TH71", alpha, EXACT, value=lower, lower=lower, upper=lower,
                           details=details)
    upper_second = th71_upper_second_term(alpha, tol)
    details["upper_second_term"] = upper_second
    return BoundReport("TH71", alpha, BRACKET, lower=lower, upper=first + upper_second,
                       details=details)


def bloch_growth_bound(alpha: float, r, seminorm: float, value_at_zero: float = 0.0):
    """
    Growth of an a-Bloch function: |f(z)| <= |f(0)| + ||f||* k_a(|z|).

    k_a(r) = ((1-r)^(1-a) - 1)/(a - 1) for a != 1 and log(1/(1-r)) for a = 1.

    Args:
        alpha: Exponent > 0
        r: Modulus or moduli in [0, 1)
        seminorm: sup (1-|z|^2)^a |f'(z)|
        value_at_zero: |f(0)|

    Returns:
        The bound at r
    """
    if not (alpha > 0.0):
        raise DomainError(f"bloch_growth_bound requires alpha > 0, got {alpha}")
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0) or np.any(r >= 1.0):
        raise DomainError("bloch_growth_bound needs r in [0, 1)")
    rc = 1.0 - r
    if alpha == 1.0:
        growth = -np.log(rc)
    else:
        growth = np.expm1((1.0 - alpha) * np.log(rc)) / (alpha - 1.0)
    bound = abs(value_at_zero) + seminorm * growth
    return float(bound) if bound.ndim == 0 else bound


# Lower-bound quantities of the extremal functions, written in rc = 1 - r

def _composed_mass(r: float, rc: float) -> float:
    """int_0^1 t/((t-1)r+1) dt = (1/r)(1 - (rc/r) log(1/rc)), by its series below r = 1/2."""
    if r < 0.5:
        n = np.arange(64)
        return float(np.sum(r ** n / ((n + 1.0) * (n + 2.0))))
    return (1.0 - rc / r * math.log(1.0 / rc)) / r


def _h_alpha_bloch_term(alpha: float, rc: float, tol: Tolerance) -> float:
    """
    (1-r^2)^a H[h_a]'(r) for a != 1, through the composed derivative.

    It splits into int (t/A)(tc B/A^2)^(1-a) dt and the closed form
    rc^(a-1) int t/A dt, with A = rc + rt and B = A + t.
    """
    r = 1.0 - rc

    def smooth(t, tc):
        a = rc + r * t
        return (t / a) * ((a + t) / a ** 2) ** (1.0 - alpha)

    main = float(_quad(SingularIntegrand(smooth, 0.0, 1.0 - alpha), tol).value)
    correction = rc ** (alpha - 1.0) * _composed_mass(r, rc)
    return (1.0 + r) ** alpha * (main - correction) / (2.0 * (alpha - 1.0))


def th52_zero_term(alpha: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """H[h_a](0) = int_0^1 h_a(t) dt."""
    integrand = SingularIntegrand(lambda t, tc: (1.0 + t) ** (1.0 - alpha), 0.0, 1.0 - alpha)
    return (float(_quad(integrand, tol).value) - 1.0) / (2.0 * (alpha - 1.0))


def th52_lower_quantity(alpha: float, rc: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """|H[h_a](0)| + (1-r^2)^a |H[h_a]'(r)| for 1 < a < 2."""
    return abs(th52_zero_term(alpha, tol)) + abs(_h_alpha_bloch_term(alpha, rc, tol))


def th71_lower_quantity(alpha: float, rc: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """|Hf(0)| + (1-r^2)^(a+1) |(Hf)'(r)| for f = (1-z^2)^(-a), 0 < a < 1."""
    r = 1.0 - rc

    def smooth(t, tc):
        a = rc + r * t
        return t * a ** (2.0 * alpha - 1.0) * (a + t) ** (-alpha)

    integral = float(_quad(SingularIntegrand(smooth, 0.0, -alpha), tol).value)
    return th71_first_term(alpha, tol) + (1.0 + r) ** (alpha + 1.0) * integral


def lower_bound_quantity(theorem: str, alpha: Optional[float], rc: float,
                         tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """
    The extremal function's target-norm quantity at radius r = 1 - rc.

    Args:
        theorem: TH31, TH41, TH52, TH61 or TH71
        alpha: Parameter (ignored for TH61)
        rc: 1 - r in (0, 1]

    Returns:
        float: The lower-bound quantity
    """
    if not (0.0 < rc <= 1.0):
        raise DomainError(f"rc = 1 - r must lie in (0, 1], got {rc}")
    r = 1.0 - rc
    if theorem == "TH61":
        return th61_lower_quantity(r, rc)
    if theorem == "TH31":
        return float(th31_integral(alpha, r, rc, tol)[0])
    if theorem == "TH41":
        check_alpha("TH41_EXACT", alpha)
        return float(th41_integral(alpha, r, rc, tol)[0])
    if theorem == "TH52":
        check_alpha("TH52_LOWER", alpha)
        return th52_lower_quantity(alpha, rc, tol)
    if theorem == "TH71":
        if alpha is None or not (0.0 < alpha < 1.0):
            raise DomainError(f"TH71 lower-bound quantity requires 0 < alpha < 1, got {alpha}")
        return th71_lower_quantity(alpha, rc, tol)
    raise DomainError(f"no lower-bound quantity for theorem '{theorem}'")


def extrapolation_variable(theorem: str, alpha: Optional[float]) -> Callable[[float], float]:
    """The variable s(rc) in which a lower-bound quantity is extrapolated to r -> 1."""
    if theorem == "TH61":
        return lambda rc: rc * math.log(1.0 / rc)
    if theorem == "TH71":
        return lambda rc: rc
    if theorem == "TH52":
        return lambda rc: rc ** (alpha - 1.0)
    if theorem in ("TH41", "TH31"):
        return log_variable
    raise DomainError(f"no extrapolation variable for theorem '{theorem}'")


# Divergence probes

def _sequence_verdict(values: List[float]) -> Tuple[float, str]:
    ratio = values[-1] / values[0] if values[0] > 0 else math.inf
    return ratio, ("diverges" if ratio >= DIVERGENCE_FACTOR else "inconclusive")


def _bloch_eq1_quantity(rc: float, tol: Tolerance) -> float:
    # (1+r) int t/A log(A/((1-t)(1-r))) dt, A = 1 + (t-1)r
    r = 1.0 - rc
    log_rc = math.log(rc)

    def smooth(t, tc):
        a = rc + r * t
        return (t / a) * (np.log(a) - log_rc - np.log(tc))

    return (1.0 + r) * float(_quad(SingularIntegrand(smooth), tol).value)


def _partial_moment(exponent: float, rc: float, tol: Tolerance) -> float:
    # int_0^(1-rc) (1-t^2)^exponent dt
    b = 1.0 - rc
    integrand = SingularIntegrand(lambda t, tc: (tc * (1.0 + t)) ** exponent)
    return float(_quad(integrand, tol, interval=(0.0, b)).value)


def _h_alpha_dilated_quantity(alpha: float, rc: float, tol: Tolerance) -> float:
    """
    |H[g](0)| + (1-r^2)^a |H[g]'(r)| for the dilation g(z) = h_a(rz), a >= 2.

    ||g||_B^a <= 1 because 1 - |z|^2 <= |1 - r^2 z^2|. With A = 1 - rt = tc + t rc
    and q = rc/A, the derivative term is (1+r)^a int t q^a ((1+rt)^(1-a)/A - A^(a-2)) dt,
    over 2(a-1).
    """
    r = 1.0 - rc
    scale = 1.0 / (2.0 * (alpha - 1.0))

    def zero_term(t, tc):
        return ((tc + t * rc) * (1.0 + r * t)) ** (1.0 - alpha) - 1.0

    def derivative_term(t, tc):
        a = tc + t * rc
        return t * (rc / a) ** alpha * ((1.0 + r * t) ** (1.0 - alpha) / a - a ** (alpha - 2.0))

    zero = scale * float(_quad(SingularIntegrand(zero_term), tol).value)
    slope = scale * (1.0 + r) ** alpha * float(_quad(SingularIntegrand(derivative_term), tol).value)
    return abs(zero) + abs(slope)


def _hardy_quantity(rc: float) -> float:
    # H(1)(r) = log(1/(1-r))/r
    return math.log(1.0 / rc) / (1.0 - rc)


def unboundedness_probe(case: str, alpha: Optional[float] = None,
                        tol: Tolerance = DEFAULT_TOLERANCE) -> DivergenceReport:
    """
    Sample the quantity that diverges in an unbounded setting.

    The sequence cases add decades past k = 6, up to 12, while the ratio is
    below 10 and the sequence still grows. The a-Bloch case with a >= 2 samples
    the dilations h_a(r_k z), which stay in the unit ball of B^a. The Korenblum
    case with a >= 1 diverges because H f(0) is a non-integrable endpoint power;
    its verdict is analytic and the partial integrals up to r_k are reported.

    Args:
        case: One of PROBE_CASES
        alpha: Parameter matching the case
        tol: Quadrature tolerances

    Returns:
        DivergenceReport: Sequence, ratio and verdict

    Raises:
        DomainError: For an unknown case or an alpha outside the case's regime
    """
    if case == BLOCH_ALPHA_LE1:
        if alpha is None or not (0.0 < alpha < 1.0):
            raise DomainError(f"{case} needs 0 < alpha < 1 (use {BLOCH_ALPHA_EQ1} at alpha = 1), got {alpha}")
        quantity = "(1-r^2)^a |(H h_a)'(r)|"
        sample = lambda rc: abs(_h_alpha_bloch_term(alpha, rc, tol))  # noqa: E731
        analytic = False
    elif case == BLOCH_ALPHA_EQ1:
        if alpha is not None and alpha != 1.0:
            raise DomainError(f"{case} needs alpha = 1, got {alpha}")
        alpha = 1.0
        quantity = "(1+r) int_0^1 t/(1+(t-1)r) log((1+(t-1)r)/((1-t)(1-r))) dt"
        sample = lambda rc: _bloch_eq1_quantity(rc, tol)  # noqa: E731
        analytic = False
    elif case == BLOCH_ALPHA_GE2:
        if alpha is None or not (alpha >= 2.0 and math.isfinite(alpha)):
            raise DomainError(f"{case} needs alpha >= 2, got {alpha}")
        quantity = "|H g(0)| + (1-r^2)^a |(H g)'(r)|, g(z) = h_a(rz)"
        sample = lambda rc: _h_alpha_dilated_quantity(alpha, rc, tol)  # noqa: E731
        analytic = False
    elif case == KORENBLUM_TO_BLOCH_ALPHA_GE1:
        if alpha is None or not (alpha >= 1.0 and math.isfinite(alpha)):
            raise DomainError(f"{case} needs alpha >= 1, got {alpha}")
        quantity = "int_0^r (1-t^2)^(-a) dt, partial Hf(0)"
        a = alpha
        sample = lambda rc: _partial_moment(-a, rc, tol)  # noqa: E731
        analytic = True
    elif case == HARDY_INF_SELF:
        alpha = 0.0 if alpha is None else alpha
        quantity = "H(1)(r) = log(1/(1-r))/r"
        sample = _hardy_quantity
        analytic = False
    else:
        raise DomainError(f"unknown probe case '{case}'; expected one of {', '.join(PROBE_CASES)}")

    decades = list(PROBE_DECADES)
    values = [sample(10.0 ** (-k)) for k in decades]
    ratio, verdict = _sequence_verdict(values)
    while (not analytic and verdict != "diverges" and decades[-1] < MAX_PROBE_DECADE
           and values[-1] > values[-2]):
        decades.append(decades[-1] + 1)
        values.append(sample(10.0 ** (-decades[-1])))
        ratio, verdict = _sequence_verdict(values)
    if analytic:
        verdict = "diverges"
    logger.info(f"probe {case} alpha={alpha:g}: ratio {ratio:.4g} over k={decades[0]}..{decades[-1]}, {verdict}")
    return DivergenceReport(case, float(alpha), decades, values, ratio, verdict, analytic, quantity)


# Settings

@dataclass(frozen=True)
class Setting:
    """
    A bounded operator setting with the results that apply to it.

    Attributes:
        source: Domain space
        target: Target space
        theorem: Result family, e.g. TH31
        formulas: Formula ids evaluated for this setting
    """
    source: SpaceSpec
    target: SpaceSpec
    theorem: str
    formulas: Tuple[str, ...]

    @property
    def alpha(self) -> Optional[float]:
        return self.source.alpha

    @property
    def label(self) -> str:
        return f"{self.source.label} -> {self.target.label}"


def resolve_setting(from_selector: str, to_selector: str, alpha: Optional[float] = None) -> Setting:
    """
    Map a pair of space selectors to the result that governs it.

    Args:
        from_selector: Source selector
        to_selector: Target selector
        alpha: Parameter of the weighted spaces

    Returns:
        Setting: Spaces and formula ids

    Raises:
        UnboundedRegimeError: For settings where H is not bounded
        DomainError: For pairs no result covers or alpha outside the hypotheses
    """
    pair = (from_selector, to_selector)
    if pair == ("hardy-inf", "bloch"):
        return Setting(SpaceSpec.from_selector("hardy-inf"), SpaceSpec.from_selector("bloch"),
                       "TH61", ("TH61_EXACT",))
    if pair == ("hardy-inf", "hardy-inf"):
        raise UnboundedRegimeError("H is not bounded on H^inf: H(1)(r) = log(1/(1-r))/r is unbounded",
                                   HARDY_INF_SELF)
    if pair == ("bloch", "bloch"):
        raise UnboundedRegimeError("H is not bounded on the Bloch space (alpha = 1)", BLOCH_ALPHA_EQ1)
    if alpha is None:
        raise DomainError(f"setting {from_selector} -> {to_selector} needs --alpha")
    alpha = float(alpha)
    if pair == ("bloch-alpha", "bloch-alpha"):
        if alpha <= 0.0:
            raise DomainError(f"bloch-alpha requires alpha > 0, got {alpha}")
        if alpha < 1.0:
            raise UnboundedRegimeError(
                f"H is not bounded on B^alpha for 0 < alpha <= 1 (alpha = {alpha:g})", BLOCH_ALPHA_LE1)
        if alpha == 1.0:
            raise UnboundedRegimeError("H is not bounded on the Bloch space (alpha = 1)", BLOCH_ALPHA_EQ1)
        if alpha >= 2.0:
            raise UnboundedRegimeError(
                f"H is not bounded on B^alpha for alpha >= 2 (alpha = {alpha:g})", BLOCH_ALPHA_GE2)
        space = SpaceSpec(SpaceKind.BLOCH_ALPHA, alpha)
        return Setting(space, space, "TH52", ("TH52_LOWER", "TH53_UPPER"))
    if pair == ("korenblum", "bloch-plus-one"):
        if alpha <= 0.0:
            raise DomainError(f"korenblum requires alpha > 0, got {alpha}")
        if alpha >= 1.0:
            raise UnboundedRegimeError(
                f"H: H^inf_alpha -> B^(alpha+1) is not bounded for alpha >= 1 (alpha = {alpha:g})",
                KORENBLUM_TO_BLOCH_ALPHA_GE1)
        formulas = ("TH71_EXACT",) if alpha <= TWO_THIRDS else ("TH71_LOWER", "TH71_UPPER")
        return Setting(SpaceSpec(SpaceKind.KORENBLUM, alpha), SpaceSpec.from_selector("bloch-plus-one", alpha),
                       "TH71", formulas)
    if pair == ("log-korenblum", "korenblum"):
        source = SpaceSpec(SpaceKind.LOG_KORENBLUM, alpha)
        return Setting(source, SpaceSpec(SpaceKind.KORENBLUM, alpha), "TH31",
                       ("TH31_EXACT", "TH31_LOWER", "TH34_UPPER"))
    if pair == ("log-korenblum", "log-korenblum"):
        source = SpaceSpec(SpaceKind.LOG_KORENBLUM, alpha)
        return Setting(source, source, "TH41", ("TH41_EXACT", "TH41_LOWER"))
    raise DomainError(f"no norm result covers {from_selector} -> {to_selector}")


def verdicts(alpha: float) -> Dict[str, str]:
    """Which result applies at alpha for each family, as written in the table's verdict column."""
    in_unit = 0.0 < alpha < 1.0
    return {
        "TH31": EXACT if in_unit else "n/a",
        "TH41": EXACT if in_unit else "n/a",
        "TH52": BRACKET if 1.0 < alpha < 2.0 else (UNBOUNDED if alpha > 0 else "n/a"),
        "TH61": EXACT,
        "TH71": (EXACT if 0.0 < alpha <= TWO_THIRDS else BRACKET if in_unit
                 else UNBOUNDED if alpha >= 1.0 else "n/a"),
    }
