"""
Verification Oracles
====================

Overview:
---------
Independent evidence for the norm formulas: random-polynomial bound
certificates, attainment by the extremal functions, agreement of the three
representations of H, the radial-reduction audit and a brute-force lemma
oracle. The named suites behind `verify --suite` are assembled here.

Features:
---------
* Seeded Philox streams, so certificates repeat exactly for a seed
* Monomial-image basis: the images of all random polynomials come from one
  table of H(t^k) on the sampling grid
* Suite results are flat Check records; a failed check is data, not an exception
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError
from .functions import FunctionHandle, constant, f_alpha, h_alpha, h_one, polynomial
from .hilbert_op import (apply_integral, apply_matrix, apply_weighted_composition, image_handle,
                         monomial_images)
from .norm_formulas import (DEFAULT_TOLERANCE, TH41_DECADES, TWO_THIRDS, BLOCH_ALPHA_EQ1,
                            BLOCH_ALPHA_GE2, BLOCH_ALPHA_LE1, KORENBLUM_TO_BLOCH_ALPHA_GE1,
                            Tolerance, bloch_growth_bound, critical_t, extrapolation_variable,
                            le32_sup, le33_tt_bound, lower_bound_quantity, th31_lower, th31_norm,
                            th34_upper, th41_norm, th52_lower, th53_upper, th61_certificate,
                            th71_premise_margin, th71_radial_integral, th71_radial_sup, th71_value,
                            tt_quantity, tt_real_profile, unboundedness_probe)
from .quadrature import GAUSS_JACOBI, SingularIntegrand, crosscheck, integrate
from .spaces import SpaceKind, SpaceSpec, chebyshev_radii, g_aux, norm_estimate, weight
from .special import beta, reflection
from .supremum import REFINE_XATOL, refine_max, richardson_limit

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240601
DEFAULT_TRIALS = 100
MAX_RANDOM_DEGREE = 30
MAX_CROSSCHECK_DEGREE = 50
SLACK = 1e-9
CERTIFICATE_RADII = 96
CERTIFICATE_ANGLES = 48
CERTIFICATE_SOURCE_RADII = 128
CERTIFICATE_R_MAX = 1.0 - 1e-6
ORACLE_GRID = 100_000
AUDIT_RADII = 64
AUDIT_R_MAX = 1.0 - 1e-6
ATTAINMENT_DECADES = (3, 4, 5, 6)


def random_polynomials(count: int, seed: int, max_degree: int = MAX_RANDOM_DEGREE) -> List[np.ndarray]:
    """
    Coefficient vectors with degree uniform on [0, max_degree] and N(0, 1) entries.

    Draws come from a Philox stream in trial order, so the first n vectors do
    not depend on count.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    draws = []
    for _ in range(count):
        degree = int(rng.integers(0, max_degree + 1))
        draws.append(rng.standard_normal(degree + 1))
    return draws


@dataclass(frozen=True)
class BoundCertificate:
    """
    Worst observed ratio ||Hf|| / ||f|| over a sample of functions.

    Attributes:
        source: Domain space
        target: Target space
        claimed: The bound being certified
        trials: Number of functions tried (zero-norm draws included)
        worst_ratio: Largest observed ratio
        worst_function: Identifier of the function that produced it
        passed: worst_ratio <= claimed (1 + 1e-9) + 1e-9
    """
    source: SpaceSpec
    target: SpaceSpec
    claimed: float
    trials: int
    worst_ratio: float
    worst_function: str
    passed: bool
    ratios: List[float] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {"source": self.source.label, "target": self.target.label, "claimed": self.claimed,
                "trials": self.trials, "worst_ratio": self.worst_ratio,
                "worst_function": self.worst_function, "passed": self.passed}


def _bounded_pair(source: SpaceSpec, target: SpaceSpec) -> bool:
    s, t = source.kind, target.kind
    if s is SpaceKind.HARDY_INF:
        return t is SpaceKind.BLOCH_ALPHA and target.alpha == 1.0
    if s is SpaceKind.LOG_KORENBLUM:
        return t in (SpaceKind.KORENBLUM, SpaceKind.LOG_KORENBLUM) and target.alpha == source.alpha
    if s is SpaceKind.KORENBLUM:
        return t is SpaceKind.BLOCH_ALPHA and math.isclose(target.alpha, source.alpha + 1.0)
    if s is SpaceKind.BLOCH_ALPHA:
        return t is SpaceKind.BLOCH_ALPHA and target.alpha == source.alpha and 1.0 < source.alpha < 2.0
    return False


class _ImageGrid:
    """Target-norm evaluation of Hf for polynomials f from a monomial-image table."""

    def __init__(self, target: SpaceSpec, radial_samples: int, angles: int, r_max: float):
        self.target = target
        radii = chebyshev_radii(radial_samples, r_max)
        theta = 2.0 * np.pi * np.arange(angles) / angles
        grid = (radii[:, None] * np.exp(1j * theta[None, :])).ravel()
        self.bloch = target.kind is SpaceKind.BLOCH_ALPHA
        values, derivs = monomial_images(grid, MAX_RANDOM_DEGREE)
        self.table = derivs if self.bloch else values
        self.weights = weight(target, np.abs(grid))
        self.at_zero = 1.0 / (np.arange(MAX_RANDOM_DEGREE + 1) + 1.0)

    def norm(self, coeffs: np.ndarray) -> float:
        a = np.zeros(MAX_RANDOM_DEGREE + 1)
        a[:coeffs.size] = coeffs
        value = float(np.max(self.weights * np.abs(self.table @ a)))
        if self.bloch:
            value += abs(float(self.at_zero @ a))
        return value


def bound_certificate(source: SpaceSpec, target: SpaceSpec, claimed: float,
                      trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                      functions: Optional[Sequence[FunctionHandle]] = None,
                      radial_samples: int = CERTIFICATE_RADII,
                      angles: int = CERTIFICATE_ANGLES) -> BoundCertificate:
    """
    Certify ||Hf|| <= claimed ||f|| on random polynomials or on given functions.

    Args:
        source: Domain space
        target: Target space
        claimed: Bound to check
        trials: Number of random polynomials
        seed: Philox seed
        functions: Explicit functions to use instead of the random ensemble
        radial_samples: Radii of the target grid
        angles: Angles of the target grid

    Returns:
        BoundCertificate: Worst ratio and verdict

    Raises:
        DomainError: If H is not bounded between the two spaces
    """
    if not _bounded_pair(source, target):
        raise DomainError(f"H is not bounded from {source.label} to {target.label}; "
                          f"use unboundedness_probe for this setting")
    worst, worst_name = 0.0, ""
    ratios: List[float] = []
    if functions is None:
        grid = _ImageGrid(target, radial_samples, angles, CERTIFICATE_R_MAX)
        for coeffs in random_polynomials(trials, seed):
            f = polynomial(coeffs)
            size = norm_estimate(source, f, radial_samples=CERTIFICATE_SOURCE_RADII).value
            if not size > 0.0:
                continue
            ratio = grid.norm(coeffs) / size
            ratios.append(ratio)
            if ratio > worst:
                worst, worst_name = ratio, f.name
        count = trials
    else:
        for f in functions:
            size = norm_estimate(source, f).value
            if not size > 0.0:
                continue
            ratio = norm_estimate(target, image_handle(f)).value / size
            ratios.append(ratio)
            if ratio > worst:
                worst, worst_name = ratio, f.name
        count = len(functions)
    passed = worst <= claimed * (1.0 + SLACK) + SLACK
    logger.info(f"certificate {source.label} -> {target.label}: worst {worst:.12g} vs claimed "
                f"{claimed:.12g} over {count} trials ({'passed' if passed else 'FAILED'})")
    return BoundCertificate(source, target, float(claimed), count, worst, worst_name, passed, ratios)


def attainment_ratio(theorem: str, alpha: Optional[float] = None, r_probe: Optional[float] = None,
                     tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """
    The extremal function's lower-bound quantity at r_probe, or extrapolated to r -> 1.

    Args:
        theorem: TH31, TH41, TH52, TH61 or TH71
        alpha: Parameter (unused for TH61)
        r_probe: Radius in [0, 1); None extrapolates from r = 1 - 10^(-k)

    Returns:
        float: The quantity, or its boundary limit
    """
    if r_probe is not None:
        if not (0.0 <= r_probe < 1.0):
            raise DomainError(f"r_probe must lie in [0, 1), got {r_probe}")
        return lower_bound_quantity(theorem, alpha, 1.0 - r_probe, tol)
    if theorem == "TH31":
        return th31_norm(alpha, tol=tol).value
    decades = TH41_DECADES if theorem == "TH41" else ATTAINMENT_DECADES
    variable = extrapolation_variable(theorem, alpha)
    rcs = [10.0 ** (-k) for k in decades]
    samples = [lower_bound_quantity(theorem, alpha, rc, tol) for rc in rcs]
    limit = richardson_limit([variable(rc) for rc in rcs], samples)
    logger.debug(f"attainment {theorem} alpha={alpha}: samples {samples} -> {limit:.12g}")
    return limit


@dataclass(frozen=True)
class RepresentationReport:
    """Largest pairwise deviation among the matrix, kernel and composition forms of Hf."""
    degree: int
    samples: int
    max_deviation: float
    deviations: Dict[str, float]

    def to_dict(self) -> Dict[str, Any]:
        return {"degree": self.degree, "samples": self.samples,
                "max_deviation": self.max_deviation, "deviations": self.deviations}


def representation_deviation(f: FunctionHandle, z: np.ndarray, tol: float = 1e-12) -> Dict[str, float]:
    """Pairwise max |difference| of the three representations of Hf at the points z."""
    matrix = np.asarray(apply_matrix(f, z, tol=tol * 0.1).value)
    kernel = np.asarray(apply_integral(f, z, tol))
    composition = np.asarray(apply_weighted_composition(f, z, tol))
    return {
        "matrix-kernel": float(np.max(np.abs(matrix - kernel), initial=0.0)),
        "matrix-composition": float(np.max(np.abs(matrix - composition), initial=0.0)),
        "kernel-composition": float(np.max(np.abs(kernel - composition), initial=0.0)),
    }


def crosscheck_representations(degree: int, samples: int = 50, seed: int = DEFAULT_SEED,
                               polynomials: int = 5, radius: float = 0.9) -> RepresentationReport:
    """
    Compare the three representations of H on random polynomials of a fixed degree.

    Args:
        degree: Polynomial degree, at most 50
        samples: Random points z with |z| <= radius
        seed: Philox seed
        polynomials: Number of random polynomials
        radius: Largest |z|

    Returns:
        RepresentationReport: Maximum deviation per pair
    """
    if not (0 <= degree <= MAX_CROSSCHECK_DEGREE):
        raise DomainError(f"degree must lie in [0, {MAX_CROSSCHECK_DEGREE}], got {degree}")
    rng = np.random.Generator(np.random.Philox(seed))
    z = radius * np.sqrt(rng.random(samples)) * np.exp(2j * np.pi * rng.random(samples))
    worst = {"matrix-kernel": 0.0, "matrix-composition": 0.0, "kernel-composition": 0.0}
    for _ in range(polynomials):
        f = polynomial(rng.standard_normal(degree + 1))
        for key, value in representation_deviation(f, z).items():
            worst[key] = max(worst[key], value)
    report = RepresentationReport(degree, samples, max(worst.values()), worst)
    logger.info(f"representations degree={degree}: max deviation {report.max_deviation:.3e}")
    return report


@dataclass(frozen=True)
class AuditReport:
    """Polar minus radial supremum of a pre-restriction quantity."""
    kernel_id: str
    alpha: float
    angles: int
    radial_sup: float
    polar_sup: float
    gap: float
    polar_argsup: complex

    def to_dict(self) -> Dict[str, Any]:
        return {"kernel_id": self.kernel_id, "alpha": self.alpha, "angles": self.angles,
                "radial_sup": self.radial_sup, "polar_sup": self.polar_sup, "gap": self.gap,
                "polar_argsup": [self.polar_argsup.real, self.polar_argsup.imag]}


AUDIT_KERNELS = ("th31", "th41", "const")


def radial_reduction_audit(kernel_id: str, alpha: float, angles: int = 64,
                           radial_samples: int = AUDIT_RADII) -> AuditReport:
    """
    Compare the sup over a polar grid with the sup over [0, 1) of a weighted quantity.

    th31 and th41 use H f_alpha under the Korenblum and log-Korenblum weights;
    const uses the constant function under the Korenblum weight. Both grids share
    their radii and the polar grid contains the positive axis, so the gap is
    zero whenever the maximizer is real and positive.

    Args:
        kernel_id: One of AUDIT_KERNELS
        alpha: Exponent in (0, 1)
        angles: Number of angles of the polar grid
        radial_samples: Number of radii

    Returns:
        AuditReport: Both suprema and the signed gap
    """
    if angles < 1:
        raise DomainError(f"angles must be positive, got {angles}")
    if kernel_id == "th31":
        space, f = SpaceSpec(SpaceKind.KORENBLUM, alpha), image_handle(f_alpha(alpha))
    elif kernel_id == "th41":
        space, f = SpaceSpec(SpaceKind.LOG_KORENBLUM, alpha), image_handle(f_alpha(alpha))
    elif kernel_id == "const":
        space, f = SpaceSpec(SpaceKind.KORENBLUM, alpha), constant()
    else:
        raise DomainError(f"unknown audit kernel '{kernel_id}'; expected one of {', '.join(AUDIT_KERNELS)}")
    radial = norm_estimate(space, f, radial_samples=radial_samples, refine=False, r_max=AUDIT_R_MAX)
    polar = norm_estimate(space, f, radial_samples=radial_samples, refine=False, angles=angles,
                          r_max=AUDIT_R_MAX)
    gap = polar.value - radial.value
    logger.info(f"audit {kernel_id} alpha={alpha:g}, {angles} angles: gap {gap:.3e}")
    return AuditReport(kernel_id, alpha, angles, radial.value, polar.value, gap, complex(polar.argsup))


def lemma_bruteforce(alpha: float, t: float, grid: int = ORACLE_GRID) -> float:
    """
    Maximum of the T_t quantity on the real diameter by grid search and Brent refinement.

    The diameter carries the supremum over the disk; lemma_polar_audit checks that.
    """
    s = np.linspace(-1.0, 1.0, grid)
    values = tt_real_profile(alpha, t, s)
    j = int(np.argmax(values))
    best = float(values[j])
    lo, hi = float(s[max(j - 1, 0)]), float(s[min(j + 1, grid - 1)])
    _, refined, _ = refine_max(lambda x: float(tt_real_profile(alpha, t, x)), lo, hi, REFINE_XATOL)
    return max(best, refined)


def lemma_polar_audit(alpha: float, t: float, radii: int = 64, angles: int = 256,
                      rho_max: float = 1.0 - 1e-4) -> Tuple[float, complex]:
    """Largest T_t quantity on a polar grid of the disk, with its location."""
    rho = chebyshev_radii(radii, rho_max)
    theta = 2.0 * np.pi * np.arange(angles) / angles
    z = rho[:, None] * np.exp(1j * theta[None, :])
    values = tt_quantity(alpha, t, z)
    i, k = np.unravel_index(int(np.argmax(values)), values.shape)
    return float(values[i, k]), complex(z[i, k])


# Suites

@dataclass(frozen=True)
class Check:
    """One verification outcome."""
    suite: str
    name: str
    passed: bool
    observed: Optional[float] = None
    expected: Optional[float] = None
    tolerance: Optional[float] = None
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"suite": self.suite, "name": self.name, "passed": self.passed,
                "observed": self.observed, "expected": self.expected,
                "tolerance": self.tolerance, "detail": self.detail}


@dataclass(frozen=True)
class SuiteContext:
    """Settings the suites read."""
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    tol: Tolerance = DEFAULT_TOLERANCE
    sup_radii: int = 64
    audit_angles: int = 64


def _close(suite: str, name: str, observed: float, expected: float, rel: float,
           absolute: float = 0.0) -> Check:
    allowed = rel * abs(expected) + absolute
    return Check(suite, name, abs(observed - expected) <= allowed, observed, expected, allowed)


def _at_most(suite: str, name: str, observed: float, bound: float, slack: float = 0.0) -> Check:
    return Check(suite, name, observed <= bound + slack, observed, bound, slack)


def alpha_grid(lo: float, hi: float, points: int) -> List[float]:
    """points equally spaced interior values of (lo, hi)."""
    step = (hi - lo) / (points + 1)
    return [lo + step * (i + 1) for i in range(points)]


def suite_special(ctx: SuiteContext) -> List[Check]:
    checks = []
    for alpha in np.round(np.arange(0.1, 0.9001, 0.05), 10):
        alpha = float(alpha)
        integral = integrate(SingularIntegrand(lambda t, tc: np.ones_like(t), alpha - 1.0, -alpha),
                             **ctx.tol.kwargs()).value
        checks.append(_close("special", f"reflection quadrature alpha={alpha:g}",
                             float(integral), reflection(alpha).value, 1e-8))
        checks.append(_close("special", f"2B(1+a,1-a) alpha={alpha:g}",
                             2.0 * beta(1.0 + alpha, 1.0 - alpha).value,
                             2.0 * alpha * reflection(alpha).value, 1e-12))
    return checks


def suite_quadrature(ctx: SuiteContext) -> List[Check]:
    checks = []
    for alpha in (0.25, 0.5, 0.75):
        c = math.log(2.0) + 1.0 / alpha
        integrand = SingularIntegrand(lambda t, tc, a=alpha: (1.0 + t) ** (-a), 0.0, -alpha)
        result = crosscheck(integrand, lambda t, tc, c=c: c - np.log(tc * (1.0 + t)),
                            ctx.tol.abs, ctx.tol.rel)
        checks.append(Check("quadrature", f"dual backend, log weight alpha={alpha:g}", result.agrees,
                            float(result.primary.value), float(result.oracle.value), result.difference))
    gj = integrate(SingularIntegrand(lambda t, tc: np.ones_like(t), -0.5, -0.5), method=GAUSS_JACOBI)
    checks.append(_close("quadrature", "Gauss-Jacobi arcsine mass", float(gj.value), math.pi, 1e-12))
    return checks


def suite_lemma(ctx: SuiteContext) -> List[Check]:
    rng = np.random.Generator(np.random.Philox(ctx.seed))
    pairs: List[Tuple[str, float, float]] = []
    while sum(1 for p in pairs if p[0] == "boundary") < 20:
        alpha = float(rng.uniform(0.51, 0.99))
        t = float(rng.uniform(0.01, 0.99))
        if alpha <= TWO_THIRDS or t >= critical_t(alpha):
            pairs.append(("boundary", alpha, t))
    while sum(1 for p in pairs if p[0] == "critical") < 20:
        alpha = float(rng.uniform(0.7, 0.99))
        t = float(rng.uniform(0.01, critical_t(alpha)))
        pairs.append(("critical", alpha, t))
    for _ in range(5):
        alpha = float(rng.uniform(0.7, 0.99))
        t = critical_t(alpha) + float(rng.uniform(-1e-3, 1e-3))
        pairs.append(("threshold", alpha, t))
    checks = []
    for branch, alpha, t in pairs:
        closed = le32_sup(alpha, t)
        checks.append(_close("lemma", f"{branch} a={alpha:.4f} t={t:.4f}",
                             lemma_bruteforce(alpha, t), closed, 1e-6))
    for alpha in (0.75, 0.85, 0.95):
        t_star = critical_t(alpha)
        left, right = le32_sup(alpha, t_star * (1.0 - 1e-12)), le32_sup(alpha, t_star)
        checks.append(_close("lemma", f"continuity at t* a={alpha:g}", left, right, 1e-8))
        left, right = le33_tt_bound(alpha, t_star * (1.0 - 1e-12)), le33_tt_bound(alpha, t_star)
        checks.append(_close("lemma", f"le33 continuity at t* a={alpha:g}", left, right, 1e-8))
    for alpha, t in ((0.8, 0.2), (0.6, 0.5), (0.9, 0.7)):
        polar, _ = lemma_polar_audit(alpha, t)
        checks.append(_at_most("lemma", f"polar audit a={alpha:g} t={t:g}", polar,
                               le32_sup(alpha, t) * (1.0 + 1e-9)))
    return checks


def suite_sandwich(ctx: SuiteContext) -> List[Check]:
    checks = []
    for alpha in alpha_grid(0.0, 1.0, 17):
        lower = th31_lower(alpha, ctx.tol)
        norm = th31_norm(alpha, n_radii=ctx.sup_radii, tol=ctx.tol).value
        upper = th34_upper(alpha, ctx.tol)
        checks.append(Check("sandwich", f"th31 alpha={alpha:.4f}",
                            lower - 1e-9 <= norm <= upper + 1e-7, norm, None, 1e-7,
                            f"lower={lower:.12g} upper={upper:.12g}"))
    for alpha in alpha_grid(1.0, 2.0, 17):
        checks.append(_at_most("sandwich", f"th52<=th53 alpha={alpha:.4f}",
                               th52_lower(alpha, ctx.tol), th53_upper(alpha)))
    return checks


TH41_LIMIT_TOLERANCE = {0.3: 0.01, 0.5: 0.01, 0.7: 0.01}


def suite_th41_limit(ctx: SuiteContext) -> List[Check]:
    checks = []
    for alpha, rel in TH41_LIMIT_TOLERANCE.items():
        checks.append(_close("th41-limit", f"extrapolated limit alpha={alpha:g}",
                             attainment_ratio("TH41", alpha, tol=ctx.tol), reflection(alpha).value, rel))
        result = th41_norm(alpha, n_radii=ctx.sup_radii, tol=ctx.tol)
        checks.append(Check("th41-limit", f"norm >= pi/sin(a pi) alpha={alpha:g}",
                            result.value >= reflection(alpha).value - 1e-9, result.value,
                            reflection(alpha).value))
    return checks


def suite_th61(ctx: SuiteContext) -> List[Check]:
    certificate = th61_certificate(ctx.tol, n_radii=ctx.sup_radii)
    return [
        _close("th61", "upper sup", certificate.upper.value, 3.0, 0.0, 1e-8),
        Check("th61", "lower probe at r=1-1e-6", certificate.lower_probe >= 3.0 - 1e-3,
              certificate.lower_probe, 3.0, 1e-3),
        _close("th61", "attainment r=1-1e-6", attainment_ratio("TH61", r_probe=1.0 - 1e-6), 3.0, 0.0, 1e-3),
    ]


def suite_th71(ctx: SuiteContext) -> List[Check]:
    exact = th71_value(0.5, ctx.tol)
    checks = [
        _close("th71", "value alpha=0.5", exact.value, 1.5 * math.pi, 0.0, 1e-8),
        _close("th71", "radial limit alpha=0.5", th71_radial_integral(0.5, 1.0, ctx.tol),
               2.0 * beta(1.5, 0.5).value, 1e-7),
        _close("th71", "attainment alpha=0.5", attainment_ratio("TH71", 0.5, tol=ctx.tol),
               1.5 * math.pi, 0.0, 1e-4),
        _close("th71", "TH52 attainment alpha=1.5", attainment_ratio("TH52", 1.5, tol=ctx.tol),
               1.5 * math.pi - 1.0, 0.0, 1e-3),
    ]
    for alpha in (0.3, 0.5, 0.6):
        search = th71_radial_sup(alpha, ctx.tol, n_radii=ctx.sup_radii)
        checks.append(_at_most("th71", f"radial integral below its limit alpha={alpha:g}",
                               search.interior_value, search.limit_value, 1e-9))
        checks.append(Check("th71", f"radial sup at the boundary alpha={alpha:g}",
                            search.boundary_attained,
                            search.value, search.limit_value))
    bracket = th71_value(0.8, ctx.tol)
    checks.append(Check("th71", "bracket ordering alpha=0.8", bracket.lower <= bracket.upper,
                        bracket.lower, bracket.upper))
    return checks


def suite_monotonicity(ctx: SuiteContext) -> List[Check]:
    checks = []
    x = np.linspace(1e-4, 2.0, 10_000)
    for alpha in alpha_grid(0.0, 1.0, 9):
        slope = float(np.min(np.diff(g_aux(alpha, x)) / np.diff(x)))
        checks.append(Check("monotonicity", f"g_aux alpha={alpha:g}", slope >= -1e-12, slope, 0.0, 1e-12))
    for alpha in (0.3, 0.5, TWO_THIRDS):
        margin = th71_premise_margin(alpha)
        checks.append(Check("monotonicity", f"dg/dr alpha={alpha:.4g}", margin >= -1e-10,
                            margin, 0.0, 1e-10))
    return checks


def suite_representations(ctx: SuiteContext) -> List[Check]:
    degree20 = crosscheck_representations(20, 50, ctx.seed)
    degree0 = crosscheck_representations(0, 50, ctx.seed)
    return [
        _at_most("representations", "degree 20", degree20.max_deviation, 1e-8),
        _at_most("representations", "degree 0", degree0.max_deviation, 1e-10),
    ]


def certificate_settings(tol: Tolerance = DEFAULT_TOLERANCE,
                         sup_radii: int = 64) -> List[Tuple[SpaceSpec, SpaceSpec, float]]:
    """The bounded settings certified by the certificates suite, with their claimed norms."""
    return [
        (SpaceSpec(SpaceKind.HARDY_INF), SpaceSpec(SpaceKind.BLOCH_ALPHA, 1.0), 3.0),
        (SpaceSpec(SpaceKind.LOG_KORENBLUM, 0.5), SpaceSpec(SpaceKind.KORENBLUM, 0.5), th34_upper(0.5, tol)),
        (SpaceSpec(SpaceKind.LOG_KORENBLUM, 0.5), SpaceSpec(SpaceKind.LOG_KORENBLUM, 0.5),
         th41_norm(0.5, n_radii=sup_radii, tol=tol).value),
        (SpaceSpec(SpaceKind.KORENBLUM, 0.5), SpaceSpec(SpaceKind.BLOCH_ALPHA, 1.5), 1.5 * math.pi),
    ]


def suite_certificates(ctx: SuiteContext) -> List[Check]:
    checks = []
    for source, target, claimed in certificate_settings(ctx.tol, ctx.sup_radii):
        cert = bound_certificate(source, target, claimed, ctx.trials, ctx.seed)
        checks.append(Check("certificates", f"{source.label} -> {target.label}", cert.passed,
                            cert.worst_ratio, claimed, SLACK, cert.worst_function))
    return checks


def suite_unbounded(ctx: SuiteContext) -> List[Check]:
    cases = [(BLOCH_ALPHA_LE1, 0.5), (BLOCH_ALPHA_EQ1, 1.0), (BLOCH_ALPHA_GE2, 2.0),
             (BLOCH_ALPHA_GE2, 2.5), (KORENBLUM_TO_BLOCH_ALPHA_GE1, 1.0)]
    checks = []
    for case, alpha in cases:
        report = unboundedness_probe(case, alpha, ctx.tol)
        checks.append(Check("unbounded", f"{case} alpha={alpha:g}", report.verdict == "diverges",
                            report.ratio, 10.0, None, report.verdict))
    return checks


def suite_audit(ctx: SuiteContext) -> List[Check]:
    th31 = radial_reduction_audit("th31", 0.5, ctx.audit_angles)
    real_axis = radial_reduction_audit("th31", 0.5, 1)
    const = radial_reduction_audit("const", 0.5, ctx.audit_angles)
    return [
        _at_most("audit", "th31 alpha=0.5 gap", th31.gap, 0.0, 1e-9),
        Check("audit", "one angle gap", abs(real_axis.gap) <= 1e-12, real_axis.gap, 0.0, 1e-12),
        Check("audit", "constant gap", const.gap == 0.0 and abs(const.polar_argsup) == 0.0,
              const.gap, 0.0),
    ]


def suite_growth(ctx: SuiteContext) -> List[Check]:
    r = np.linspace(0.0, 1.0 - 1e-6, 2001)
    checks = []
    # h_a has seminorm 1; h_1 = log(1/(1-z)) has (1-r^2)/(1-r) -> 2
    for alpha, f, seminorm in ((0.5, h_alpha(0.5), 1.0), (1.5, h_alpha(1.5), 1.0), (1.0, h_one(), 2.0)):
        excess = float(np.max(np.abs(f(r)) - bloch_growth_bound(alpha, r, seminorm)))
        checks.append(Check("growth", f"{f.name} alpha={alpha:g}", excess <= 1e-12, excess, 0.0, 1e-12))
    space = SpaceSpec(SpaceKind.BLOCH_ALPHA, 0.75)
    z = r[::50, None] * np.exp(1j * np.linspace(0.0, 2.0 * np.pi, 32, endpoint=False))[None, :]
    worst = -math.inf
    for coeffs in random_polynomials(10, ctx.seed):
        f = polynomial(coeffs)
        at_zero = abs(float(coeffs[0]))
        seminorm = norm_estimate(space, f, radial_samples=128).value - at_zero
        bound = bloch_growth_bound(0.75, np.abs(z), seminorm, at_zero)
        worst = max(worst, float(np.max(np.abs(f(z)) - bound)))
    checks.append(Check("growth", "random polynomials alpha=0.75", worst <= 1e-9, worst, 0.0, 1e-9))
    return checks


SUITES: Dict[str, Callable[[SuiteContext], List[Check]]] = {
    "special": suite_special,
    "quadrature": suite_quadrature,
    "lemma": suite_lemma,
    "sandwich": suite_sandwich,
    "th41-limit": suite_th41_limit,
    "th61": suite_th61,
    "th71": suite_th71,
    "monotonicity": suite_monotonicity,
    "representations": suite_representations,
    "certificates": suite_certificates,
    "unbounded": suite_unbounded,
    "audit": suite_audit,
    "growth": suite_growth,
}


def run_suite(name: str, ctx: Optional[SuiteContext] = None) -> List[Check]:
    """
    Run a named suite, or every suite for "all".

    Raises:
        DomainError: For an unknown suite name
    """
    ctx = ctx or SuiteContext()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise DomainError(f"unknown suite '{name}'; expected one of {', '.join(['all', *SUITES])}")
    checks: List[Check] = []
    for suite in names:
        logger.info(f"Running verification suite: {suite}")
        results = SUITES[suite](ctx)
        failed = [c.name for c in results if not c.passed]
        if failed:
            logger.warning(f"suite {suite}: {len(failed)} failed check(s): {failed}")
        checks.extend(results)
    return checks
