"""
Supremum Search
===============

Overview:
---------
Scalar maximization of r -> F(r) over [0, 1), where F is typically a kernel
integral. The norm formulas need both regimes: suprema reached in the interior
and suprema that are only approached as r -> 1.

Features:
---------
* Chebyshev-clustered radii on [0, R], dense at both ends of the interval.
* Bounded Brent/golden refinement (scipy.optimize.minimize_scalar) around the
  best sample.
* Polynomial (Neville) extrapolation of F(r_k) to the boundary in a
  caller-chosen variable s(1 - r) that vanishes at r = 1.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError

logger = logging.getLogger(__name__)

DEFAULT_RADII = 64
DEFAULT_R_MAX = 1.0 - 1e-6
REFINE_XATOL = 1e-10
BOUNDARY_WINDOW = 1e-6


@dataclass(frozen=True)
class SupSearchResult:
    """
    Outcome of a sup-over-radius search.

    Attributes:
        value: Reported supremum, max(interior_value, limit_value)
        arg_r: Radius of the supremum (1.0 when it is the boundary limit)
        boundary_attained: True when the supremum sits at, or is only approached at, r -> 1
        samples_used: Number of evaluations of F
        interior_value: Best value found on [0, R] after refinement
        limit_value: Boundary limit used in the comparison, if any
        extrapolated_limit: Richardson estimate of the boundary limit, if computed
    """
    value: float
    arg_r: float
    boundary_attained: bool
    samples_used: int
    interior_value: float
    limit_value: Optional[float] = None
    extrapolated_limit: Optional[float] = None

    def to_dict(self) -> Dict[str, Optional[float]]:
        return {
            "value": self.value,
            "arg_r": self.arg_r,
            "boundary_attained": self.boundary_attained,
            "samples_used": self.samples_used,
            "interior_value": self.interior_value,
            "limit_value": self.limit_value,
            "extrapolated_limit": self.extrapolated_limit,
        }


@dataclass(frozen=True)
class BoundaryLimit:
    """A boundary extrapolation with the probe sequence it was built from (complements are 1 - r_k)."""
    value: float
    radii: List[float] = field(default_factory=list)
    samples: List[float] = field(default_factory=list)
    complements: List[float] = field(default_factory=list)


def chebyshev_radii(n: int, r_max: float = DEFAULT_R_MAX) -> np.ndarray:
    """
    Chebyshev-Lobatto points mapped to [0, r_max], in increasing order.

    Args:
        n: Number of radii, at least 2
        r_max: Largest radius, in (0, 1)

    Returns:
        np.ndarray: Radii r_j = (r_max/2)(1 - cos(pi j/(n-1)))
    """
    if n < 2:
        raise DomainError(f"need at least 2 radii, got {n}")
    if not (0.0 < r_max < 1.0):
        raise DomainError(f"r_max must lie in (0, 1), got {r_max}")
    j = np.arange(n)
    return 0.5 * r_max * (1.0 - np.cos(np.pi * j / (n - 1)))


def refine_max(fn: Callable[[float], float], lo: float, hi: float,
               xatol: float = REFINE_XATOL) -> Tuple[float, float, int]:
    """
    Maximize fn on [lo, hi] with bounded Brent iteration.

    Args:
        fn: Scalar function to maximize
        lo: Left end of the bracket
        hi: Right end of the bracket
        xatol: Absolute tolerance on the argument

    Returns:
        tuple: (argmax, max value, function evaluations)
    """
    if hi <= lo:
        return lo, fn(lo), 1
    result = minimize_scalar(lambda r: -fn(r), bounds=(lo, hi), method="bounded",
                             options={"xatol": xatol})
    return float(result.x), float(-result.fun), int(result.nfev)


def richardson_limit(s_values: Sequence[float], f_values: Sequence[float]) -> float:
    """
    Extrapolate f(s) to s = 0 through the interpolating polynomial (Neville's scheme).

    Args:
        s_values: Distinct sample abscissae, shrinking towards 0
        f_values: Function values at s_values

    Returns:
        float: The polynomial's value at s = 0
    """
    s = [float(v) for v in s_values]
    p = [float(v) for v in f_values]
    if len(s) != len(p) or not s:
        raise DomainError("richardson_limit needs equally many abscissae and values")
    n = len(s)
    for m in range(1, n):
        for i in range(n - m):
            denom = s[i] - s[i + m]
            if denom == 0.0:
                raise DomainError("extrapolation abscissae must be distinct")
            p[i] = (s[i] * p[i + 1] - s[i + m] * p[i]) / denom
    return p[0]


def boundary_limit(fn: Callable[[float], float],
                   variable: Callable[[float], float],
                   decades: Sequence[int] = (3, 4, 5, 6)) -> BoundaryLimit:
    """
    Extrapolate F(r) to r -> 1 from probes r_k = 1 - 10^(-k).

    fn receives rc = 1 - r rather than r, so decades beyond 16 stay distinct.

    Args:
        fn: F as a function of rc = 1 - r
        variable: Map from rc = 1 - r to the extrapolation variable s (s -> 0 as rc -> 0)
        decades: Exponents k of the probes

    Returns:
        BoundaryLimit: Extrapolated value with the probe radii and samples
    """
    rcs = [10.0 ** (-k) for k in decades]
    radii = [1.0 - rc for rc in rcs]
    samples = [float(fn(rc)) for rc in rcs]
    value = richardson_limit([variable(rc) for rc in rcs], samples)
    logger.debug(f"boundary limit from decades {list(decades)}: samples={samples}, limit={value:.12g}")
    return BoundaryLimit(value, radii, samples, rcs)


def log_variable(rc: float) -> float:
    """s = 1/log(1/rc), the variable for logarithmically slow limits."""
    return 1.0 / math.log(1.0 / rc)


def sup_over_radius(fn: Callable[[float], float],
                    n_radii: int = DEFAULT_RADII,
                    r_max: float = DEFAULT_R_MAX,
                    limit: Optional[float] = None,
                    extrapolated: Optional[float] = None,
                    refine: bool = True,
                    xatol: float = REFINE_XATOL,
                    vectorized: bool = False) -> SupSearchResult:
    """
    Supremum of fn over [0, 1).

    fn is sampled on Chebyshev radii of [0, r_max]; the best sample is refined
    inside its neighbouring bracket. When a boundary limit is supplied it
    competes with the interior value.

    Args:
        fn: Scalar function of the radius
        n_radii: Number of sample radii
        r_max: Largest sampled radius
        limit: Value of lim_{r->1} fn(r), if known or extrapolated
        extrapolated: Richardson estimate kept for reporting only
        refine: Whether to refine around the best sample
        xatol: Refinement tolerance on r
        vectorized: fn maps an array of radii to an array of values

    Returns:
        SupSearchResult: Supremum, its location and diagnostics
    """
    radii = chebyshev_radii(n_radii, r_max)
    if vectorized:
        values = np.asarray(fn(radii), dtype=float)
        batched = fn
        fn = lambda r: float(np.asarray(batched(np.array([r])), dtype=float)[0])  # noqa: E731
    else:
        values = np.array([fn(float(r)) for r in radii])
    if not np.all(np.isfinite(values)):
        raise DomainError(f"sup search met non-finite values at r = {radii[~np.isfinite(values)][:3]}")
    samples = n_radii
    j = int(np.argmax(values))
    arg_r, best = float(radii[j]), float(values[j])
    if refine:
        lo = float(radii[max(j - 1, 0)])
        hi = float(radii[min(j + 1, n_radii - 1)])
        x, fx, nfev = refine_max(fn, lo, hi, xatol)
        samples += nfev
        if fx > best:
            arg_r, best = x, fx
    logger.debug(f"sup search: interior max {best:.12g} at r={arg_r:.10g} ({samples} samples)")

    boundary = abs(arg_r - r_max) <= BOUNDARY_WINDOW
    value = best
    if limit is not None and limit > best:
        value, arg_r, boundary = float(limit), 1.0, True
    return SupSearchResult(value=value, arg_r=arg_r, boundary_attained=boundary,
                           samples_used=samples, interior_value=best,
                           limit_value=limit, extrapolated_limit=extrapolated)
