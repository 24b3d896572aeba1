"""
Function Spaces
===============

Overview:
---------
Weights and numerical norms for the four spaces the operator acts between:

* hardy-inf       sup |f(z)|
* korenblum       sup (1-|z|^2)^a |f(z)|,                        0 < a < 1
* log-korenblum   sup (1-|z|^2)^a log(2e^(1/a)/(1-|z|^2)) |f(z)|, 0 < a < 1
* bloch-alpha     |f(0)| + sup (1-|z|^2)^a |f'(z)|,              a > 0

Norms are estimated by sampling: radii only when the function's radial profile
is known, a polar grid otherwise, followed by a local refinement of the best
sample.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Optional, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.optimize import minimize

from .errors import DomainError
from .functions import FunctionHandle
from .supremum import chebyshev_radii, refine_max, REFINE_XATOL

logger = logging.getLogger(__name__)

DEFAULT_RADIAL_SAMPLES = 512
DEFAULT_NORM_R_MAX = 1.0 - 1e-8
DEFAULT_ANGLES = 64
BOUNDARY_WINDOW = 1e-6
LOG2 = math.log(2.0)

_COMPLEX_STEP = 1e-20
_RICHARDSON_STEP = float(np.finfo(float).eps) ** (1.0 / 3.0)


class SpaceKind(Enum):
    HARDY_INF = "hardy-inf"
    KORENBLUM = "korenblum"
    LOG_KORENBLUM = "log-korenblum"
    BLOCH_ALPHA = "bloch-alpha"


SELECTORS = ("hardy-inf", "korenblum", "log-korenblum", "bloch", "bloch-alpha", "bloch-plus-one")


@dataclass(frozen=True)
class SpaceSpec:
    """
    A function space of the disk.

    Attributes:
        kind: Which family
        alpha: Weight exponent; None for hardy-inf
    """
    kind: SpaceKind
    alpha: Optional[float] = None

    def __post_init__(self):
        if self.kind is SpaceKind.HARDY_INF:
            if self.alpha is not None:
                raise DomainError("hardy-inf takes no alpha")
            return
        if self.alpha is None or not math.isfinite(self.alpha):
            raise DomainError(f"{self.kind.value} needs a finite alpha")
        if self.kind is SpaceKind.BLOCH_ALPHA:
            if self.alpha <= 0:
                raise DomainError(f"bloch-alpha requires alpha > 0, got {self.alpha}")
        elif not (0.0 < self.alpha < 1.0):
            raise DomainError(f"{self.kind.value} requires 0 < alpha < 1, got {self.alpha}")

    @classmethod
    def from_selector(cls, selector: str, alpha: Optional[float] = None) -> "SpaceSpec":
        """
        Build a space from a command-line selector.

        "bloch" is the classical Bloch space (alpha = 1) and "bloch-plus-one"
        is the (alpha+1)-Bloch space.

        Args:
            selector: One of SELECTORS
            alpha: Parameter for the weighted families

        Returns:
            SpaceSpec: The selected space
        """
        if selector == "hardy-inf":
            return cls(SpaceKind.HARDY_INF)
        if selector == "bloch":
            return cls(SpaceKind.BLOCH_ALPHA, 1.0)
        if alpha is None:
            raise DomainError(f"space '{selector}' needs --alpha")
        if selector == "korenblum":
            return cls(SpaceKind.KORENBLUM, float(alpha))
        if selector == "log-korenblum":
            return cls(SpaceKind.LOG_KORENBLUM, float(alpha))
        if selector == "bloch-alpha":
            return cls(SpaceKind.BLOCH_ALPHA, float(alpha))
        if selector == "bloch-plus-one":
            return cls(SpaceKind.BLOCH_ALPHA, float(alpha) + 1.0)
        raise DomainError(f"unknown space selector '{selector}'; expected one of {', '.join(SELECTORS)}")

    @property
    def label(self) -> str:
        if self.kind is SpaceKind.HARDY_INF:
            return "H^inf"
        if self.kind is SpaceKind.KORENBLUM:
            return f"H^inf_{self.alpha:g}"
        if self.kind is SpaceKind.LOG_KORENBLUM:
            return f"H^inf_{self.alpha:g},log"
        return f"B^{self.alpha:g}"


@dataclass(frozen=True)
class NormEstimate:
    """
    A sampled norm.

    Attributes:
        value: Estimated norm, >= 0
        method: Sampling descriptor (mode, grid sizes, derivative method, refinement)
        argsup: Point of the supremum (real radius or complex disk point)
        boundary_attained: The supremum sits within 1e-6 of the outermost radius
    """
    value: float
    method: Dict[str, Any] = field(default_factory=dict)
    argsup: Union[float, complex] = 0.0
    boundary_attained: bool = False


def _one_minus_r2(r: np.ndarray) -> np.ndarray:
    return (1.0 - r) * (1.0 + r)


def weight(space: SpaceSpec, r) -> Union[float, np.ndarray]:
    """
    The space's weight at radius r.

    Args:
        space: The space
        r: Radius or array of radii in [0, 1)

    Returns:
        Weight value(s); the Bloch weight multiplies |f'|

    Raises:
        DomainError: If a radius lies outside [0, 1)
    """
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0.0) or np.any(r_arr >= 1.0) or not np.all(np.isfinite(r_arr)):
        raise DomainError("weight needs radii in [0, 1)")
    if space.kind is SpaceKind.HARDY_INF:
        w = np.ones_like(r_arr)
    else:
        q = _one_minus_r2(r_arr)
        w = q ** space.alpha
        if space.kind is SpaceKind.LOG_KORENBLUM:
            w = w * (LOG2 + 1.0 / space.alpha - np.log(q))
    return float(w) if w.ndim == 0 else w


def g_aux(alpha: float, x) -> Union[float, np.ndarray]:
    """
    g(x) = x^a log(2e^(1/a)/x), nondecreasing on (0, 2].

    Args:
        alpha: Exponent in (0, 1)
        x: Point(s) in (0, 2]

    Returns:
        g(x)
    """
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"g_aux requires 0 < alpha < 1, got {alpha}")
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr <= 0.0) or np.any(x_arr > 2.0):
        raise DomainError("g_aux needs x in (0, 2]")
    g = x_arr ** alpha * (LOG2 + 1.0 / alpha - np.log(x_arr))
    return float(g) if g.ndim == 0 else g


def numeric_derivative(f: FunctionHandle, z) -> np.ndarray:
    """
    f'(z) without a closed form.

    Complex-step differentiation at real points of a function that is real on
    the axis; Richardson-extrapolated central differences elsewhere.
    """
    z = np.asarray(z)
    if f.real_on_axis and not np.iscomplexobj(z):
        return np.imag(f(z + 1j * _COMPLEX_STEP)) / _COMPLEX_STEP
    h = _RICHARDSON_STEP * np.minimum(1.0, 1.0 - np.abs(z))

    def central(step):
        return (f(z + step) - f(z - step)) / (2.0 * step)

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def derivative_function(f: FunctionHandle) -> Tuple[Callable[[np.ndarray], np.ndarray], str]:
    """
    Pick how f' is evaluated: termwise, closed form, or numerically.

    Returns:
        tuple: (callable z -> f'(z), method name)
    """
    if f.taylor is not None:
        coeffs = f.taylor_derivative()
        return (lambda z: P.polyval(z, coeffs)), "taylor"
    if f.derivative_evaluator is not None:
        return f.derivative_evaluator, "closed-form"
    method = "complex-step" if f.real_on_axis else "richardson"
    return (lambda z: numeric_derivative(f, z)), method


def default_angles(f: FunctionHandle) -> int:
    if f.taylor is not None:
        return max(DEFAULT_ANGLES, 16 * (len(f.taylor)))
    return DEFAULT_ANGLES


def norm_estimate(space: SpaceSpec,
                  f: FunctionHandle,
                  radial_samples: int = DEFAULT_RADIAL_SAMPLES,
                  refine: bool = True,
                  angles: Optional[int] = None,
                  r_max: float = DEFAULT_NORM_R_MAX) -> NormEstimate:
    """
    Estimate the norm of f in a space.

    Sampling is radial when f.radial_profile_known and no angle count is
    forced; otherwise a polar grid of `angles` x `radial_samples` points.

    Args:
        space: Target space
        f: Function handle
        radial_samples: Number of Chebyshev-clustered radii on [0, r_max]
        refine: Refine around the best sample
        angles: Force polar sampling with this many angles
        r_max: Outermost radius

    Returns:
        NormEstimate: Value, argsup and sampling metadata
    """
    bloch = space.kind is SpaceKind.BLOCH_ALPHA
    if bloch:
        target, derivative_method = derivative_function(f)
        offset = float(np.abs(f(np.zeros(1))[0]))
    else:
        target, derivative_method = f, None
        offset = 0.0

    def quantity(z: np.ndarray) -> np.ndarray:
        return weight(space, np.abs(z)) * np.abs(target(z))

    radii = chebyshev_radii(radial_samples, r_max)
    polar = angles is not None or not f.radial_profile_known
    method: Dict[str, Any] = {"mode": "polar" if polar else "radial",
                              "radial_samples": radial_samples, "r_max": r_max,
                              "refined": refine}
    if derivative_method:
        method["derivative"] = derivative_method

    if not polar:
        values = np.asarray(quantity(radii), dtype=float)
        j = int(np.argmax(values))
        best, arg = float(values[j]), float(radii[j])
        if refine:
            lo, hi = float(radii[max(j - 1, 0)]), float(radii[min(j + 1, radial_samples - 1)])
            x, fx, _ = refine_max(lambda r: float(quantity(np.array([r]))[0]), lo, hi, REFINE_XATOL)
            if fx > best:
                best, arg = fx, x
        boundary = abs(arg - r_max) <= BOUNDARY_WINDOW
        argsup: Union[float, complex] = arg
    else:
        n_angles = angles if angles is not None else default_angles(f)
        method["angles"] = n_angles
        theta = 2.0 * np.pi * np.arange(n_angles) / n_angles
        grid = radii[:, None] * np.exp(1j * theta[None, :])
        values = np.asarray(quantity(grid), dtype=float)
        i, k = np.unravel_index(int(np.argmax(values)), values.shape)
        best, r_best, th_best = float(values[i, k]), float(radii[i]), float(theta[k])
        if refine:
            def objective(x):
                return -float(quantity(np.array([x[0] * np.exp(1j * x[1])]))[0])
            result = minimize(objective, x0=np.array([r_best, th_best]), method="Nelder-Mead",
                              bounds=[(0.0, r_max), (th_best - np.pi, th_best + np.pi)],
                              options={"xatol": REFINE_XATOL, "fatol": 1e-14, "maxiter": 400})
            if -result.fun > best:
                best, r_best, th_best = float(-result.fun), float(result.x[0]), float(result.x[1])
        boundary = abs(r_best - r_max) <= BOUNDARY_WINDOW
        argsup = complex(r_best * np.exp(1j * th_best))

    value = offset + best
    logger.debug(f"norm of {f.name} in {space.label}: {value:.12g} at {argsup} ({method['mode']})")
    return NormEstimate(value=value, method=method, argsup=argsup, boundary_attained=boundary)
