"""
Special Functions
=================

Gamma and Beta on the positive real axis and the reflection value
pi/sin(pi*alpha) that the closed forms of the norm formulas rest on.

Values come from scipy.special (Cephes rational and series approximations);
each result is wrapped in a SpecialValue carrying a rounding-level error
estimate so callers can propagate it next to quadrature errors.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sp

from .errors import DomainError

logger = logging.getLogger(__name__)

_EPS = float(np.finfo(float).eps)

# relative accuracy of the Cephes gamma/beta kernels on the positive axis
_GAMMA_REL_ERROR = 8 * _EPS
_BETA_REL_ERROR = 32 * _EPS


@dataclass(frozen=True)
class SpecialValue:
    """
    A special-function value with its absolute error estimate.

    Attributes:
        value: The function value
        abs_error: Nonnegative error estimate
    """
    value: float
    abs_error: float

    def __float__(self) -> float:
        return self.value


def _require_positive(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} must be a positive real number, got {x}")
    return x


def gamma(x: float) -> SpecialValue:
    """
    Gamma function on the positive real axis.

    Args:
        x: Positive argument

    Returns:
        SpecialValue: Gamma(x)

    Raises:
        DomainError: If x is not positive or Gamma(x) overflows
    """
    x = _require_positive("x", x)
    value = float(sp.gamma(x))
    if not math.isfinite(value):
        raise DomainError(f"gamma({x}) overflows double precision")
    return SpecialValue(value, _GAMMA_REL_ERROR * abs(value))


def beta(s: float, t: float) -> SpecialValue:
    """
    Beta function B(s, t) = Gamma(s)Gamma(t)/Gamma(s+t) for positive arguments.

    Args:
        s: First positive argument
        t: Second positive argument

    Returns:
        SpecialValue: B(s, t)

    Raises:
        DomainError: If either argument is not positive
    """
    s = _require_positive("s", s)
    t = _require_positive("t", t)
    # scipy's beta is not exactly symmetric for unequal arguments
    a, b = (s, t) if s <= t else (t, s)
    value = float(sp.beta(a, b))
    if not math.isfinite(value):
        raise DomainError(f"beta({s}, {t}) is not representable in double precision")
    return SpecialValue(value, _BETA_REL_ERROR * abs(value))


def reflection(alpha: float) -> SpecialValue:
    """
    Reflection value pi/sin(pi*alpha) = Gamma(alpha)Gamma(1-alpha).

    This is also the value of the integral of t^(alpha-1)(1-t)^(-alpha) over [0, 1].

    Args:
        alpha: Exponent in (0, 1)

    Returns:
        SpecialValue: pi/sin(pi*alpha)

    Raises:
        DomainError: If alpha is outside (0, 1)
    """
    alpha = float(alpha)
    if not (0.0 < alpha < 1.0):
        raise DomainError(f"reflection requires 0 < alpha < 1, got {alpha}")
    # sin(pi*a) = sin(pi*(1-a)); 1-a is exact for a >= 1/2
    reduced = alpha if alpha <= 0.5 else 1.0 - alpha
    value = math.pi / math.sin(math.pi * reduced)
    return SpecialValue(value, 4 * _EPS * value)
