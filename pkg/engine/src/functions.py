"""
Analytic Function Handles
=========================

Overview:
---------
FunctionHandle wraps an analytic function on the unit disk: a closed-form
evaluator, optional finite Taylor coefficients, and the endpoint growth on
[0, 1) that quadrature needs, declared as f(w) = (1 - w)^e * R(w).

Evaluators take (z, zc) where zc = 1 - z may be supplied by the caller. The
quadrature nodes carry 1 - t without cancellation, so factors like 1 - z^2
are formed as zc * (1 + z) and stay accurate as t -> 1.

Features:
---------
* Named registry: const, monomial:k, poly:[c0, c1, ...], f_alpha,
  f_alpha_plain, h_alpha, h_one
* Closed-form derivatives for the named functions, termwise for polynomials
* Positive scaling (c * f) for the homogeneity checks
"""
import json
import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Optional

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DomainError

logger = logging.getLogger(__name__)

Evaluator = Callable[[np.ndarray, Optional[np.ndarray]], np.ndarray]
Derivative = Callable[[np.ndarray], np.ndarray]

LOG2 = math.log(2.0)


def _complement(z: np.ndarray, zc: Optional[np.ndarray]) -> np.ndarray:
    return 1.0 - z if zc is None else zc


@dataclass(frozen=True)
class FunctionHandle:
    """
    An analytic function on the open unit disk.

    Attributes:
        name: Registry identifier
        evaluator: (z, zc=None) -> f(z); zc = 1 - z when known accurately
        taylor: Finite Taylor coefficients a_0..a_N, if the function is a polynomial
        radial_profile_known: |f| is maximized on [0, 1) on every circle |z| = r
        boundary_exponent: e in f(w) = (1 - w)^e R(w); e > -1 is needed for Hf
        regular: R(w, wc), bounded near w = 1 up to logarithms; None means R = f
        derivative_evaluator: Closed-form f'(z), if available
        real_on_axis: f takes real values on (-1, 1)
    """
    name: str
    evaluator: Evaluator
    taylor: Optional[np.ndarray] = None
    radial_profile_known: bool = False
    boundary_exponent: float = 0.0
    regular: Optional[Evaluator] = None
    derivative_evaluator: Optional[Derivative] = None
    real_on_axis: bool = True

    def __call__(self, z, zc=None) -> np.ndarray:
        z = np.asarray(z)
        return self.evaluator(z, None if zc is None else np.asarray(zc))

    def regular_part(self, w: np.ndarray, wc: Optional[np.ndarray] = None) -> np.ndarray:
        """R(w) with f(w) = (1 - w)^e R(w)."""
        if self.regular is None:
            return self.evaluator(w, wc)
        return self.regular(w, wc)

    @property
    def degree(self) -> Optional[int]:
        return None if self.taylor is None else len(self.taylor) - 1

    def taylor_derivative(self) -> Optional[np.ndarray]:
        """Coefficients of f' when taylor is present."""
        if self.taylor is None:
            return None
        if len(self.taylor) == 1:
            return np.zeros(1)
        return P.polyder(self.taylor)

    def scaled(self, c: float) -> "FunctionHandle":
        """
        The handle of c*f for a real c > 0.

        Args:
            c: Positive factor

        Returns:
            FunctionHandle: Scaled function, same growth and radial profile
        """
        if not (c > 0 and math.isfinite(c)):
            raise DomainError(f"scale factor must be positive and finite, got {c}")
        ev, reg, der = self.evaluator, self.regular, self.derivative_evaluator
        return replace(
            self,
            name=f"{c:g}*{self.name}",
            evaluator=lambda z, zc=None: c * ev(z, zc),
            taylor=None if self.taylor is None else c * self.taylor,
            regular=None if reg is None else (lambda w, wc=None: c * reg(w, wc)),
            derivative_evaluator=None if der is None else (lambda z: c * der(z)),
        )


def polynomial(coefficients, name: Optional[str] = None) -> FunctionHandle:
    """
    Handle for a polynomial with real coefficients.

    The radial profile is known when every coefficient is nonnegative, since
    then |f(z)| <= f(|z|).

    Args:
        coefficients: a_0..a_N
        name: Optional identifier, defaults to poly:[...]

    Returns:
        FunctionHandle: Polynomial handle with taylor set
    """
    coeffs = np.atleast_1d(np.asarray(coefficients, dtype=float))
    if coeffs.ndim != 1 or coeffs.size == 0:
        raise DomainError("polynomial needs a non-empty list of coefficients")
    if not np.all(np.isfinite(coeffs)):
        raise DomainError("polynomial coefficients must be finite")
    der = P.polyder(coeffs) if coeffs.size > 1 else np.zeros(1)
    return FunctionHandle(
        name=name or f"poly:{json.dumps(coeffs.tolist())}",
        evaluator=lambda z, zc=None: P.polyval(z, coeffs),
        taylor=coeffs,
        radial_profile_known=bool(np.all(coeffs >= 0)),
        derivative_evaluator=lambda z: P.polyval(z, der),
    )


def constant() -> FunctionHandle:
    """The constant function 1."""
    handle = polynomial([1.0], name="const")
    return replace(handle, evaluator=lambda z, zc=None: np.ones_like(z))


def monomial(k: int) -> FunctionHandle:
    """z^k for k >= 0."""
    if k < 0:
        raise DomainError(f"monomial degree must be nonnegative, got {k}")
    coeffs = np.zeros(k + 1)
    coeffs[k] = 1.0
    return replace(polynomial(coeffs, name=f"monomial:{k}"),
                   evaluator=lambda z, zc=None: z ** k)


def _require_alpha(name: str, alpha: Optional[float], lo: float, hi: float) -> float:
    if alpha is None:
        raise DomainError(f"{name} needs an alpha")
    alpha = float(alpha)
    if not (lo < alpha < hi):
        raise DomainError(f"{name} requires {lo} < alpha < {hi}, got {alpha}")
    return alpha


def f_alpha(alpha: float) -> FunctionHandle:
    """
    f_a(z) = 1/((1 - z^2)^a log(2 e^(1/a)/(1 - z^2))), unit norm in the log-Korenblum space.

    Args:
        alpha: Exponent in (0, 1)
    """
    alpha = _require_alpha("f_alpha", alpha, 0.0, 1.0)
    c = LOG2 + 1.0 / alpha

    def evaluate(z, zc=None):
        q = _complement(z, zc) * (1.0 + z)
        return q ** (-alpha) / (c - np.log(q))

    def regular(w, wc=None):
        wc = _complement(w, wc)
        return (1.0 + w) ** (-alpha) / (c - np.log(wc * (1.0 + w)))

    def derivative(z):
        q = (1.0 - z) * (1.0 + z)
        log_term = c - np.log(q)
        return 2.0 * z * q ** (-alpha - 1.0) * (alpha / log_term - 1.0 / log_term ** 2)

    return FunctionHandle("f_alpha", evaluate, radial_profile_known=True,
                          boundary_exponent=-alpha, regular=regular,
                          derivative_evaluator=derivative)


def f_alpha_plain(alpha: float) -> FunctionHandle:
    """
    f_a(z) = 1/(1 - z^2)^a, unit norm in the Korenblum space.

    Args:
        alpha: Exponent > 0; Hf is defined only for alpha < 1
    """
    alpha = _require_alpha("f_alpha_plain", alpha, 0.0, math.inf)

    def evaluate(z, zc=None):
        return (_complement(z, zc) * (1.0 + z)) ** (-alpha)

    def regular(w, wc=None):
        return (1.0 + w) ** (-alpha)

    def derivative(z):
        return 2.0 * alpha * z * ((1.0 - z) * (1.0 + z)) ** (-alpha - 1.0)

    return FunctionHandle("f_alpha_plain", evaluate, radial_profile_known=True,
                          boundary_exponent=-alpha, regular=regular,
                          derivative_evaluator=derivative)


def h_alpha(alpha: float) -> FunctionHandle:
    """
    h_a(z) = ((1 - z^2)^(1-a) - 1)/(2(a - 1)), unit norm in the a-Bloch space.

    h_a(0) = 0 and h_a'(z) = z/(1 - z^2)^a.

    Args:
        alpha: Exponent > 0, alpha != 1

    Raises:
        DomainError: For alpha = 1; use h_one there
    """
    alpha = _require_alpha("h_alpha", alpha, 0.0, math.inf)
    if alpha == 1.0:
        raise DomainError("h_alpha is undefined at alpha = 1; use h_one")
    scale = 1.0 / (2.0 * (alpha - 1.0))

    def evaluate(z, zc=None):
        q = _complement(z, zc) * (1.0 + z)
        return scale * (q ** (1.0 - alpha) - 1.0)

    def derivative(z):
        return z * ((1.0 - z) * (1.0 + z)) ** (-alpha)

    if alpha > 1.0:
        def regular(w, wc=None):
            wc = _complement(w, wc)
            return scale * ((1.0 + w) ** (1.0 - alpha) - wc ** (alpha - 1.0))
        exponent = 1.0 - alpha
    else:
        regular = None
        exponent = 0.0
    return FunctionHandle("h_alpha", evaluate, radial_profile_known=True,
                          boundary_exponent=exponent, regular=regular,
                          derivative_evaluator=derivative)


def h_one() -> FunctionHandle:
    """h_1(z) = log(1/(1 - z)), the Bloch-space test function."""
    def evaluate(z, zc=None):
        return -np.log(_complement(z, zc))

    return FunctionHandle("h_one", evaluate, radial_profile_known=True,
                          derivative_evaluator=lambda z: 1.0 / (1.0 - z))


class FunctionRegistry:
    """
    Named function builders keyed by identifier.

    Parametrized identifiers ("monomial:3", "poly:[1, 0.5]") are split at the
    first colon; the part after it is handed to the builder.
    """

    def __init__(self):
        self._builders: Dict[str, Callable[..., FunctionHandle]] = {}

    def register(self, name: str, builder: Callable[..., FunctionHandle]) -> None:
        self._builders[name] = builder
        logger.debug(f"Registered function: {name}")

    @property
    def names(self) -> List[str]:
        return sorted(self._builders)

    def resolve(self, identifier: str, alpha: Optional[float] = None) -> FunctionHandle:
        """
        Build the handle for an identifier.

        Args:
            identifier: Registry id, e.g. "const", "monomial:2", "poly:[1,2]", "f_alpha"
            alpha: Parameter for the alpha families

        Returns:
            FunctionHandle: The named function

        Raises:
            DomainError: For unknown ids or malformed parameters
        """
        name, _, argument = identifier.strip().partition(":")
        builder = self._builders.get(name)
        if builder is None:
            raise DomainError(f"unknown function '{identifier}'; known: {', '.join(self.names)}")
        return builder(argument, alpha)


def _parse_monomial(argument: str, alpha: Optional[float]) -> FunctionHandle:
    try:
        return monomial(int(argument))
    except ValueError:
        raise DomainError(f"monomial needs an integer degree, got '{argument}'")


def _parse_poly(argument: str, alpha: Optional[float]) -> FunctionHandle:
    try:
        coeffs = json.loads(argument)
    except json.JSONDecodeError:
        raise DomainError(f"poly needs a JSON list of coefficients, got '{argument}'")
    if not isinstance(coeffs, list) or not all(isinstance(c, (int, float)) for c in coeffs):
        raise DomainError(f"poly needs a list of real numbers, got '{argument}'")
    return polynomial(coeffs)


registry = FunctionRegistry()
registry.register("const", lambda argument, alpha: constant())
registry.register("monomial", _parse_monomial)
registry.register("poly", _parse_poly)
registry.register("f_alpha", lambda argument, alpha: f_alpha(alpha))
registry.register("f_alpha_plain", lambda argument, alpha: f_alpha_plain(alpha))
registry.register("h_alpha", lambda argument, alpha: h_alpha(alpha))
registry.register("h_one", lambda argument, alpha: h_one())


def resolve_function(identifier: str, alpha: Optional[float] = None) -> FunctionHandle:
    """Resolve an identifier in the default registry."""
    return registry.resolve(identifier, alpha)
