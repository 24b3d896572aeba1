"""
Hilbert Matrix Operator
=======================

Overview:
---------
Three realizations of Hf for f analytic on the disk:

* matrix action on Taylor coefficients, b_n = sum_k a_k/(n+k+1)
* kernel integral, Hf(z) = int_0^1 f(t)/(1 - tz) dt
* average of weighted composition operators, Hf(z) = int_0^1 w_t(z) f(phi_t(z)) dt

and two representations of (Hf)'(z): the differentiated kernel t f(t)/(1-tz)^2
and the composed form t f(phi_t(z))/([(t-1)z+1](1-z)).

All integral forms use the function's declared growth f(w) = (1-w)^e R(w):
since 1 - phi_t(z) = (1-t)(1-z)/(1-(1-t)z), the composed forms carry the
same endpoint exponent e at t = 1 as the kernel form.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.linalg import hankel

from .errors import ConvergenceError, DomainError, NumericalError
from .functions import FunctionHandle
from .quadrature import DEFAULT_MAX_EVALUATIONS, SingularIntegrand, integrate

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
MAX_MATRIX_TERMS = 200_000
SERIES_RADIUS = 0.9
SERIES_TERMS = 400
IMAGE_CHUNK = 512
KERNEL = "kernel"
COMPOSED = "composed"

Value = Union[float, complex, np.ndarray]


@dataclass(frozen=True)
class WeightedComposition:
    """
    T_t f = w_t * (f o phi_t) with w_t(z) = 1/(1-(1-t)z) and phi_t(z) = t/(1-(1-t)z).

    Attributes:
        t: Parameter in (0, 1)
    """
    t: float

    def __post_init__(self):
        if not (0.0 < self.t < 1.0):
            raise DomainError(f"T_t needs 0 < t < 1, got {self.t}")

    def w_t(self, z):
        return 1.0 / (1.0 - (1.0 - self.t) * np.asarray(z))

    def phi_t(self, z):
        return self.t / (1.0 - (1.0 - self.t) * np.asarray(z))

    def apply(self, f: FunctionHandle, z):
        """(T_t f)(z)."""
        z = np.asarray(z)
        den = 1.0 - (1.0 - self.t) * z
        return f(self.t / den, (1.0 - self.t) * (1.0 - z) / den) / den


@dataclass(frozen=True)
class MatrixAction:
    """
    Truncated matrix action at a point.

    Attributes:
        value: sum_{n<=N} b_n z^n
        tail_bound: Bound on the omitted terms, sum_k |a_k| rho^(N+1)/((N+2)(1-rho))
        terms: N + 1
    """
    value: Value
    tail_bound: float
    terms: int


def _check_disk(z) -> np.ndarray:
    z = np.asarray(z)
    if not np.all(np.isfinite(z)):
        raise DomainError("evaluation point must be finite")
    if np.any(np.abs(z) >= 1.0):
        raise DomainError(f"evaluation point must lie in the open unit disk, got |z| = {np.max(np.abs(z))}")
    return z


def _check_growth(f: FunctionHandle) -> None:
    if f.boundary_exponent <= -1.0:
        raise DomainError(
            f"{f.name} grows like (1-t)^{f.boundary_exponent:g} at t = 1; "
            f"the integral defining Hf(0) diverges, so Hf is not defined")


def _require_positive_real_part(den: np.ndarray) -> None:
    if np.any(np.real(den) <= 0.0):
        raise NumericalError("kernel denominator left the right half-plane")


def _integrate(smooth, f: FunctionHandle, tol: float, max_evaluations: int) -> Value:
    integrand = SingularIntegrand(smooth, 0.0, f.boundary_exponent)
    return integrate(integrand, tol_abs=tol, tol_rel=tol, max_evaluations=max_evaluations).value


def apply_integral(f: FunctionHandle, z, tol: float = DEFAULT_TOL,
                   max_evaluations: int = DEFAULT_MAX_EVALUATIONS) -> Value:
    """
    Hf(z) = int_0^1 f(t)/(1 - tz) dt.

    Args:
        f: Function with declared growth exponent > -1
        z: Point or array of points in the open disk
        tol: Absolute and relative quadrature tolerance
        max_evaluations: Quadrature node budget

    Returns:
        Hf(z), real for real z when f is real on the axis

    Raises:
        DomainError: For |z| >= 1 or non-integrable growth of f
    """
    z = _check_disk(z)
    _check_growth(f)
    zb = z[..., None]

    def smooth(t, tc):
        # 1 - tz = (1 - z) + z(1 - t)
        den = (1.0 - zb) + zb * tc
        _require_positive_real_part(den)
        return f.regular_part(t, tc) / den

    return _integrate(smooth, f, tol, max_evaluations)


def apply_weighted_composition(f: FunctionHandle, z, tol: float = DEFAULT_TOL,
                               max_evaluations: int = DEFAULT_MAX_EVALUATIONS) -> Value:
    """
    Hf(z) = int_0^1 w_t(z) f(phi_t(z)) dt.

    Args:
        f: Function with declared growth exponent > -1
        z: Point or array of points in the open disk
        tol: Absolute and relative quadrature tolerance
        max_evaluations: Quadrature node budget

    Returns:
        Hf(z)
    """
    z = _check_disk(z)
    _check_growth(f)
    e = f.boundary_exponent
    zb = z[..., None]
    zc = 1.0 - zb

    def smooth(t, tc):
        # 1 - (1-t)z = (1 - z) + tz
        den = zc + t * zb
        _require_positive_real_part(den)
        ratio = zc / den
        phi, phic = t / den, tc * ratio
        return ratio ** e * f.regular_part(phi, phic) / den

    return _integrate(smooth, f, tol, max_evaluations)


def derivative(f: FunctionHandle, z, tol: float = DEFAULT_TOL, form: str = KERNEL,
               max_evaluations: int = DEFAULT_MAX_EVALUATIONS) -> Value:
    """
    (Hf)'(z) from the differentiated kernel or the composed representation.

    Args:
        f: Function with declared growth exponent > -1
        z: Point or array of points in the open disk
        tol: Absolute and relative quadrature tolerance
        form: "kernel" for int t f(t)/(1-tz)^2, "composed" for
              int t f(phi_t(z))/([(t-1)z+1](1-z))
        max_evaluations: Quadrature node budget

    Returns:
        (Hf)'(z)

    Raises:
        DomainError: For an unknown form, |z| >= 1, or z = 1 in the composed form
    """
    if form not in (KERNEL, COMPOSED):
        raise DomainError(f"unknown derivative form '{form}'; expected '{KERNEL}' or '{COMPOSED}'")
    if form == COMPOSED and np.any(np.asarray(z) == 1.0):
        raise DomainError("the composed derivative has a factor 1/(1-z) and is undefined at z = 1")
    z = _check_disk(z)
    _check_growth(f)
    zb = z[..., None]
    zc = 1.0 - zb

    if form == KERNEL:
        def smooth(t, tc):
            den = zc + zb * tc
            _require_positive_real_part(den)
            return t * f.regular_part(t, tc) / den ** 2
    else:
        e = f.boundary_exponent

        def smooth(t, tc):
            den = zc + t * zb
            _require_positive_real_part(den)
            ratio = zc / den
            return t * ratio ** e * f.regular_part(t / den, tc * ratio) / (den * zc)

    return _integrate(smooth, f, tol, max_evaluations)


def apply_matrix(f: FunctionHandle, z, truncation: Optional[int] = None,
                 tol: float = 1e-12) -> MatrixAction:
    """
    Hf(z) from the Hilbert matrix acting on the Taylor coefficients of f.

    The inner sum is exact (finite Taylor data); the outer sum is cut at the
    first N whose geometric tail bound at rho = max|z| is below tol/2, or at
    `truncation` when given.

    Args:
        f: Handle with taylor coefficients
        z: Point or array of points, |z| < 1
        truncation: Fixed number of output coefficients, overriding the adaptive choice
        tol: Target for the tail bound

    Returns:
        MatrixAction: Value, tail bound and number of terms

    Raises:
        DomainError: Without taylor data or for |z| >= 1
        ConvergenceError: If the tail bound needs more than MAX_MATRIX_TERMS terms
    """
    if f.taylor is None:
        raise DomainError(f"{f.name} has no Taylor coefficients; use apply_integral")
    z = _check_disk(z)
    a = np.asarray(f.taylor, dtype=float)
    amplitude = float(np.sum(np.abs(a)))
    rho = float(np.max(np.abs(z))) if z.size else 0.0

    def tail(n_last: int) -> float:
        if amplitude == 0.0 or rho == 0.0:
            return 0.0
        return amplitude * rho ** (n_last + 1) / ((n_last + 2) * (1.0 - rho))

    if truncation is not None:
        if truncation < 1:
            raise DomainError(f"truncation must be positive, got {truncation}")
        n_last = truncation - 1
    else:
        n_last = 0
        while tail(n_last) > tol / 2.0:
            n_last = 2 * n_last + 1
            if n_last > MAX_MATRIX_TERMS:
                raise ConvergenceError(
                    f"matrix action at |z| = {rho} needs more than {MAX_MATRIX_TERMS} terms",
                    best_estimate=None, abs_error=tail(MAX_MATRIX_TERMS))
    k = np.arange(a.size)
    column = 1.0 / (np.arange(n_last + 1) + 1.0)
    last_row = 1.0 / (n_last + 1.0 + k)
    b = hankel(column, last_row) @ a
    value = P.polyval(z, b)
    if np.ndim(value) == 0:
        value = complex(value) if np.iscomplexobj(value) else float(value)
    return MatrixAction(value, tail(n_last), n_last + 1)


def matrix_coefficients(f: FunctionHandle, n_terms: int) -> np.ndarray:
    """First n_terms Taylor coefficients b_n of Hf."""
    if f.taylor is None:
        raise DomainError(f"{f.name} has no Taylor coefficients")
    a = np.asarray(f.taylor, dtype=float)
    column = 1.0 / (np.arange(n_terms) + 1.0)
    last_row = 1.0 / (n_terms + np.arange(a.size))
    return hankel(column, last_row) @ a


def const_image(z) -> Value:
    """H(1)(z) = (1/z) log(1/(1-z)), with H(1)(0) = 1."""
    z = _check_disk(z)
    small = np.abs(z) < 1e-8
    safe = np.where(small, 0.5, z)
    value = np.where(small, 1.0 + z / 2.0, -np.log1p(-safe) / safe)
    return value if value.ndim else value[()]


def const_image_derivative(z) -> Value:
    """H(1)'(z) = 1/(z(1-z)) - (1/z^2) log(1/(1-z)); series sum n z^(n-1)/(n+1) near 0."""
    z = _check_disk(z)
    small = np.abs(z) < 0.25
    safe = np.where(small, 0.5, z)
    closed = 1.0 / (safe * (1.0 - safe)) + np.log1p(-safe) / safe ** 2
    n = np.arange(1, 61)
    series = np.sum(n / (n + 1.0) * z[..., None] ** (n - 1), axis=-1)
    value = np.where(small, series, closed)
    return value if value.ndim else value[()]


def monomial_images(z, max_degree: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    H(t^k)(z) and H(t^k)'(z) for k = 0..max_degree.

    Inside |z| < 0.9 both come from the Taylor series sum_n z^n/(n+k+1). Outside,
    I_k = H(t^k) satisfies I_k = 1/(k+1) + z I_{k+1}, run upwards from the closed
    form of H(1); the error growth is bounded by (1/0.9)^max_degree.

    Args:
        z: Point or array of points, |z| < 1
        max_degree: Largest k

    Returns:
        tuple: (values, derivatives), each of shape z.shape + (max_degree + 1,)
    """
    if max_degree < 0:
        raise DomainError(f"max_degree must be nonnegative, got {max_degree}")
    z = _check_disk(z).astype(complex)
    shape = z.shape
    flat = z.ravel()
    k = np.arange(max_degree + 1)
    values = np.empty((flat.size, k.size), dtype=complex)
    derivs = np.empty_like(values)

    inner = np.abs(flat) < SERIES_RADIUS
    if np.any(inner):
        zi = flat[inner]
        n = np.arange(SERIES_TERMS)
        powers = zi[:, None] ** n[None, :]
        weights = 1.0 / (n[:, None] + k[None, :] + 1.0)
        values[inner] = powers @ weights
        lower_powers = np.concatenate([np.zeros((zi.size, 1)), powers[:, :-1]], axis=1)
        derivs[inner] = (lower_powers * n[None, :]) @ weights
    outer = ~inner
    if np.any(outer):
        zo = flat[outer]
        current = np.asarray(const_image(zo), dtype=complex)
        current_d = np.asarray(const_image_derivative(zo), dtype=complex)
        values[outer, 0], derivs[outer, 0] = current, current_d
        for j in range(max_degree):
            following = (current - 1.0 / (j + 1.0)) / zo
            current_d = (current_d - following) / zo
            current = following
            values[outer, j + 1], derivs[outer, j + 1] = current, current_d
    return values.reshape(shape + (k.size,)), derivs.reshape(shape + (k.size,))


def image_handle(f: FunctionHandle, tol: float = DEFAULT_TOL) -> FunctionHandle:
    """
    Hf as a FunctionHandle, evaluated by the kernel integral.

    Hf has nonnegative Taylor coefficients whenever f has, so the radial flag
    carries over. Points are integrated in chunks of IMAGE_CHUNK.
    """
    _check_growth(f)

    def chunked(fn):
        def evaluate(z, zc=None):
            z = np.asarray(z)
            flat = z.ravel()
            parts = [np.atleast_1d(fn(f, flat[i:i + IMAGE_CHUNK], tol))
                     for i in range(0, flat.size, IMAGE_CHUNK)]
            out = np.concatenate(parts) if parts else np.zeros(0)
            return out.reshape(z.shape) if z.ndim else out[0]
        return evaluate

    integral = chunked(apply_integral)
    slope = chunked(derivative)
    return FunctionHandle(
        name=f"H[{f.name}]",
        evaluator=integral,
        radial_profile_known=f.radial_profile_known,
        derivative_evaluator=lambda z: slope(z),
        real_on_axis=f.real_on_axis,
    )
