"""
Engine Error Types
==================

Exception hierarchy shared by the numerical modules, the service layer and the
command-line surface. Every class carries the process exit code that main.py
returns when the error escapes a command.
"""
from typing import Optional, Any


class HilbertNormError(Exception):
    """Base class for all errors raised by the engine."""

    exit_code = 4


class DomainError(HilbertNormError, ValueError):
    """An argument lies outside the domain of the requested operation."""

    exit_code = 2


class ConfigError(HilbertNormError):
    """A run configuration, config file or selector could not be accepted."""

    exit_code = 2


class NumericalError(HilbertNormError, ArithmeticError):
    """An internal numerical invariant was violated."""

    exit_code = 4


class ConvergenceError(NumericalError):
    """
    An iterative computation ran out of budget before reaching its tolerance.

    Args:
        message: Description of what failed to converge
        best_estimate: Best value available when the budget ran out
        abs_error: Error estimate attached to best_estimate
    """

    def __init__(self, message: str, best_estimate: Optional[Any] = None,
                 abs_error: Optional[Any] = None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.abs_error = abs_error


class UnboundedRegimeError(HilbertNormError):
    """
    A norm was requested for an operator setting that is not bounded.

    Args:
        message: Description quoting the regime
        regime: Short regime label, e.g. "alpha >= 1 for korenblum -> bloch-plus-one"
    """

    exit_code = 3

    def __init__(self, message: str, regime: str):
        super().__init__(message)
        self.regime = regime
