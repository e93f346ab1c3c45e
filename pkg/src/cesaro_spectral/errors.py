"""Exception types shared across the package."""

from __future__ import annotations


class CesaroError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CesaroError, ValueError):
    """An argument lies outside the domain of an operation."""


class NonConvergenceError(CesaroError, ArithmeticError):
    """A Cesaro ladder or quadrature failed to stabilise.

    ``estimates`` holds whatever was computed before giving up so callers
    can report it.
    """

    def __init__(self, message: str, estimates=None, achieved: float | None = None):
        super().__init__(message)
        self.estimates = list(estimates) if estimates is not None else []
        self.achieved = achieved


class EnumerationRangeError(CesaroError, ValueError):
    """A spectrum was queried beyond its enumeration horizon."""


class EllipticityError(CesaroError, ValueError):
    """Leading symbol coefficient is not strictly positive."""


class OrderError(CesaroError, ValueError):
    """A truncated series is not known to high enough order."""


class PoleError(CesaroError, ZeroDivisionError):
    """A closed formula hits a vanishing denominator."""


class CapabilityError(CesaroError, TypeError):
    """A test functional lacks data (derivatives, finite-part evaluator) an operation needs."""


class UnsupportedError(CesaroError, NotImplementedError):
    """The requested case is outside what the implementation covers."""
