"""Exception types shared across the package."""

from __future__ import annotations


class GlsobolevError(Exception):
    """Base class for package errors."""


class DomainError(GlsobolevError, ValueError):
    """A parameter lies outside the mathematical domain of an operation."""


class InputError(GlsobolevError, ValueError):
    """Malformed configuration or input data."""


class QuadratureError(GlsobolevError, RuntimeError):
    """Quadrature failed to certify the requested tolerance.

    Carries the diagnostics dict of the failed integration attempt.
    """

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DivergentIntegralError(QuadratureError):
    """Tail growth indicates the integral has no finite value."""
