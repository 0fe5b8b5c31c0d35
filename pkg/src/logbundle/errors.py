"""Domain errors raised by the library.

Everything inherits from LogBundleError (a ValueError), so callers can
catch broadly; the CLI maps these to exit code 1 with a structured record.
"""

from __future__ import annotations


class LogBundleError(ValueError):
    """Base class for all domain errors."""


class GeneralPositionError(LogBundleError):
    """A point or form configuration fails general position.

    Carries the indices of an offending (dependent) subset.
    """

    def __init__(self, message=None, indices=()):
        self.indices = tuple(indices)
        super().__init__(message or f"dependent subset at indices {self.indices}")


class InterpolationError(LogBundleError):
    """Dense interpolation failed: inconsistent or rank-deficient samples."""


class NonUniquePsiError(LogBundleError):
    """The incidence system for a parametrized map has no unique solution."""


class FullComplexError(LogBundleError):
    """The membership determinant vanishes identically; the locus is not a curve."""


class ClassifierInconsistencyError(LogBundleError):
    """The deterministic classifier and the intertwiner solver disagree."""
