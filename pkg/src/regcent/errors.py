"""Exception types shared across the package."""


class RegcentError(Exception):
    """Base class for all package errors."""


class GraphParseError(RegcentError):
    """Malformed graph text. Carries the byte offset or line number."""

    def __init__(self, message, offset=None, line=None):
        super().__init__(message)
        self.offset = offset
        self.line = line


class GraphConstructionError(RegcentError):
    """Invalid construction input (bad permutation, bad LCF shift list, ...)."""


class ConnectivityError(RegcentError):
    """Operation requires a connected graph."""


class UndefinedMeasureError(RegcentError):
    """Measure is undefined for this input (e.g. closeness on a single vertex)."""


class DivergenceError(RegcentError):
    """Series parameter outside the convergence region. Carries a spectral bound."""

    def __init__(self, message, spectral_radius=None):
        super().__init__(message)
        self.spectral_radius = spectral_radius


class NumericFaultError(RegcentError):
    """A numeric kernel failed its own accuracy contract."""


class PreconditionError(RegcentError):
    """Caller violated a documented operation precondition."""


class UnknownNameError(RegcentError):
    """Unknown catalog entry or output format name."""


class PredicateError(RegcentError):
    """Search predicate expression failed to parse or names an unknown test."""


class BudgetExceededError(RegcentError):
    """A bounded search exhausted its node budget before completing."""


class InternalInconsistencyError(RegcentError):
    """Two routes to the same exact fact disagreed; indicates a bug, not a finding."""
