"""Shared exception types."""


class MmpError(Exception):
    """Base class for all errors raised by this package."""


class MmpSyntaxError(MmpError):
    """Malformed MMP hypergraph or coordinatization text."""


class ValidationError(MmpError):
    """Structurally invalid hypergraph (edge too small, duplicate edge, ...)."""


class UnknownVertexError(MmpError):
    """A referenced vertex does not exist in the hypergraph."""


class RingMismatchError(MmpError):
    """Arithmetic attempted between incompatible scalar rings."""


class CoordinatizationError(MmpError):
    """Missing, malformed, or inconsistent vertex rays."""


class BudgetExceededError(MmpError):
    """A search ran out of its node budget; the answer is indeterminate."""
