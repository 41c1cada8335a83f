"""Shared exception types."""


class LegdetError(Exception):
    """Base class for package-specific failures."""


class DiscrepancyError(LegdetError):
    """Two independent computations of the same quantity disagree.

    Raised by the dual-route checks: the rank-one determinant update,
    the Cauchy closed form, the paired class-number methods, and the
    exact determinant identities.  A firing means a bug or a falsified
    identity, never bad input.
    """


class PrecisionError(LegdetError):
    """A numeric result sits too far from the nearest admissible value."""
