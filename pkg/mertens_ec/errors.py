from __future__ import annotations


class MertensError(ValueError):
    """Base for every mathematically invalid input or failed cross-check."""

    kind = "error"


class NotPrimePower(MertensError):
    kind = "not a prime power"


class RangeExceeded(MertensError):
    kind = "out of range"


class MixedFields(MertensError, TypeError):
    kind = "mixed fields"


class FieldZeroDivision(MertensError, ZeroDivisionError):
    kind = "division by zero"


class HasseViolation(MertensError):
    kind = "hasse violation"


class Inadmissible(MertensError):
    kind = "inadmissible"


class DoubleZero(MertensError):
    kind = "double zero"


class NotPeriodic(MertensError):
    kind = "not periodic"


class SingularCurve(MertensError):
    kind = "singular curve"


class FieldTooLarge(MertensError):
    kind = "field too large"


class InvalidEpsilon(MertensError):
    kind = "invalid epsilon"


class ConsistencyError(MertensError):
    # two independent computations disagreed
    kind = "inconsistent"
