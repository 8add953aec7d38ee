"""Exception types raised by the construction and verification pipeline."""


class ContractionError(Exception):
    """Base class for all package errors."""


class DomainError(ContractionError, ValueError):
    """(n, s) outside the supported range: need n >= 2 and s even with 2 <= s <= n."""


class SupportError(ContractionError, ValueError):
    """A root support is not contained in the expected root set."""


class RegimeError(ContractionError, ValueError):
    """Operation not defined for this regime (e.g. n = s)."""


class StructureError(ContractionError):
    """A constructed family fails to be a Heisenberg set."""


class CardinalityError(ContractionError):
    """A constructed set has the wrong size."""


class SingularError(ContractionError, ArithmeticError):
    """A linear system that should be uniquely solvable is singular."""


class ConditionCError(ContractionError):
    """Both alpha and theta(alpha) lie in the nilradical."""


class ConditionCPrimeError(ContractionError):
    """|S_alpha| is outside {1, 2, 3} or an O3 root lacks its witness."""


class SequenceError(ContractionError):
    """A sequence step has no unique admissible successor."""


class NonIntegralError(ContractionError, ArithmeticError):
    """Some coefficient of s(gamma) is not a non-negative integer."""


class ZeroWeightError(ContractionError, ArithmeticError):
    """gamma + s(gamma) vanishes."""


class OddDimensionError(ContractionError, ValueError):
    """A skew form was requested on an odd-dimensional space."""
