"""Exception types shared across the package."""


class MonocurveError(Exception):
    """Base class for all package errors."""


class InputError(MonocurveError, ValueError):
    """A precondition on user-supplied input was violated."""


class GcdNotOne(InputError):
    """Generators have gcd > 1, so the complement in N would be infinite."""


class NotInSemigroup(InputError):
    """An element required to lie in the semigroup does not."""


class NotMinimalArithmetic(InputError):
    """The sequence is not a minimal arithmetic sequence."""


class PTooSmall(InputError):
    """The arithmetic closed form needs at least three terms."""


class TypeUndefinedForNaturals(InputError):
    """N itself has no pseudo-Frobenius elements, hence no type."""


class CmNotAssumed(InputError):
    """Operation requires the Cohen-Macaulay assumption on the curve."""


class SearchCapExceeded(MonocurveError):
    """An exponent search hit its cap: non-CM input or a cap set too low."""

    def __init__(self, what: str, cap: int):
        super().__init__(
            f"search for {what} exceeded cap {cap}; the input may not be "
            "Cohen-Macaulay, or the cap is set too low"
        )
        self.cap = cap


class BoxOverflow(MonocurveError):
    """An enumeration box exceeds the configured memory cap."""
