"""Exception types raised across the package."""


class NotInvertibleError(ValueError):
    """A series or set whose constant term is 0 was used where f0 = 1 is required."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration, recursion or search cap was exceeded."""


class PreconditionError(ValueError):
    """An argument lies outside the documented domain of an operation."""


class NonCanonicalError(ValueError):
    """Theta parameters with gcd(c1, c2) != 1."""


class EmptySetError(ValueError):
    """Theta parameters whose range is not contained in the nonnegative integers."""


class RangeError(IndexError):
    """An index at or beyond the truncation length of a series was requested."""
