"""Exception types shared across the package."""


class LexoptError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(LexoptError, ValueError):
    """An input violates its documented domain.

    The message always names the offending field so callers (and the CLI)
    can report it directly.
    """


class DomainError(LexoptError, ArithmeticError):
    """A mathematically undefined operation was requested on otherwise valid inputs.

    Examples: a marginal-rate ratio at a zero denominator, a shadow price
    that is not strictly positive where positivity is required, or a
    finite-difference stencil that leaves the function's domain.
    """
