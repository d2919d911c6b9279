"""Exception types shared across the package."""


class WpolyError(Exception):
    """Base class for all library-specific errors."""


class ContextMismatchError(WpolyError):
    """Operands belong to different coefficient contexts."""


class CapabilityMissingError(WpolyError):
    """The context cannot perform the requested operation exactly."""


class DomainRequiredError(WpolyError):
    """An infinite context needs an explicit search domain for this query."""


class NotSplitError(WpolyError):
    """No complete factorization into linear factors was found.

    Raised either because none exists or because the context's decidable
    search space is exhausted; ``reason`` distinguishes the two.
    """

    def __init__(self, reason, partial_roots=()):
        super().__init__(reason)
        self.reason = reason
        self.partial_roots = tuple(partial_roots)


class NotFullError(WpolyError):
    """An algebraic set fails the required closure property."""


class NotPIndependentError(WpolyError):
    """The given elements are P-dependent where independence is required."""


class DisjointnessError(WpolyError):
    """Two sets required to be disjoint share an element."""


class ClassMembershipError(WpolyError):
    """An element lies in a conjugacy class it was required to avoid."""


class ParseError(WpolyError):
    """Syntax error in an element or polynomial literal."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class WrongRingError(ParseError):
    """A literal uses a symbol the selected ring does not define."""
