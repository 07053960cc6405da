"""Exception types shared across the package."""


class KohlerSqsError(Exception):
    """Base class for all library errors."""


class InvalidSpecError(KohlerSqsError):
    """A group specification (factor list or spec string) is malformed."""


class InvalidInputError(KohlerSqsError):
    """An element, subset or block does not satisfy an operation's precondition."""


class CapacityError(KohlerSqsError):
    """The group order exceeds the configured enumeration limit."""


class InvalidOrderError(KohlerSqsError):
    """The group order is ruled out (SQS need v congruent to 2 or 4 mod 6)."""


class NoInvolutionError(KohlerSqsError):
    """The group has odd order and therefore no element of order 2."""


class InternalInconsistencyError(KohlerSqsError):
    """A closed-form value and its enumeration disagree; indicates a bug."""
