"""Exception types shared across the package."""


class FQHError(Exception):
    """Base class for package errors."""


class ShapeError(FQHError, ValueError):
    """Dimensions or lengths do not fit together."""


class PreconditionError(FQHError, ValueError):
    """A mathematical precondition of an operation fails.

    The message names the condition, e.g. ``"α=−1 forbidden: φ cannot
    be faithful"``.
    """


class MalformedInput(FQHError, ValueError):
    """Serialized input does not follow the bundle schema."""
