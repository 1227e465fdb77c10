"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands live over different numbers of base variables."""


class MalformedGraphError(ValueError):
    """Graph data violates a structural invariant (loops, bad labels)."""


class PreconditionError(ValueError):
    """An operation's mathematical precondition failed."""


class ParseError(ValueError):
    """Text input rejected; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position
