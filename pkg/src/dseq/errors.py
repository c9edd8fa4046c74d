"""Exception hierarchy shared by every layer."""


class DseqError(Exception):
    """Base class for all library errors."""


class ParseError(DseqError):
    """Malformed polynomial or problem text; ``pos`` is a 0-based offset."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class RingMismatchError(DseqError):
    """Operands live in different rings."""


class DegenerateInputError(DseqError):
    """A division or colon by zero was requested."""


class PreconditionError(DseqError):
    """An operation was called outside its stated hypotheses."""


class PropertyViolation(DseqError):
    """A proven implication failed to hold: this is a bug in the engine."""


class BudgetExceeded(DseqError):
    """A bounded search or tabulation ran past its cap."""
