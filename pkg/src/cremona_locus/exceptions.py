"""Exception types for cremona-locus."""

from typing import Optional


class CremonaLocusError(Exception):
    """Base class for all errors raised by this package."""
    pass


class NotationParseError(CremonaLocusError, ValueError):
    """Raised when a system in L3(d; m1^r1, ...) notation cannot be parsed."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        super().__init__(message)
        self.text = text
        self.position = position

    def caret(self) -> str:
        """Render the offending text with a caret under the error position."""
        if self.position is None:
            return self.text
        return f"{self.text}\n{' ' * self.position}^"


class TooManyPointsError(CremonaLocusError, ValueError):
    """Raised when more than 8 multiplicities are given."""
    pass


class PreconditionError(CremonaLocusError, ValueError):
    """Raised when an operation is called outside its documented domain."""
    pass


class EmptySystemError(CremonaLocusError):
    """Raised when an operation needs a non-empty linear system."""
    pass


class InconsistencyError(CremonaLocusError):
    """Raised when a computed result contradicts a theorem the code relies on."""
    pass


class OracleError(CremonaLocusError):
    """Raised when the finite-field oracle cannot produce an answer."""
    pass
