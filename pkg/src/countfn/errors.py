class CountfnError(Exception):
    """Base class for all errors raised by this package."""


class NonCyclicallyReduced(CountfnError):
    """A group word cannot be raised to a power without cancellation."""


class NoWitnessFound(CountfnError):
    """The witness catalog was exhausted for an unbounded function.

    Every nonzero canonical form has a witness, so seeing this means
    something upstream is broken.
    """


class ParseError(CountfnError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        self.message = message
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)

    def caret(self) -> str:
        if self.position is None:
            return ""
        return f"  {self.text}\n  {' ' * self.position}^"


class LetterOutOfRank(ParseError):
    pass


class UnreducedWord(ParseError):
    pass


class InverseInMonoid(ParseError):
    pass


class PhiEpsilon(ParseError):
    pass


class BoundedFunction(CountfnError):
    """A witness was requested for a function whose canonical form is zero."""
