"""Exception types raised across the package."""


class CremmerError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(CremmerError, ZeroDivisionError):
    pass


class ContextMismatch(CremmerError, ValueError):
    pass


class UnsupportedSubstitution(CremmerError, ValueError):
    pass


class UnknownGenerator(CremmerError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown generator"


class ParseError(CremmerError, ValueError):
    """Syntax error in a coefficient expression; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int, src: str = ""):
        self.pos = pos
        self.src = src
        super().__init__(f"{message} at position {pos}")


class DimensionMismatch(CremmerError, ValueError):
    pass


class IndexOutOfRange(CremmerError, IndexError):
    pass


class NotPolynomial(CremmerError, ValueError):
    """A generating-function pair leaves a nonzero remainder on division."""


class ExponentOutOfRange(CremmerError, ValueError):
    """A generating-function pair produces an exponent outside 1..n."""


class FormatError(CremmerError, ValueError):
    """Malformed JSON operator document."""
