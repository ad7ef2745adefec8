"""Exception types raised across the package."""


class ZeroInversion(ZeroDivisionError):
    """The zero scalar was inverted."""


class IndexOutOfRange(IndexError):
    """A generator index outside 1..3."""


class DiagonalNotInLq(ValueError):
    """A diagonal monomial z3^h z2^h z1^h was asked for a Lie certificate."""


class InvalidPair(ValueError):
    """Generator pair is not one of (3, 2), (3, 1), (2, 1)."""


class ZeroPolynomial(ValueError):
    """An all-zero coefficient list was given where a nonzero one is needed."""


class DomainError(ValueError):
    """An expression is well formed but has no value (e.g. I1^-1)."""


class ParseError(ValueError):
    """Malformed expression text.

    ``position`` is the 1-based column of the offending character and
    ``expected`` the set of tokens that would have been accepted there.
    """

    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")
