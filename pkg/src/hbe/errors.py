"""Shared exception types."""


class DomainError(ValueError):
    """A point lies outside an operation's admissible domain."""


class OutOfSpanError(ArithmeticError):
    """A product left the rational span of (1, ln2, ln^2 2, pi^2).

    No catalogued identity triggers this; raising it signals misuse of the
    constant ring.
    """


class PoleError(ValueError):
    """digamma/trigamma requested at (or too close to) a nonpositive integer."""


class SingularSystemError(RuntimeError):
    """An exact linear system admitted no unique solution."""
