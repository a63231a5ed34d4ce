"""Exception hierarchy.

Every error raised for bad input derives from :class:`BettiError` (a
``ValueError``), so callers can catch input problems in one place.
"""


class BettiError(ValueError):
    """Base class for invalid tables, sequences and arguments."""


class NotDivisible(BettiError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class EmptyTable(BettiError):
    pass


class NonpositiveEntry(BettiError):
    def __init__(self, i, j, value):
        super().__init__(f"entry beta[{i},{j}] = {value} is not positive")
        self.i, self.j, self.value = i, j, value


class SupportViolation(BettiError):
    def __init__(self, i, j):
        super().__init__(
            f"beta[{i},{j}] is nonzero but column {i - 1} has no entry in degree < {j}"
        )
        self.i, self.j = i, j


class ParseError(BettiError):
    def __init__(self, line_no, line, reason):
        super().__init__(f"line {line_no}: {reason}: {line!r}")
        self.line_no, self.line, self.reason = line_no, line, reason


class TotalMismatch(BettiError):
    def __init__(self, column, stated, actual):
        super().__init__(f"column {column}: total row says {stated}, entries sum to {actual}")
        self.column, self.stated, self.actual = column, stated, actual


class InvalidSequence(BettiError):
    """Not a strictly increasing integer sequence of length >= 1."""


class InvalidN(BettiError):
    pass


class PSViolation(BettiError):
    """A lower power sum is nonzero, so the table is not CM of the claimed codimension."""

    def __init__(self, power, value, codim):
        super().__init__(
            f"power sum of degree {power} is {value}, expected 0 for codimension {codim}"
        )
        self.power, self.value, self.codim = power, value, codim


class NotDecomposable(BettiError):
    pass


class NotSelfDual(BettiError):
    pass


class TopNotSymmetric(BettiError):
    pass


class NotDominatedByDual(BettiError):
    pass


class HypothesisViolated(BettiError):
    pass


class GuardrailError(BettiError):
    pass
