"""Exception types shared across the package.

Construction errors carry enough data (indices, witnesses) to reproduce the
failure; they are part of the public contract, not internal assertions.
"""

from __future__ import annotations


class SkewPBWError(Exception):
    """Base class for all package errors."""


# --- finite ring construction -------------------------------------------------

class BadShape(SkewPBWError):
    """Input data has inconsistent dimensions."""


class NonAssociative(SkewPBWError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"associativity fails on generator triple (e{i}, e{j}, e{k})")


class BadIdentity(SkewPBWError):
    def __init__(self, i: int):
        self.index = i
        super().__init__(f"identity law fails on generator e{i}")


class IllDefinedConstant(SkewPBWError):
    """Structure constant incompatible with the additive orders.

    Bilinear extension is only well defined when k_i * (e_i*e_j) = 0 and
    k_j * (e_i*e_j) = 0 in the additive group.
    """

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"structure constant for (e{i}, e{j}) is not annihilated by the generator orders")


class RingMismatch(SkewPBWError):
    """Operands belong to different rings."""


class TooLarge(SkewPBWError):
    def __init__(self, size: int, cap: int, what: str = "ring"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")


class NotAnIdeal(SkewPBWError):
    """Carrier set is not a two-sided ideal."""


# --- ring maps ----------------------------------------------------------------

class NotAdditiveWellDefined(SkewPBWError):
    def __init__(self, s: int, t: int):
        self.entry = (s, t)
        super().__init__(f"matrix entry ({s},{t}) is incompatible with the additive orders")


class NotMultiplicative(SkewPBWError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"map is not multiplicative on generator pair (e{i}, e{j})")


class DoesNotFixOne(SkewPBWError):
    pass


class LeibnizFails(SkewPBWError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"Leibniz rule fails on generator pair (e{i}, e{j})")


class DeltaOneNonzero(SkewPBWError):
    pass


# --- extension presentations ---------------------------------------------------

class ZeroD(SkewPBWError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"d_{{{i},{j}}} must be nonzero")


class NonInjectiveSigma(SkewPBWError):
    def __init__(self, i: int):
        self.index = i
        super().__init__(f"sigma_{i} is not injective")


class ShapeMismatch(SkewPBWError):
    pass


class Unverified(SkewPBWError):
    """Arithmetic requested over a presentation that has not passed verification."""


class OverlapFails(SkewPBWError):
    """An overlap (associativity) check failed; the presentation is inconsistent."""

    def __init__(self, kind: str, indices: tuple, lhs, rhs):
        self.kind = kind
        self.indices = indices
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(
            f"overlap check {kind} fails at {indices}: normal forms differ: {lhs} != {rhs}"
        )


class NotProvedNilpotent(SkewPBWError):
    pass


class BudgetExceeded(SkewPBWError):
    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs about {needed} operations, budget is {budget}")


# --- gradings -------------------------------------------------------------------

class InhomogeneousConstant(SkewPBWError):
    def __init__(self, s: int, t: int):
        self.pair = (s, t)
        super().__init__(f"structure constant for (e{s}, e{t}) is not homogeneous for the given degrees")


class IdentityNotDegreeZero(SkewPBWError):
    pass


class NotBijective(SkewPBWError):
    pass


class NotGraded(SkewPBWError):
    pass


# --- harness / cli ----------------------------------------------------------------

class WrongShape(SkewPBWError):
    def __init__(self, check_id: str, reason: str):
        self.check_id = check_id
        self.reason = reason
        super().__init__(f"{check_id} does not apply: {reason}")


class DefinitionError(SkewPBWError):
    """Definition file is syntactically or semantically invalid."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
