"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ParfracError(Exception):
    pass


class InvalidInput(ParfracError):
    """Raised for data the caller supplied that violates an input contract."""


class SchemaError(InvalidInput):
    pass


class BadDimension(InvalidInput):
    pass


class DimensionMismatch(InvalidInput):
    pass


class NotSpanning(InvalidInput):
    def __init__(self, message: str = "forms do not span", rank: int | None = None):
        super().__init__(message)
        self.rank = rank


class ZeroVectorForm(InvalidInput):
    def __init__(self, index: int):
        super().__init__(f"form {index} has a zero vector part")
        self.index = index


class SingularSystem(ParfracError):
    pass


class SubsetExplosion(ParfracError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"|X_p| = {size} exceeds the spanning-subset cap {cap}")
        self.size = size
        self.cap = cap


class SamplingExhausted(ParfracError):
    pass


class InternalError(ParfracError):
    """A decomposer invariant failed; always a bug, never bad data."""


class NuZero(InternalError):
    """The separation constant was zero or disagreed with the form value.

    Never a data condition: seeing this means the decomposer has a bug.
    """
