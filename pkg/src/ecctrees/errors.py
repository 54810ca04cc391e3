"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class EccError(ValueError):
    """Base class for invalid-input errors raised by ecctrees."""


class ParseError(EccError):
    pass


class DisconnectedGraph(EccError):
    pass


class SelfLoop(EccError):
    pass


class DuplicateEdge(EccError):
    pass


class VertexOutOfRange(EccError):
    pass


class IndexOutOfRange(EccError):
    pass


class DuplicateIndex(EccError):
    pass


class InvalidFamilyParameters(EccError):
    pass


class RankOutOfRange(EccError):
    pass


class OrderTooSmall(EccError):
    pass


class DiameterTooSmall(EccError):
    pass


class NonIntegerResult(EccError):
    pass


class NoRootInBracket(EccError):
    pass


class InvalidPartition(EccError):
    pass


class NonIntegerQuotient(EccError):
    pass


class NotEquitable(EccError):
    pass


class UnsupportedFamily(EccError):
    pass


class OrderCapExceeded(EccError):
    pass


class NoConvergence(RuntimeError):
    """The eigenvalue iteration hit its sweep cap; this indicates a solver bug."""
