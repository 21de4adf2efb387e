"""Exception hierarchy.

Three families, mirroring the CLI exit codes: bad input (2), an algorithm
that could not reach an answer (3), and a broken internal invariant (4).
"""


class KacMoodyError(Exception):
    """Base class for every error raised by this package."""


class InputError(KacMoodyError, ValueError):
    """The caller handed us something that violates a precondition."""


class AlgorithmFailure(KacMoodyError):
    """A computation ran but could not produce a definite answer."""


class InternalInvariantError(KacMoodyError, AssertionError):
    """A mathematical guarantee failed; this indicates a bug."""


# Cartan matrices

class GCMError(InputError):
    pass


class NotSquare(GCMError):
    pass


class DiagonalNotTwo(GCMError):
    pass


class PositiveOffDiagonal(GCMError):
    pass


class AsymmetricZeroPattern(GCMError):
    pass


class NotSymmetrizable(GCMError):
    pass


class DecomposableMatrix(InputError):
    pass


class DecomposableAlgebra(DecomposableMatrix):
    pass


class InvalidWeight(InputError):
    pass


# Series

class RankMismatch(InputError):
    pass


class BoundMismatch(InputError):
    pass


class NonUnitDivisor(InputError):
    pass


class ConstantTermNotOne(InputError):
    pass


class DegreeAboveBound(InputError):
    pass


class SeriesFormatError(InputError):
    pass


# Graphs and roots

class NotAnEdge(InputError):
    pass


class GraphFormatError(InputError):
    pass


class NotFiniteType(InputError):
    pass


# Algorithm failures

class NodeCapExceeded(AlgorithmFailure):
    pass


class CapExceeded(AlgorithmFailure):
    pass


class TruncationInsufficient(AlgorithmFailure):
    pass


class NotAProductOfNumerators(AlgorithmFailure):
    pass


class FactorCountMismatch(AlgorithmFailure):
    pass


# Invariant breaches

class NonIntegralResult(InternalInvariantError):
    pass


class NonIntegralCoefficient(InternalInvariantError):
    pass


class InvariantViolation(InternalInvariantError):
    pass
