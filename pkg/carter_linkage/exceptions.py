"""Exceptions raised by the Carter linkage toolkit."""

from __future__ import annotations


class CarterLinkageError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CarterLinkageError):
    """Text input (matrix, diagram name, type tag) could not be parsed."""


class ShapeError(CarterLinkageError):
    """Matrix shapes do not fit the requested operation."""


class DimensionError(CarterLinkageError):
    """A vector does not match the dimension of a matrix or Γ-set."""


class SingularMatrixError(CarterLinkageError):
    """Matrix is not invertible."""

    def __init__(self, rank: int, size: int) -> None:
        super().__init__(f"matrix of size {size} is singular (rank {rank})")
        self.rank = rank
        self.size = size


class InvalidTypeError(CarterLinkageError):
    """Family/rank combination is not a simply-laced Dynkin type."""


class AmbientMismatchError(CarterLinkageError):
    """Roots from two different root systems were combined."""


class UnknownDiagramError(CarterLinkageError):
    """Diagram or homogeneous class is not in the catalog."""


class InvalidDiagramError(CarterLinkageError):
    """Edge list does not describe a signed simple graph on the vertices."""


class LabelRangeError(CarterLinkageError):
    """A label entry left the range {-1, 0, 1}."""

    def __init__(self, index: int, value: int) -> None:
        super().__init__(
            f"label entry {index} equals {value}; the root is ±τ_{index + 1}"
            if abs(value) == 2
            else f"label entry {index} equals {value}, outside {{-1, 0, 1}}"
        )
        self.index = index
        self.value = value


class PreconditionError(CarterLinkageError):
    """Operation called on inputs outside its domain."""


class ClosureViolationError(CarterLinkageError):
    """A dual reflection maps a label outside the given label set."""


class ReflectionRangeError(CarterLinkageError):
    """A dual reflection produced a non-ternary vector."""


class FlationError(CarterLinkageError):
    """An inflation or deflation cannot be applied at the requested entry."""


class NotPositiveDefiniteError(CarterLinkageError):
    """Quadratic form is not positive definite."""


class OutOfTheoryError(CarterLinkageError):
    """Reduction met an off-diagonal entry of magnitude at least 2."""


class ReductionLimitError(CarterLinkageError):
    """Ovsienko reduction exceeded its step cap."""

    def __init__(self, steps: int) -> None:
        super().__init__(f"reduction did not terminate within {steps} inflations")
        self.steps = steps


class ClassificationError(CarterLinkageError):
    """A component is not a simply-laced Dynkin diagram."""


class PairCountError(CarterLinkageError):
    """The E8/D7 pair search did not find the expected number of pairs."""
