"""Exception and warning types shared across the package."""


class HamcolorError(Exception):
    """Base class for all errors raised by this library."""


class GraphStructureError(HamcolorError):
    """The input does not describe a valid block graph."""


class OverlappingBlocksError(GraphStructureError):
    """Two declared blocks share two or more vertices."""


class DisconnectedError(GraphStructureError):
    """The union of the blocks is not connected."""


class CyclicBlockStructureError(GraphStructureError):
    """Some pair of vertices is joined by two distinct block sequences."""


class DanglingVertexError(GraphStructureError):
    """A vertex id below p appears in no block."""


class SameVertexError(HamcolorError):
    """A path query was made with identical endpoints."""


class InvalidSpecError(HamcolorError):
    """Parameters are outside the range a generator or formula accepts."""


class NotAPermutationError(HamcolorError):
    """An ordering is not a permutation of the vertex ids."""


class NegativeGapError(HamcolorError):
    """The gap recurrence produced a negative step; the ordering is unusable."""

    def __init__(self, index: int, gap: int):
        super().__init__(f"negative gap {gap} between ordering positions {index} and {index + 1}")
        self.index = index
        self.gap = gap


class NotSymmetricError(HamcolorError):
    """The graph is not a symmetric block graph."""


class SizeMismatchError(HamcolorError):
    """A per-vertex array has the wrong length."""


class BudgetExceededError(HamcolorError):
    """The instance exceeds the search budget."""


class OutOfStatedRangeWarning(UserWarning):
    """A closed form was evaluated outside its stated parameter range."""
