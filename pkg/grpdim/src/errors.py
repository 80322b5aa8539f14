from typing import Optional, Tuple


class GrpDimError(ValueError):
    """Base class for every error raised by the grpdim library."""


class InvalidDescriptorError(GrpDimError):
    """A group descriptor string could not be parsed or is out of range."""


class GroupIngestionError(GrpDimError):
    """
    A Cayley table failed validation.

    Attributes:
        triple: The first violating (i, j, k) triple for associativity failures,
            or (row/column, index, value) for Latin-square failures. None when the
            file itself is malformed.
    """

    def __init__(self, message: str, triple: Optional[Tuple[int, int, int]] = None):
        super().__init__(message)
        self.triple = triple


class VertexRangeError(GrpDimError):
    """A vertex index is outside 0..vcount-1."""


class CapacityError(GrpDimError):
    """
    A search exceeded its size cap or node budget.

    Attributes:
        best_bound: Best value found before the search stopped (None if nothing was found).
    """

    def __init__(self, message: str, best_bound: Optional[int] = None):
        super().__init__(message)
        self.best_bound = best_bound


class PreconditionError(GrpDimError):
    """The input does not satisfy the precondition of the requested route."""


class PredicateError(PreconditionError):
    """A class predicate was asked about a group outside its domain."""
