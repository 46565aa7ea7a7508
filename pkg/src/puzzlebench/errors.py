"""Domain exceptions shared by all puzzlebench modules."""


class PuzzleError(Exception):
    """Base class for every domain error raised by this package."""


class EmptyInput(PuzzleError):
    """A polyomino was built from zero cells."""


class DuplicateCell(PuzzleError):
    """The same cell appeared more than once in the input."""


class Disconnected(PuzzleError):
    """The cells do not form a single 4-connected region."""


class CapExceeded(PuzzleError):
    """A size parameter exceeds the configured search or enumeration cap."""


class IllegalCut(PuzzleError):
    """A cut is not in the legal move set of the current state.

    Carries the legal alternatives so callers (the HTTP service, UIs) can
    surface them.
    """

    def __init__(self, message: str, legal_cuts=()):
        super().__init__(message)
        self.legal_cuts = list(legal_cuts)


class WrongModel(PuzzleError):
    """A GLOBAL cut was sent to a per-piece model or vice versa."""


class InvalidN(PuzzleError):
    """A count parameter is outside its domain (for example n < 1)."""


class UnsupportedOrder(PuzzleError):
    """Magic-square order other than the supported 3."""


class NoUniqueSolution(PuzzleError):
    """Linear equation a*x + b = c with a = 0 and b != c."""


class Indeterminate(PuzzleError):
    """Linear equation a*x + b = c with a = 0 and b = c (any x works)."""


class OffBoardStart(PuzzleError):
    """Knight-tour start square lies outside the board."""
