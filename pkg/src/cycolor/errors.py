"""Exception types shared across the package."""


class CycolorError(Exception):
    """Base class for all package-specific errors."""


class DuplicateEdgeError(CycolorError):
    """An edge appears twice (unordered comparison)."""


class SelfLoopError(CycolorError):
    """An edge joins a vertex to itself."""


class UnknownLabelError(CycolorError):
    """An edge endpoint names a vertex that does not exist."""


class UnknownVertexError(CycolorError):
    """A queried vertex label is not in the graph."""


class DisconnectedError(CycolorError):
    """The operation requires a connected graph."""


class LengthMismatchError(CycolorError):
    """A coloring's length does not match the graph's edge count."""


class ColorIndexError(CycolorError):
    """A color or interval endpoint lies outside [1, t]."""


class EmptySetError(CycolorError):
    """The operation requires a nonempty color set."""


class ArcChainError(CycolorError):
    """Chained-arc union preconditions violated (non-arc input or broken chain)."""


class MOutOfRangeError(CycolorError):
    """The gm family requires m >= 2."""


class SizeOutOfRangeError(CycolorError):
    """A family generator received an out-of-range size parameter."""


class ColorCountError(CycolorError):
    """The color count t is malformed (not a positive integer)."""


class TooLargeError(CycolorError):
    """The requested enumeration or materialization exceeds the configured cap."""


class AuditParamsError(CycolorError):
    """Audit parameters violate their bounds."""


class SearchBudgetExceededError(CycolorError):
    """An exact search was abandoned because it exceeded its budget."""
