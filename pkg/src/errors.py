"""Exception hierarchy for graph analysis.

Inequality failures are reported, not raised; exceptions are reserved for bad
input and for structure that contradicts what the caller asserted.
"""


class DRGError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(DRGError, ValueError):
    """A parameter violates a documented constraint."""


class GraphFormatError(ParameterError):
    """Malformed graph text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GraphStructureError(DRGError):
    """The graph lacks a property the operation requires."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class NotConnectedError(GraphStructureError):
    pass


class NotRegularError(GraphStructureError):
    pass


class NotDistanceRegularError(GraphStructureError):
    pass


class NotGeometricError(ParameterError):
    """The operation needs a clique geometry and the graph has none."""


class InfeasibleArrayError(DRGError):
    """An intersection array cannot be realized by any graph."""


class StructuralViolationError(DRGError):
    """Computed structure disagrees with a proven parameter formula."""

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message)
        self.witness = witness


class GeometryInconsistencyError(StructuralViolationError):
    pass
