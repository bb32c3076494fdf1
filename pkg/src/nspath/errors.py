"""Exception types shared across the package."""


class NspathError(Exception):
    """Base class for all package errors."""


class GraphBuildError(NspathError):
    """Invalid graph construction input (self-loop, duplicate edge, bad weight, bad id)."""


class GraphFormatError(NspathError):
    """Malformed graph text input."""


class NotChordalError(NspathError):
    """The operation requires a chordal graph."""


class DisconnectedError(NspathError):
    """The operation requires a connected graph."""


class OracleCapError(NspathError):
    """Instance exceeds the brute-force enumeration cap."""


class CnfError(NspathError):
    """Malformed CNF input."""


class DummyTraversalError(NspathError):
    """A path crosses a fat-edge dummy vertex; such a path is always separating."""


class InternalInconsistencyError(NspathError):
    """A state the algorithm's invariants rule out was reached; indicates a bug upstream."""
