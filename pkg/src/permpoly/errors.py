"""Exception types raised across the package."""


class PermPolyError(Exception):
    """Base class for every error raised by permpoly."""


class GraphError(PermPolyError, ValueError):
    """Invalid graph construction input."""


class SelfLoopError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class NotBipartiteError(PermPolyError):
    """The graph has an odd cycle; ``witness`` holds one as a vertex sequence."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotIntercyclicError(PermPolyError):
    """The graph has two vertex-disjoint 4k-cycles (``witness``)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CycleBudgetExceeded(PermPolyError):
    pass


class OracleCapExceeded(PermPolyError):
    pass


class ParseError(PermPolyError, ValueError):
    pass
