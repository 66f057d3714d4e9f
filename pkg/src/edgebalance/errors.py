"""Exception hierarchy shared by every edgebalance module."""


class GraphError(Exception):
    """Base class for all errors raised by edgebalance."""


class LoopEdge(GraphError, ValueError):
    pass


class VertexOutOfRange(GraphError, ValueError):
    pass


class DuplicateEdge(GraphError, ValueError):
    pass


class ParameterOutOfRange(GraphError, ValueError):
    pass


class DisconnectedGraph(GraphError, ValueError):
    """Raised by analyses that are only defined on connected graphs."""


class TooLargeForExactIso(GraphError, ValueError):
    pass


class BudgetExceeded(GraphError):
    """A configured size budget (vertices, enumeration order) was exceeded."""


class ProductTooLarge(BudgetExceeded):
    pass


class ParseError(GraphError, ValueError):
    """Input text could not be decoded into a graph."""


class Graph6Error(ParseError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class TrailingGarbage(Graph6Error):
    pass


class EdgeListError(ParseError):
    pass


class PredicateError(ParseError):
    """Unknown keyword or bad value in a catalog predicate expression."""
