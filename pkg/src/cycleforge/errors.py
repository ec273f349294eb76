"""Exception hierarchy shared by every cycleforge module."""


class CycleforgeError(Exception):
    """Base class for all errors raised by cycleforge."""


class GraphError(CycleforgeError, ValueError):
    pass


class IndexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class MalformedInput(GraphError):
    """Unreadable graph, origin or cycle input."""


class InvalidParameters(CycleforgeError, ValueError):
    pass


class DegreeMismatch(CycleforgeError, ValueError):
    pass


class NotCubic(CycleforgeError, ValueError):
    pass


class EvenDegreePresent(CycleforgeError, ValueError):
    pass


class SameEndpoint(CycleforgeError, ValueError):
    pass


class AcyclicGraph(CycleforgeError, ValueError):
    pass


class InvalidCycle(CycleforgeError, ValueError):
    pass


class OriginMismatch(CycleforgeError, ValueError):
    pass


class ResourceLimit(CycleforgeError, RuntimeError):
    """A search or construction would exceed a configured size or node budget."""
