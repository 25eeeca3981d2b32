"""Exception types shared across the package."""


class EdgeListParseError(ValueError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class SelfLoopError(ValueError):
    """An edge joins a node to itself; simple graphs forbid this."""

    def __init__(self, node):
        super().__init__(f"self-loop on node {node!r} is not allowed")
        self.node = node


class UnknownNodeError(KeyError):
    """A node label was not found in the graph."""

    def __init__(self, node):
        super().__init__(node)
        self.node = node

    def __str__(self):
        return f"unknown node {self.node!r}"


class ConvergenceError(RuntimeError):
    """An iterative numerical routine failed to converge."""


class GenerationError(RuntimeError):
    """A random-graph generator could not satisfy its constraints."""
