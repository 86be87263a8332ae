"""Exception types shared across the library."""

from __future__ import annotations


class CommtreeError(Exception):
    """Base class for every error raised by this package."""


class SelfLoopError(CommtreeError):
    """An edge joins a vertex to itself."""

    def __init__(self, label: str):
        super().__init__(f"self-loop at vertex {label!r}")
        self.label = label


class ParseError(CommtreeError):
    """Input text could not be parsed; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownEndpointError(ParseError):
    """An edge references a vertex that was never declared."""

    def __init__(self, line: int, endpoint: str):
        super().__init__(line, f"edge endpoint {endpoint!r} is not a declared node")
        self.endpoint = endpoint


class UnknownVertexError(CommtreeError):
    """A vertex label does not exist in the graph."""

    def __init__(self, label: str):
        super().__init__(f"unknown vertex {label!r}")
        self.label = label


class ResourceLimitError(CommtreeError):
    """An enumeration exceeded its configured cap."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} exceeded the configured cap of {limit}")
        self.limit = limit


class InconsistentTreeError(CommtreeError):
    """Tree assembly hit a state that valid community slices cannot produce."""
