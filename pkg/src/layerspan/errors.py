"""Exception hierarchy shared by the library and the command line front end."""

from __future__ import annotations


class LayerspanError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(LayerspanError, ValueError):
    """Malformed edge list text or graph spec string."""


class GraphPreconditionError(LayerspanError, ValueError):
    """A graph argument violates an operation's precondition."""


class DisconnectedGraphError(GraphPreconditionError):
    """Span computations need a connected graph."""


class UnreachableError(LayerspanError):
    """Two vertices lie in different connected components."""

    def __init__(self, u: int, v: int):
        super().__init__(f"vertex {v} is unreachable from vertex {u}")
        self.u = u
        self.v = v


class InvalidStepError(LayerspanError, ValueError):
    """A pair of positions is not a legal lazy step."""


class TrackLengthError(LayerspanError, ValueError):
    """Two tracks that must be compared pointwise have different lengths."""


class OracleCapExceeded(LayerspanError):
    """The exhaustive oracle refuses graphs above its size cap."""


class NoWitnessError(LayerspanError):
    """No component of the filtered product graph qualifies at the requested distance."""
