"""Exception types shared across the package.

Every failure mode callers are expected to branch on gets its own class;
errors that carry evidence (a certificate, a stalled search state) keep it
on the instance so tooling can inspect it.
"""

from __future__ import annotations

from typing import Any


class OddSpanError(Exception):
    """Base class for all package errors."""


class EmptyGraph(OddSpanError):
    """Operation needs at least one (or two) vertices."""


class Disconnected(OddSpanError):
    """Operation requires a connected graph."""


class NotATree(OddSpanError):
    """Edge set is not a spanning tree of the stated vertex count."""


class SelfLoop(OddSpanError):
    """Edge with identical endpoints."""


class DuplicateEdge(OddSpanError):
    """Edge listed more than once in serialized input."""


class ParseError(OddSpanError):
    """Malformed edge-list text; carries the 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class ParityArgument(OddSpanError):
    """Numeric argument violates a required parity."""


class OddOrder(OddSpanError):
    """Graph has odd order; an all-odd-degree subgraph cannot span it."""


class SizeCap(OddSpanError):
    """Instance exceeds a brute-force size cap; caps fail loudly, never truncate."""


class BadWitness(OddSpanError):
    """Nonexistence witness is malformed for the graph it claims to certify."""


class NoTreePacking(OddSpanError):
    """Two edge-disjoint spanning trees do not exist; carries the partition certificate."""

    def __init__(self, cert: Any) -> None:
        super().__init__("no two edge-disjoint spanning trees; see certificate")
        self.cert = cert


class MinDegreeTooLow(OddSpanError):
    """Minimum degree below the bound the dense construction requires."""

    def __init__(self, min_degree: int, bound: int) -> None:
        super().__init__(f"minimum degree {min_degree} below required bound {bound}")
        self.min_degree = min_degree
        self.bound = bound


class GreedyStalled(OddSpanError):
    """Dense greedy growth stalled before spanning; unreachable under the
    degree precondition, raised with the full state for triage."""

    def __init__(self, state: Any) -> None:
        super().__init__("greedy growth stalled before spanning")
        self.state = state


class NotTriangleFree(OddSpanError):
    """Graph contains a triangle."""


class GIsOdd(OddSpanError):
    """Graph has all degrees odd; caller should use the odd-graph construction."""


class DegenerateClique(OddSpanError):
    """Split partition has a single clique vertex; the criterion needs two."""


class ConditionHolds(OddSpanError):
    """The split nonexistence condition holds, so no construction is possible."""


class DiameterTooSmall(OddSpanError):
    """Graph diameter below the bound the double-star construction requires."""

    def __init__(self, diam: int, bound: int) -> None:
        super().__init__(f"diameter {diam} below required bound {bound}")
        self.diam = diam
        self.bound = bound


class ExhaustedCases(OddSpanError):
    """Case dispatch fell through; impossible unless a construction was
    transcribed wrong, so the frame is attached for replay."""

    def __init__(self, message: str, frame: Any = None) -> None:
        super().__init__(message)
        self.frame = frame
