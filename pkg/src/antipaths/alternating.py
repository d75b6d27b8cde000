"""Alternating (antidirected) paths and cycles: types, validation, orientation.

An alternating path is an oriented path in which every vertex is a source or
a sink of the induced edge set; equivalently, consecutive edges alternate
direction.  The cyclic analogue has even length, and at least 4 in an
oriented graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import Digraph


class PathError(ValueError):
    """A vertex sequence is not a valid alternating path/cycle."""


class NotDistinct(PathError):
    pass


class MissingEdge(PathError):
    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class NotAlternating(PathError):
    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class OddCycleLength(PathError):
    pass


class CycleTooShort(PathError):
    pass


class Orientation(enum.Enum):
    """Whether a path's first edge leaves (forward) or enters (backward) its
    first vertex.  Odd-length paths realize both readings; even-length paths
    and their reverses have the same type."""

    FORWARD_FIRST = "forward-first"
    BACKWARD_FIRST = "backward-first"

    def flipped(self) -> "Orientation":
        if self is Orientation.FORWARD_FIRST:
            return Orientation.BACKWARD_FIRST
        return Orientation.FORWARD_FIRST

    @classmethod
    def from_flag(cls, text: str) -> "Orientation":
        for o in cls:
            if o.value == text:
                return o
        raise ValueError(f"unknown orientation {text!r}")


@dataclass(frozen=True)
class AntiPath:
    """A validated alternating path.  length == number of edges."""

    verts: tuple[int, ...]
    host: Digraph = field(repr=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.verts) - 1

    @property
    def orientation(self) -> Orientation | None:
        if len(self.verts) < 2:
            return None
        if self.host.has_edge(self.verts[0], self.verts[1]):
            return Orientation.FORWARD_FIRST
        return Orientation.BACKWARD_FIRST

    def reversed(self) -> "AntiPath":
        return AntiPath(self.verts[::-1], self.host)


@dataclass(frozen=True)
class AntiCycle:
    """A validated alternating cycle; verts is read cyclically.
    length == number of vertices == number of edges (always even)."""

    verts: tuple[int, ...]
    host: Digraph = field(repr=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.verts)


def _pair_direction(d: Digraph, a: int, b: int, index: int) -> bool:
    """True if the single edge between a and b points a->b.

    Raises MissingEdge if neither direction is present.  If both are present
    (possible in a digraph) the pair cannot alternate, since each endpoint
    sees one in- and one out-edge.
    """
    ab = d.has_edge(a, b)
    ba = d.has_edge(b, a)
    if ab and ba:
        raise NotAlternating(index, f"both directions present between {a} and {b}")
    if ab:
        return True
    if ba:
        return False
    raise MissingEdge(index, f"no edge between {a} and {b}")


def validate_antipath(d: Digraph, verts: Sequence[int]) -> AntiPath:
    """Check that verts is an alternating path of d; O(len(verts)).

    This cheap check is the certificate verifier behind every guarantee the
    search engine emits.
    """
    vs = tuple(verts)
    if not vs:
        raise PathError("empty vertex sequence")
    for v in vs:
        if not (0 <= v < d.n):
            raise PathError(f"vertex {v} outside 0..{d.n - 1}")
    if len(set(vs)) != len(vs):
        raise NotDistinct(f"repeated vertex in {vs}")
    dirs = [_pair_direction(d, vs[i], vs[i + 1], i) for i in range(len(vs) - 1)]
    for i in range(len(dirs) - 1):
        if dirs[i] == dirs[i + 1]:
            raise NotAlternating(
                i + 1, f"vertex {vs[i + 1]} has one in- and one out-edge on the path"
            )
    return AntiPath(vs, d)


def validate_anticycle(d: Digraph, verts: Sequence[int]) -> AntiCycle:
    """Check that verts read cyclically is an alternating cycle of d."""
    vs = tuple(verts)
    if len(vs) % 2 == 1:
        raise OddCycleLength(f"cycle length {len(vs)} is odd")
    if len(vs) < 4:
        raise CycleTooShort(f"cycle length {len(vs)} below minimum 4")
    for v in vs:
        if not (0 <= v < d.n):
            raise PathError(f"vertex {v} outside 0..{d.n - 1}")
    if len(set(vs)) != len(vs):
        raise NotDistinct(f"repeated vertex in {vs}")
    k = len(vs)
    dirs = [_pair_direction(d, vs[i], vs[(i + 1) % k], i) for i in range(k)]
    for i in range(k):
        if dirs[i] == dirs[(i + 1) % k]:
            raise NotAlternating(
                (i + 1) % k,
                f"vertex {vs[(i + 1) % k]} has one in- and one out-edge on the cycle",
            )
    return AntiCycle(vs, d)


def sequence_orientation(d: Digraph, verts: Sequence[int]) -> Orientation:
    """Orientation of the first edge of a vertex sequence (assumed valid)."""
    if d.has_edge(verts[0], verts[1]):
        return Orientation.FORWARD_FIRST
    return Orientation.BACKWARD_FIRST
