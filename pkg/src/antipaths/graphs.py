"""Immutable directed-graph core: digraphs, oriented graphs, semidegree profiles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph construction input."""


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class TwoCycleInOriented(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class Digraph:
    """Loop-free directed graph on vertices 0..n-1; antiparallel pairs allowed.

    Instances are immutable after construction and safe to share across
    threads.  Edge and adjacency sequences are kept sorted so that every
    downstream iteration (and therefore every tie-break) is deterministic.
    Construction derives adjacency from the edge list but does not validate
    it; use build_graph() for untrusted input.
    """

    kind = "digraph"
    __slots__ = ("n", "edges", "out_adj", "in_adj", "out_mask", "in_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        self.edges = tuple(sorted(edges))
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in self.edges:
            out[u].append(v)
            inn[v].append(u)
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        for vs in inn:
            vs.sort()
        self.out_adj = tuple(tuple(vs) for vs in out)
        self.in_adj = tuple(tuple(vs) for vs in inn)
        self.out_mask = tuple(out_mask)
        self.in_mask = tuple(in_mask)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.out_mask[u] >> v) & 1 == 1

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (type(self), self.n, self.edges) == (type(other), other.n, other.edges)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self.edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={len(self.edges)})"


class OrientedGraph(Digraph):
    """Digraph with at most one edge between any vertex pair (no 2-cycles)."""

    kind = "oriented"
    __slots__ = ()


def build_graph(
    n: int, edge_list: Iterable[tuple[int, int]], kind: str = "oriented"
) -> Digraph:
    """Validate an edge list and build a Digraph or OrientedGraph.

    Raises VertexOutOfRange, LoopEdge, DuplicateEdge, or (for kind
    "oriented") TwoCycleInOriented on bad input.
    """
    if kind not in ("digraph", "oriented"):
        raise GraphError(f"unknown graph kind {kind!r}")
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if (u, v) in seen:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        if kind == "oriented" and (v, u) in seen:
            raise TwoCycleInOriented(f"both ({v}, {u}) and ({u}, {v}) present")
        seen.add((u, v))
    cls = OrientedGraph if kind == "oriented" else Digraph
    return cls(n, seen)


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees plus the two minimum-semidegree summaries.

    delta0 is the minimum over all vertices of min(out-degree, in-degree).
    pseudo_delta0 is the largest d such that every vertex has out-degree 0 or
    >= d and in-degree 0 or >= d; it is 0 for an edgeless graph.
    """

    d_out: tuple[int, ...]
    d_in: tuple[int, ...]
    delta0: int
    pseudo_delta0: int


def degree_profile(d: Digraph) -> DegreeProfile:
    d_out = tuple(len(vs) for vs in d.out_adj)
    d_in = tuple(len(vs) for vs in d.in_adj)
    if d.n == 0:
        return DegreeProfile((), (), 0, 0)
    delta0 = min(min(d_out), min(d_in))
    positive = [x for x in d_out if x > 0] + [x for x in d_in if x > 0]
    pseudo = min(positive) if positive else 0
    return DegreeProfile(d_out, d_in, delta0, pseudo)


def reverse(d: Digraph) -> Digraph:
    """Flip every edge.  Alternating paths and cycles survive reversal, and
    the degree profile is preserved with in/out roles swapped."""
    return type(d)(d.n, [(v, u) for (u, v) in d.edges])
