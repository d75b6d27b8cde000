"""Degeneracy peeling on the bipartite double of a digraph.

Each vertex v splits into an emitting stub (its out-edges) and a receiving
stub (its in-edges).  Stubs of degree <= threshold are deleted until none
remain; surviving edges form a subdigraph in which every positive out- or
in-degree exceeds the threshold.  The deletion order does not affect the
result, and the output is non-empty whenever the edge count exceeds
2 * threshold * vertex count: deleting all 2n stubs could only account for
at most that many edges.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .graphs import Digraph


def peel(d: Digraph, threshold) -> Digraph:
    """Subdigraph on the edges surviving stub deletion at the given threshold.

    The threshold may be fractional (int, float, Fraction, or a string like
    "5/2"); comparisons are exact.  Vertices keep their identities; an empty
    result is legal.
    """
    s = Fraction(threshold)
    if s < 0:
        raise ValueError(f"threshold must be >= 0, got {s}")
    out_deg = [len(a) for a in d.out_adj]
    in_deg = [len(a) for a in d.in_adj]
    out_alive = [set(a) for a in d.out_adj]
    in_alive = [set(a) for a in d.in_adj]
    out_dead = [False] * d.n
    in_dead = [False] * d.n

    queue: deque[tuple[int, bool]] = deque()
    for v in range(d.n):
        if out_deg[v] <= s:
            queue.append((v, True))
        if in_deg[v] <= s:
            queue.append((v, False))

    while queue:
        v, emitting = queue.popleft()
        if emitting:
            if out_dead[v]:
                continue
            out_dead[v] = True
            for w in sorted(out_alive[v]):
                in_alive[w].discard(v)
                in_deg[w] -= 1
                if not in_dead[w] and in_deg[w] <= s:
                    queue.append((w, False))
            out_alive[v].clear()
        else:
            if in_dead[v]:
                continue
            in_dead[v] = True
            for w in sorted(in_alive[v]):
                out_alive[w].discard(v)
                out_deg[w] -= 1
                if not out_dead[w] and out_deg[w] <= s:
                    queue.append((w, True))
            in_alive[v].clear()

    edges = [(u, v) for u in range(d.n) for v in out_alive[u]]
    return type(d)(d.n, edges)
