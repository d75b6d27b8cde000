"""Shared fixtures and brute-force helpers.

The helpers here re-enumerate alternating sequences independently of the
package's oracle module so that step-level property tests do not lean on
the code they are checking.
"""

from __future__ import annotations

import random

import pytest

from antipaths import (
    CrossingInstance,
    Digraph,
    PathError,
    build_graph,
    gen_tournament_union,
    undirected_pair,
    validate_anticycle,
)


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def four_anticycle():
    # 0->1<-2->3<-0: the smallest alternating cycle
    return build_graph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])


@pytest.fixture
def tournament7():
    return gen_tournament_union(7, 1)


def alternating_sequences(d: Digraph, min_edges: int = 1) -> list[tuple[int, ...]]:
    """Every alternating path of d with at least min_edges edges, each
    path reported once (reading with the smaller first endpoint)."""
    out: list[tuple[int, ...]] = []
    seq: list[int] = []
    seen: set[int] = set()

    def grow(out_next: bool):
        tail = seq[-1]
        for w in d.out_adj[tail] if out_next else d.in_adj[tail]:
            if w in seen:
                continue
            seq.append(w)
            seen.add(w)
            if len(seq) - 1 >= min_edges and seq[0] < seq[-1]:
                out.append(tuple(seq))
            grow(not out_next)
            seen.discard(w)
            seq.pop()

    for v in range(d.n):
        seq[:] = [v]
        seen = {v}
        grow(True)
        grow(False)
    return out


def all_anticycles(d: Digraph) -> list[tuple[int, ...]]:
    """Every alternating cycle of d, one canonical representative each."""
    canon: set[tuple[int, ...]] = set()
    for seq in alternating_sequences(d, min_edges=3):
        if len(seq) % 2 == 1 or len(seq) < 4:
            continue
        try:
            validate_anticycle(d, seq)
        except PathError:
            continue
        forms = []
        for vs in (seq, seq[::-1]):
            for r in range(len(vs)):
                forms.append(vs[r:] + vs[:r])
        canon.add(min(forms))
    return sorted(canon)


def brute_crossing(inst: CrossingInstance) -> int | None:
    """Independent scan over every candidate index."""
    hits = [
        i
        for i in range(inst.ell, inst.m + 1)
        if undirected_pair(inst.x_seq[0], inst.y_seq[i - 1]) in inst.f0
        and undirected_pair(inst.x_seq[i - inst.ell], inst.y_seq[-1]) in inst.fm
    ]
    return min(hits) if hits else None


def random_crossing_instance(rng: random.Random) -> CrossingInstance:
    m = rng.randint(1, 12)
    ell = rng.randint(1, m)
    if rng.random() < 0.5:
        verts = list(range(m + 1))  # path-shaped: shared vertices x_i = y_i
        x = tuple(verts[:m])
        y = tuple(verts[1:])
    else:
        x = tuple(range(m))
        y = tuple(range(m, 2 * m))
    ground = sorted(set(x) | set(y))
    pairs = [undirected_pair(a, b) for i, a in enumerate(ground) for b in ground[i + 1 :]]
    keep = 0.8 if rng.random() < 0.5 else rng.random()
    f0 = frozenset(p for p in pairs if rng.random() < keep)
    fm = frozenset(p for p in pairs if rng.random() < keep)
    return CrossingInstance(x, y, f0, fm, ell)


def decode_oriented(n: int, code: int) -> Digraph:
    """Same trit encoding as enumerate_oriented_graphs, decoded directly so
    sparse samples of large enumerations skip graph construction costs."""
    from itertools import combinations

    from antipaths import OrientedGraph

    edges = []
    c = code
    for u, v in combinations(range(n), 2):
        c, t = divmod(c, 3)
        if t == 1:
            edges.append((u, v))
        elif t == 2:
            edges.append((v, u))
    return OrientedGraph(n, edges)
