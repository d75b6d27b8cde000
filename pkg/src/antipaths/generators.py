"""Instance generators: extremal fixtures and random test beds."""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import GraphError, OrientedGraph


class EvenK(GraphError):
    pass


def gen_tournament_union(k: int, copies: int) -> OrientedGraph:
    """Disjoint union of rotational regular tournaments on k vertices.

    Within each copy, vertex i beats i+1, ..., i+(k-1)/2 (mod k), so every
    vertex has in- and out-degree (k-1)/2.  Deterministic: the rotational
    construction is fixed rather than an arbitrary regular tournament.
    """
    if k % 2 == 0:
        raise EvenK(f"regular tournaments need odd k, got {k}")
    if k < 3:
        raise GraphError(f"tournament size must be >= 3, got {k}")
    if copies < 1:
        raise GraphError(f"copies must be >= 1, got {copies}")
    edges = []
    half = (k - 1) // 2
    for c in range(copies):
        base = c * k
        for i in range(k):
            for step in range(1, half + 1):
                edges.append((base + i, base + (i + step) % k))
    return OrientedGraph(copies * k, edges)


def gen_cycle_blowup(ell: int, s: int) -> OrientedGraph:
    """Blow-up of a directed ell-cycle with independent classes of size s.

    Classes S_0..S_{ell-1} of s vertices each; all edges go from every vertex
    of S_i to every vertex of S_{i+1 mod ell}.  Every vertex ends up with
    in-degree = out-degree = s.
    """
    if ell < 3:
        raise GraphError(f"cycle length must be >= 3, got {ell}")
    if s < 1:
        raise GraphError(f"class size must be >= 1, got {s}")
    edges = []
    for i in range(ell):
        j = (i + 1) % ell
        for a in range(s):
            for b in range(s):
                edges.append((i * s + a, j * s + b))
    return OrientedGraph(ell * s, edges)


def gen_random(n: int, kind: str = "tournament", seed: int = 0, p: float = 0.5) -> OrientedGraph:
    """Random oriented graph, deterministic under a fixed seed.

    kind "tournament": every pair gets a uniformly random orientation.
    kind "oriented": each pair is absent with probability 1-p, otherwise
    uniformly oriented.
    """
    if kind not in ("tournament", "oriented"):
        raise GraphError(f"unknown random kind {kind!r}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u, v in combinations(range(n), 2):
        if kind == "oriented" and rng.random() >= p:
            continue
        if rng.random() < 0.5:
            edges.append((u, v))
        else:
            edges.append((v, u))
    return OrientedGraph(n, edges)
