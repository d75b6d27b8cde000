"""Ground-truth brute force: exhaustive alternating-path search and
desk-scale enumeration of all labeled oriented graphs.

The search walks every alternating simple path from every start vertex and
both initial edge directions, with bitmask visited sets and a bound prune.
Results are exact unless the node-expansion budget runs out, in which case
they are flagged as lower bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .alternating import AntiPath, Orientation, validate_antipath
from .graphs import Digraph, OrientedGraph

DEFAULT_BUDGET = 10_000_000


class BudgetExhausted(RuntimeError):
    pass


class TooLarge(ValueError):
    pass


class _Stop(Exception):
    pass


@dataclass(frozen=True)
class OracleResult:
    """Exhaustive-search summary.

    per_orientation maps each orientation to the largest realized length for
    that reading; realized lengths are downward closed (dropping the last
    vertex of a witness keeps its type), so the two maxima describe the full
    table.
    """

    max_length: int
    witness: AntiPath | None
    per_orientation: dict[Orientation, int]
    exact: bool
    expansions: int

    def realized(self, orient: Orientation, length: int) -> bool:
        if length == 0:
            return self.witness is not None
        return length <= self.per_orientation[orient]


def longest_antipath(d: Digraph, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Longest alternating path, a witness, and per-orientation maxima."""
    n = d.n
    out_mask, in_mask = d.out_mask, d.in_mask
    best = {Orientation.FORWARD_FIRST: 0, Orientation.BACKWARD_FIRST: 0}
    state = {"len": 0, "wit": (0,) if n else None, "exp": 0, "exact": True}
    path: list[int] = []

    def visit(tail: int, visited: int, length: int, used: int, first: Orientation, out_next: bool):
        state["exp"] += 1
        if state["exp"] > budget:
            state["exact"] = False
            raise _Stop
        if length > best[first]:
            best[first] = length
        if length % 2 == 1:
            other = first.flipped()
            if length > best[other]:
                best[other] = length
        if length > state["len"]:
            state["len"] = length
            state["wit"] = tuple(path)
        if length + (n - used) <= min(best.values()):
            return
        avail = (out_mask[tail] if out_next else in_mask[tail]) & ~visited
        while avail:
            bit = avail & -avail
            avail ^= bit
            w = bit.bit_length() - 1
            path.append(w)
            visit(w, visited | bit, length + 1, used + 1, first, not out_next)
            path.pop()

    try:
        for start in range(n):
            for first_out in (True, False):
                first = Orientation.FORWARD_FIRST if first_out else Orientation.BACKWARD_FIRST
                path[:] = [start]
                visit(start, 1 << start, 0, 1, first, first_out)
    except _Stop:
        pass

    witness = None
    if state["wit"] is not None:
        witness = validate_antipath(d, state["wit"])
    return OracleResult(
        max_length=state["len"],
        witness=witness,
        per_orientation=dict(best),
        exact=state["exact"],
        expansions=state["exp"],
    )


def has_antipath(
    d: Digraph, k: int, orient: Orientation = Orientation.FORWARD_FIRST,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Exact decision: does an alternating path of length k with the given
    orientation exist?  Raises BudgetExhausted if the budget runs out before
    either finding one or exhausting the search space."""
    if k == 0:
        return d.n > 0
    n = d.n
    if k >= n:
        return False
    out_mask, in_mask = d.out_mask, d.in_mask
    state = {"exp": 0}

    def visit(tail: int, visited: int, length: int, used: int, out_next: bool) -> bool:
        state["exp"] += 1
        if state["exp"] > budget:
            raise BudgetExhausted(f"budget {budget} exhausted before a decision")
        if length == k:
            return True
        if length + (n - used) < k:
            return False
        avail = (out_mask[tail] if out_next else in_mask[tail]) & ~visited
        while avail:
            bit = avail & -avail
            avail ^= bit
            w = bit.bit_length() - 1
            if visit(w, visited | bit, length + 1, used + 1, not out_next):
                return True
        return False

    first_out = orient is Orientation.FORWARD_FIRST
    for start in range(n):
        if visit(start, 1 << start, 0, 1, first_out):
            return True
    return False


def enumerate_oriented_graphs(n: int, allow_large: bool = False) -> Iterator[OrientedGraph]:
    """All 3^(n(n-1)/2) labeled oriented graphs on n vertices, in a fixed
    order (each pair absent / forward / backward, least-significant pair
    first).  n = 6 (~14M graphs) requires allow_large; n > 6 is refused."""
    if n > 6 or (n == 6 and not allow_large):
        raise TooLarge(
            f"n = {n} enumerates 3^{n * (n - 1) // 2} graphs;"
            " n <= 5 is free, n = 6 needs allow_large=True"
        )
    if n < 0:
        raise TooLarge("vertex count must be non-negative")
    pairs = list(combinations(range(n), 2))
    for code in range(3 ** len(pairs)):
        edges = []
        c = code
        for u, v in pairs:
            c, t = divmod(c, 3)
            if t == 1:
                edges.append((u, v))
            elif t == 2:
                edges.append((v, u))
        yield OrientedGraph(n, edges)
