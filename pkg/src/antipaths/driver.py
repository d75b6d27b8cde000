"""Search drivers: grow-rotate-close-extend loop and the edge-density route.

find_antipath keeps a single current alternating path, seeded from the
lexicographically smallest edge, and improves it by exactly one edge per
iteration: endpoint extension when possible, otherwise the rotation move on
even lengths or the close-then-reopen pair on odd lengths.  When the host's
pseudo-semidegree is at least (3k-2)/4 every move is guaranteed to make
progress, so a path of length k with the requested orientation is always
reached; below the bound the driver still runs and reports whatever it can
prove.

find_antipath_dense first peels the graph at threshold (3k-4)/4, which
leaves positive semidegrees above the threshold whenever the edge count
exceeds (3k-4)|V|/2, then delegates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .alternating import AntiCycle, AntiPath, Orientation, validate_antipath
from .graphs import Digraph, OrientedGraph
from .peeling import peel
from .rotation import (
    HypothesisViolation,
    PreconditionError,
    close_anticycle,
    extend_anticycle,
    extend_endpoints,
    rotate_even_path,
)


class UnsupportedK(ValueError):
    """k = 2 is rejected: the (3k-2)/4 bound degenerates to 1 there, and a
    directed cycle meets it without containing a two-edge alternating path."""


class EmptyGraph(ValueError):
    pass


class NoMatchingWindow(ValueError):
    pass


@dataclass(frozen=True)
class Found:
    path: AntiPath


@dataclass(frozen=True)
class NotGuaranteed:
    reason: str
    best_path: AntiPath | None


SearchOutcome = Found | NotGuaranteed | HypothesisViolation


def extract_window(p: AntiPath, k: int, orient: Orientation) -> AntiPath:
    """Leftmost k-edge window of p matching the requested orientation,
    preferring the unreversed reading.  Raises NoMatchingWindow if none
    exists (an even-length path and its reverse have the same type)."""
    m = p.length
    if m < k:
        raise NoMatchingWindow(f"path length {m} below requested {k}")
    d = p.host
    for vs in (p.verts, p.verts[::-1]):
        for j in range(m - k + 1):
            window = vs[j : j + k + 1]
            got = (
                Orientation.FORWARD_FIRST
                if d.has_edge(window[0], window[1])
                else Orientation.BACKWARD_FIRST
            )
            if got == orient:
                return validate_antipath(d, window)
    raise NoMatchingWindow(f"no {orient.value} window of length {k}")


def _window_available(p: AntiPath, k: int, orient: Orientation) -> bool:
    m = p.length
    if m < k:
        return False
    if k % 2 == 1 or m >= k + 1:
        return True
    return p.orientation == orient


def find_antipath(
    d: OrientedGraph,
    k: int,
    orient: Orientation = Orientation.FORWARD_FIRST,
    trace: list | None = None,
) -> SearchOutcome:
    """Search for an alternating path with exactly k edges and the requested
    orientation.

    Guaranteed Found when the pseudo-semidegree is at least (3k-2)/4 and
    k >= 3.  Below that bound the result is best-effort: NotGuaranteed with
    the longest path reached, or a HypothesisViolation certifying which
    degree count failed.  k = 1 returns any edge; k = 2 raises UnsupportedK.

    If given, `trace` collects one (move-name, new-length) entry per
    iteration; the loop runs at most k + 1 times.
    """
    if k == 2 or k < 1:
        raise UnsupportedK(f"k = {k} is outside the guarantee (k = 1 or k >= 3)")
    if not d.edges:
        raise EmptyGraph("no edge to seed the search")
    u, v = d.edges[0]
    if k == 1:
        verts = (u, v) if orient is Orientation.FORWARD_FIRST else (v, u)
        return Found(validate_antipath(d, verts))

    bound = Fraction(3 * k - 2, 4)
    p = validate_antipath(d, (u, v))
    for _ in range(k + 1):
        if _window_available(p, k, orient):
            return Found(extract_window(p, k, orient))
        grown = extend_endpoints(d, p)
        if grown is not None:
            p = grown
            if trace is not None:
                trace.append(("extend", p.length))
            continue
        if p.length == 1:
            return NotGuaranteed(
                reason=(
                    "seed edge cannot grow: the tail has out-degree 1 and the"
                    " head has in-degree 1"
                ),
                best_path=p,
            )
        if p.length % 2 == 0:
            step = rotate_even_path(d, p, bound)
            if isinstance(step, HypothesisViolation):
                return step
            p = step
            if trace is not None:
                trace.append(("rotate", p.length))
        else:
            closed = close_anticycle(d, p, k)
            if isinstance(closed, HypothesisViolation):
                return closed
            reopened = extend_anticycle(d, closed, k)
            if isinstance(reopened, HypothesisViolation):
                return reopened
            p = reopened
            if trace is not None:
                trace.append(("close+reopen", p.length))
    raise AssertionError(f"driver exceeded {k + 1} iterations; progress invariant broken")


def find_antipath_dense(
    d: OrientedGraph, k: int, orient: Orientation = Orientation.FORWARD_FIRST
) -> SearchOutcome:
    """Edge-density route: guaranteed Found when |E| > (3k-4)|V|/2.

    Peels at threshold (3k-4)/4 and searches the peeled subgraph; any path
    found there is returned against the original graph.  k = 1 needs one
    edge; k = 2 needs a vertex with two in-edges (forward) or two out-edges
    (backward), which any graph with more than |V| edges has.
    """
    if k < 1:
        raise UnsupportedK(f"k must be >= 1, got {k}")
    if k == 1:
        if not d.edges:
            raise EmptyGraph("no edge to return")
        u, v = d.edges[0]
        verts = (u, v) if orient is Orientation.FORWARD_FIRST else (v, u)
        return Found(validate_antipath(d, verts))
    if k == 2:
        if not d.edges:
            raise EmptyGraph("no edge to seed the search")
        for mid in range(d.n):
            nbrs = d.in_adj[mid] if orient is Orientation.FORWARD_FIRST else d.out_adj[mid]
            if len(nbrs) >= 2:
                return Found(validate_antipath(d, (nbrs[0], mid, nbrs[1])))
        u, v = d.edges[0]
        best = validate_antipath(d, (u, v) if orient is Orientation.FORWARD_FIRST else (v, u))
        return NotGuaranteed(
            reason="no vertex has two edges in the required direction", best_path=best
        )

    core = peel(d, Fraction(3 * k - 4, 4))
    if not core.edges:
        return NotGuaranteed(
            reason=(
                f"peeling at threshold {Fraction(3 * k - 4, 4)} removed every edge;"
                f" edge count {len(d.edges)} is not above (3k-4)|V|/2"
                f" = {Fraction((3 * k - 4) * d.n, 2)}"
            ),
            best_path=None,
        )
    outcome = find_antipath(core, k, orient)
    if isinstance(outcome, Found):
        return Found(validate_antipath(d, outcome.path.verts))
    if isinstance(outcome, NotGuaranteed) and outcome.best_path is not None:
        return NotGuaranteed(
            reason=outcome.reason,
            best_path=validate_antipath(d, outcome.best_path.verts),
        )
    return outcome
