"""Constructive moves on stuck alternating paths.

The engine grows an alternating path one edge at a time.  When neither
endpoint can be extended, three moves apply, each mirroring a counting
argument over the path's vertices:

* rotate_even_path: a stuck path of even length is rerouted through a
  crossing edge pair so that an interior pivot becomes an endpoint in both
  readings, and the pivot is then extended off the path.
* close_anticycle: a stuck path of odd length is closed into an alternating
  cycle on the same vertex set using a crossing pair between the endpoint
  neighborhoods.
* extend_anticycle: an alternating cycle shorter than the target is opened
  into a strictly longer alternating path, either by splicing in a single
  outside neighbor or by attaching a two-edge tail through a crossing pair.

Each move either returns a strictly longer validated object or a
HypothesisViolation naming a vertex whose degree count refutes the
semidegree bound the caller asserted.  The moves never assume the bound:
failure certifies its falsity, which keeps the certificates honest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .alternating import AntiCycle, AntiPath, Orientation, validate_anticycle, validate_antipath
from .graphs import Digraph, degree_profile, reverse


class PreconditionError(ValueError):
    """A move was called outside its contract (caller bug, not a refutation)."""


def undirected_pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class CrossingInstance:
    """Input to crossing_index: sequences x_0..x_{m-1} and y_1..y_m plus two
    undirected edge families over their vertices and an offset 1 <= ell <= m."""

    x_seq: tuple[int, ...]
    y_seq: tuple[int, ...]
    f0: frozenset[tuple[int, int]]
    fm: frozenset[tuple[int, int]]
    ell: int

    def __post_init__(self):
        m = len(self.y_seq)
        if len(self.x_seq) != m:
            raise PreconditionError(
                f"x_seq and y_seq must have equal length, got {len(self.x_seq)} and {m}"
            )
        if m < 1:
            raise PreconditionError("sequences must be non-empty")
        if not 1 <= self.ell <= m:
            raise PreconditionError(f"offset {self.ell} outside 1..{m}")
        ground = set(self.x_seq) | set(self.y_seq)
        for fam in (self.f0, self.fm):
            for a, b in fam:
                if a not in ground or b not in ground:
                    raise PreconditionError(f"pair ({a}, {b}) leaves the ground set")

    @property
    def m(self) -> int:
        return len(self.y_seq)


def crossing_index(inst: CrossingInstance) -> int | None:
    """Smallest i in [ell, m] with {x_0, y_i} in f0 and {x_{i-ell}, y_m} in fm.

    Guaranteed non-empty whenever crossing_degree_sum(inst) >= m + ell: if no
    index worked, each of the m - ell + 1 candidate positions would carry at
    most one of the two memberships, bounding the degree sum by m + ell - 1.
    """
    x, y, m = inst.x_seq, inst.y_seq, inst.m
    x0, ym = x[0], y[m - 1]
    for i in range(inst.ell, m + 1):
        if (
            undirected_pair(x0, y[i - 1]) in inst.f0
            and undirected_pair(x[i - inst.ell], ym) in inst.fm
        ):
            return i
    return None


def crossing_degree_sum(inst: CrossingInstance) -> int:
    """d_f0(x_0, Y) + d_fm(y_m, X): the quantity whose size forces an index."""
    x0, ym = inst.x_seq[0], inst.y_seq[-1]
    d0 = sum(1 for v in set(inst.y_seq) if undirected_pair(x0, v) in inst.f0)
    dm = sum(1 for v in set(inst.x_seq) if undirected_pair(v, ym) in inst.fm)
    return d0 + dm


@dataclass(frozen=True)
class HypothesisViolation:
    """Certificate that a semidegree assertion fails.

    The move that emits this found a vertex whose in/out neighborhoods are
    too small for the bound the caller asserted (strict=True means the
    assertion was pseudo-semidegree > bound, otherwise >= bound).
    is_honest() re-derives the refutation from the graph alone.
    """

    context: str
    witness: int
    bound: Fraction
    strict: bool
    detail: str
    host: Digraph = field(repr=False, compare=False)

    def is_honest(self) -> bool:
        pseudo = degree_profile(self.host).pseudo_delta0
        if self.strict:
            return pseudo <= self.bound
        return pseudo < self.bound


def extend_endpoints(d: Digraph, p: AntiPath) -> AntiPath | None:
    """Grow p by one edge at an endpoint, or return None if neither end can.

    An endpoint whose path edge leaves it can only become interior as a
    source, so it extends through a second out-neighbor off the path (and
    symmetrically for sinks).  Tries the first endpoint then the last,
    smallest new vertex first.
    """
    vs = p.verts
    if len(vs) < 2:
        raise PreconditionError("cannot extend a single-vertex path")
    on_path = set(vs)
    v0, v1 = vs[0], vs[1]
    candidates = d.out_adj[v0] if d.has_edge(v0, v1) else d.in_adj[v0]
    for w in candidates:
        if w not in on_path:
            return validate_antipath(d, (w,) + vs)
    vm, vp = vs[-1], vs[-2]
    candidates = d.out_adj[vm] if d.has_edge(vm, vp) else d.in_adj[vm]
    for w in candidates:
        if w not in on_path:
            return validate_antipath(d, vs + (w,))
    return None


def rotate_even_path(d: Digraph, p: AntiPath, bound) -> AntiPath | HypothesisViolation:
    """Turn a stuck even-length path into a path one edge longer.

    Requires: p is stuck (extend_endpoints returns None), its length m is
    even with 2 <= m < 2*bound, and the caller asserts the host's
    pseudo-semidegree is at least `bound`.

    After normalizing so both endpoints emit their path edge (working in the
    reversed graph when they absorb it), both endpoint out-neighborhoods lie
    on the path, so a crossing pair v_0->v_i, v_m->v_{i-1} exists whenever
    the asserted bound holds.  Rerouting through that pair makes v_i an
    endpoint of two same-length paths, one per edge direction, and v_i's own
    degree bound then forces an off-path neighbor to extend through.
    """
    bound = Fraction(bound)
    m = p.length
    if m < 2 or m % 2 == 1:
        raise PreconditionError(f"path length {m} is not even and >= 2")
    if not m < 2 * bound:
        raise PreconditionError(f"path length {m} not below 2*bound = {2 * bound}")
    if extend_endpoints(d, p) is not None:
        raise PreconditionError("path is extendable; rotation applies only to stuck paths")

    work = d if d.has_edge(p.verts[0], p.verts[1]) else reverse(d)
    vs = p.verts  # in `work`: first and last edges leave the endpoints
    v0, vm = vs[0], vs[-1]
    f0 = frozenset(undirected_pair(v0, w) for w in work.out_adj[v0])
    fm = frozenset(undirected_pair(vm, w) for w in work.out_adj[vm])
    inst = CrossingInstance(vs[:m], vs[1:], f0, fm, 1)
    i = crossing_index(inst)
    if i is None:
        witness = v0 if work.out_degree(v0) <= work.out_degree(vm) else vm
        return HypothesisViolation(
            context="rotate_even_path",
            witness=witness,
            bound=bound,
            strict=False,
            detail=(
                f"endpoint out-degrees {work.out_degree(v0)} + {work.out_degree(vm)}"
                f" <= {m} block every crossing pair"
            ),
            host=d,
        )
    if i % 2 == 1:
        # The same crossing pair works on the reversed path with index m-i+1,
        # which is even; even-length reversal keeps both endpoints emitting.
        vs = vs[::-1]
        i = m - i + 1
    pivot = vs[i]
    rerouted_out = vs[i:] + vs[i - 1 :: -1]
    rerouted_in = (vs[i],) + vs[:i] + vs[m:i:-1]
    on_path = set(vs)
    for w in work.out_adj[pivot]:
        if w not in on_path:
            return validate_antipath(d, (w,) + rerouted_out)
    for w in work.in_adj[pivot]:
        if w not in on_path:
            return validate_antipath(d, (w,) + rerouted_in)
    return HypothesisViolation(
        context="rotate_even_path",
        witness=pivot,
        bound=bound,
        strict=False,
        detail=(
            f"pivot {pivot} has all {work.out_degree(pivot)} out- and"
            f" {work.in_degree(pivot)} in-neighbors on the {m + 1}-vertex path"
        ),
        host=d,
    )


def close_anticycle(d: Digraph, p: AntiPath, k: int) -> AntiCycle | HypothesisViolation:
    """Close a stuck odd-length path into an alternating cycle on its vertex set.

    Requires: p stuck, length m odd with 1 < m < k; the caller asserts
    pseudo-semidegree >= (3k-2)/4.

    Normalized (by reading the path backwards if needed) so that both end
    edges point inward, even positions send and odd positions receive.  A
    crossing pair from v_0 into an odd position and from an even position
    into v_m splices the two path halves into a cycle of length m+1.
    """
    m = p.length
    if m % 2 == 0 or not 1 < m < k:
        raise PreconditionError(f"need odd length with 1 < m < k, got m={m}, k={k}")
    if extend_endpoints(d, p) is not None:
        raise PreconditionError("path is extendable; closure applies only to stuck paths")
    bound = Fraction(3 * k - 2, 4)

    vs = p.verts
    if not d.has_edge(vs[0], vs[1]):
        vs = vs[::-1]  # odd length: the reverse reading flips the first edge
    half = (m + 1) // 2
    evens = vs[0::2]
    odd_set = set(vs[1::2])
    even_set = set(evens)
    v0, vm = vs[0], vs[m]
    f0 = frozenset(undirected_pair(v0, w) for w in d.out_adj[v0] if w in odd_set)
    fm = frozenset(undirected_pair(w, vm) for w in d.in_adj[vm] if w in even_set)
    inst = CrossingInstance(evens, vs[1::2], f0, fm, 1)
    i = crossing_index(inst)
    if i is None:
        witness = v0 if d.out_degree(v0) <= d.in_degree(vm) else vm
        return HypothesisViolation(
            context="close_anticycle",
            witness=witness,
            bound=bound,
            strict=False,
            detail=(
                f"crossing degree sum {crossing_degree_sum(inst)} < {half + 1}"
                f" over the {m + 1}-vertex path"
            ),
            host=d,
        )
    cycle = vs[: 2 * i - 1] + vs[m : 2 * i - 2 : -1]
    return validate_anticycle(d, cycle)


def _rotate_to_source(d: Digraph, c: AntiCycle) -> tuple[int, ...]:
    """Reindex the cycle so position 0 emits both of its cycle edges."""
    vs = c.verts
    if d.has_edge(vs[0], vs[1]):
        return vs
    return vs[1:] + vs[:1]


def extend_anticycle(d: Digraph, c: AntiCycle, k: int) -> AntiPath | HypothesisViolation:
    """Open an alternating cycle into an alternating path one edge longer.

    Requires: the cycle's edge count is m+1 with m < k; the caller asserts
    pseudo-semidegree > k/2 (strict).

    Phase 1: if any sending position has an out-neighbor off the cycle (or a
    receiving position an in-neighbor off it), splice it in directly.
    Phase 2: otherwise a crossing pair v_0->v_i, v_{i-2}->v_m exists, and a
    two-edge tail y-x is attached off the cycle; which cycle vertex the tail
    hangs from depends on the parity of i.
    """
    m = c.length - 1
    if not m < k:
        raise PreconditionError(f"cycle length {m + 1} must be at most k={k}")
    bound = Fraction(k, 2)

    vs = _rotate_to_source(d, c)
    on_cycle = set(vs)
    for idx, v in enumerate(vs):
        nbrs = d.out_adj[v] if idx % 2 == 0 else d.in_adj[v]
        for w in nbrs:
            if w not in on_cycle:
                return validate_antipath(d, (w,) + vs[idx:] + vs[:idx])

    # All senders point only into the cycle and all receivers hear only from
    # it; now cross the neighborhoods of position 0 and position m.
    v0, vm = vs[0], vs[m]
    f0 = frozenset(undirected_pair(v0, w) for w in d.out_adj[v0])
    fm = frozenset(undirected_pair(w, vm) for w in d.in_adj[vm])
    inst = CrossingInstance(vs[:m], vs[1:], f0, fm, 2)
    i = crossing_index(inst)
    if i is None:
        witness = v0 if d.out_degree(v0) <= d.in_degree(vm) else vm
        return HypothesisViolation(
            context="extend_anticycle",
            witness=witness,
            bound=bound,
            strict=True,
            detail=(
                f"degree sum {d.out_degree(v0)} + {d.in_degree(vm)} <= {m + 1}"
                f" blocks every offset-2 crossing pair"
            ),
            host=d,
        )

    if i % 2 == 0:
        anchor = vs[i]
        x = next((w for w in d.in_adj[anchor] if w not in on_cycle), None)
        if x is None:
            return HypothesisViolation(
                context="extend_anticycle",
                witness=anchor,
                bound=bound,
                strict=True,
                detail=f"all {d.in_degree(anchor)} in-neighbors of {anchor} lie on the cycle",
                host=d,
            )
        y = next((w for w in d.out_adj[x] if w not in on_cycle), None)
        if y is None:
            return HypothesisViolation(
                context="extend_anticycle",
                witness=x,
                bound=bound,
                strict=True,
                detail=f"all out-neighbors of the tail vertex {x} lie on the cycle",
                host=d,
            )
        path = (y, x, anchor) + vs[: i - 1] + vs[m:i:-1]
    else:
        anchor = vs[i - 2]
        x = next((w for w in d.out_adj[anchor] if w not in on_cycle), None)
        if x is None:
            return HypothesisViolation(
                context="extend_anticycle",
                witness=anchor,
                bound=bound,
                strict=True,
                detail=f"all {d.out_degree(anchor)} out-neighbors of {anchor} lie on the cycle",
                host=d,
            )
        y = next((w for w in d.in_adj[x] if w not in on_cycle), None)
        if y is None:
            return HypothesisViolation(
                context="extend_anticycle",
                witness=x,
                bound=bound,
                strict=True,
                detail=f"all in-neighbors of the tail vertex {x} lie on the cycle",
                host=d,
            )
        path = (y, x, anchor) + vs[m : i - 1 : -1] + vs[: i - 2]
    return validate_antipath(d, path)
