import pytest

from antipaths import (
    Digraph,
    DuplicateEdge,
    LoopEdge,
    OrientedGraph,
    TwoCycleInOriented,
    VertexOutOfRange,
    build_graph,
    degree_profile,
    gen_random,
    reverse,
)


def test_build_directed_triangle():
    d = build_graph(3, [(0, 1), (1, 2), (2, 0)], kind="oriented")
    assert isinstance(d, OrientedGraph)
    assert d.edges == ((0, 1), (1, 2), (2, 0))
    assert d.out_adj[0] == (1,) and d.in_adj[0] == (2,)
    assert d.has_edge(0, 1) and not d.has_edge(1, 0)


def test_two_cycle_rejected_in_oriented():
    with pytest.raises(TwoCycleInOriented):
        build_graph(2, [(0, 1), (1, 0)], kind="oriented")


def test_two_cycle_legal_in_digraph():
    d = build_graph(2, [(0, 1), (1, 0)], kind="digraph")
    assert isinstance(d, Digraph) and not isinstance(d, OrientedGraph)
    assert d.has_edge(0, 1) and d.has_edge(1, 0)


def test_build_errors():
    with pytest.raises(LoopEdge):
        build_graph(2, [(1, 1)])
    with pytest.raises(DuplicateEdge):
        build_graph(2, [(0, 1), (0, 1)])
    with pytest.raises(VertexOutOfRange):
        build_graph(2, [(0, 2)])


def test_adjacency_consistency():
    d = gen_random(12, "oriented", seed=3, p=0.5)
    for u, v in d.edges:
        assert v in d.out_adj[u] and u in d.in_adj[v]
    assert sum(len(a) for a in d.out_adj) == len(d.edges)
    assert sum(len(a) for a in d.in_adj) == len(d.edges)


def test_degree_profile_triangle(triangle):
    prof = degree_profile(triangle)
    assert prof.d_out == (1, 1, 1) and prof.d_in == (1, 1, 1)
    assert prof.delta0 == 1 and prof.pseudo_delta0 == 1


def test_degree_profile_edgeless_is_zero():
    prof = degree_profile(build_graph(4, []))
    assert prof.pseudo_delta0 == 0 and prof.delta0 == 0


def test_degree_profile_ignores_isolated_vertex():
    d = build_graph(4, [(0, 1), (1, 2), (2, 0)])
    prof = degree_profile(d)
    assert prof.delta0 == 0
    assert prof.pseudo_delta0 == 1


@pytest.mark.parametrize("seed", range(10))
def test_profile_invariants_random(seed):
    d = gen_random(10, "oriented", seed=seed, p=0.6)
    prof = degree_profile(d)
    assert prof.delta0 <= prof.pseudo_delta0
    if all(x > 0 for x in prof.d_out) and all(x > 0 for x in prof.d_in):
        assert prof.delta0 == prof.pseudo_delta0


def test_reverse_involution(triangle):
    assert reverse(reverse(triangle)) == triangle


def test_reverse_transitive_tournament():
    d = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert reverse(d).edges == ((1, 0), (2, 0), (2, 1))


def test_reverse_preserves_pseudo_semidegree():
    for seed in range(50):
        d = gen_random(10, "tournament", seed=seed)
        prof = degree_profile(d)
        rprof = degree_profile(reverse(d))
        assert prof.pseudo_delta0 == rprof.pseudo_delta0
        assert rprof.d_out == prof.d_in and rprof.d_in == prof.d_out


def test_equality_and_hash():
    a = build_graph(3, [(0, 1), (1, 2)])
    b = build_graph(3, [(1, 2), (0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != build_graph(3, [(0, 1)])
    assert build_graph(2, [(0, 1)], kind="digraph") != build_graph(2, [(0, 1)], kind="oriented")
