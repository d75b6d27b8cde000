from itertools import islice

import pytest

from antipaths import (
    BudgetExhausted,
    Found,
    Orientation,
    TooLarge,
    build_graph,
    degree_profile,
    enumerate_oriented_graphs,
    find_antipath,
    gen_cycle_blowup,
    gen_random,
    has_antipath,
    longest_antipath,
    validate_antipath,
)

FF = Orientation.FORWARD_FIRST
BF = Orientation.BACKWARD_FIRST


def test_triangle_longest(triangle):
    res = longest_antipath(triangle)
    assert res.max_length == 1 and res.exact
    assert res.witness.length == 1


def test_blowup_longest_matches_sharpness():
    res = longest_antipath(gen_cycle_blowup(3, 2))
    assert res.max_length == 3


def test_edgeless_longest():
    res = longest_antipath(build_graph(4, []))
    assert res.max_length == 0
    assert res.witness.verts == (0,)
    assert res.per_orientation == {FF: 0, BF: 0}


def test_witness_always_validates():
    for seed in range(15):
        d = gen_random(8, "oriented", seed=seed, p=0.5)
        res = longest_antipath(d)
        assert res.exact
        w = validate_antipath(d, res.witness.verts)
        assert w.length == res.max_length


def test_per_orientation_table_even_path_graph():
    # the graph is exactly one alternating path of length 4; both readings
    # start forward, so the backward table entry tops out one lower
    d = build_graph(5, [(0, 1), (2, 1), (2, 3), (4, 3)])
    res = longest_antipath(d)
    assert res.max_length == 4
    assert res.per_orientation[FF] == 4
    assert res.per_orientation[BF] == 3
    assert res.realized(BF, 3) and not res.realized(BF, 4)


def test_per_orientation_agrees_with_decision():
    for seed in range(10):
        d = gen_random(7, "oriented", seed=seed, p=0.6)
        res = longest_antipath(d)
        for orient in Orientation:
            top = res.per_orientation[orient]
            if top:
                assert has_antipath(d, top, orient)
            assert not has_antipath(d, top + 1, orient)


def test_decision_monotone_in_length():
    for seed in range(10):
        d = gen_random(8, "tournament", seed=seed)
        for orient in Orientation:
            for k in range(3, 7):
                if has_antipath(d, k, orient):
                    assert has_antipath(d, k - 2, orient)
                    assert has_antipath(d, k - 1, orient) or has_antipath(
                        d, k - 1, orient.flipped()
                    )


def test_has_antipath_examples(tournament7):
    assert has_antipath(tournament7, 4, FF)
    assert has_antipath(tournament7, 4, BF)
    assert not has_antipath(gen_cycle_blowup(3, 2), 4, FF)
    assert not has_antipath(gen_cycle_blowup(3, 2), 4, BF)
    assert has_antipath(build_graph(2, [(0, 1)]), 1, FF)


def test_budget_flags_inexact():
    d = gen_random(18, "tournament", seed=2)
    res = longest_antipath(d, budget=50)
    assert not res.exact
    assert res.expansions >= 50
    validate_antipath(d, res.witness.verts)


def test_budget_exhausted_decision():
    # the blow-up tops out at length 11, so deciding 12 means exhausting a
    # search space far beyond this budget
    d = gen_cycle_blowup(3, 6)
    with pytest.raises(BudgetExhausted):
        has_antipath(d, 12, FF, budget=50)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_oriented_graphs(2)) == 3
    assert sum(1 for _ in enumerate_oriented_graphs(3)) == 27
    assert sum(1 for _ in enumerate_oriented_graphs(4)) == 3**6


def test_enumeration_gate():
    with pytest.raises(TooLarge):
        list(enumerate_oriented_graphs(6))
    with pytest.raises(TooLarge):
        list(enumerate_oriented_graphs(7, allow_large=True))
    first = list(islice(enumerate_oriented_graphs(6, allow_large=True), 4))
    assert len(first) == 4 and first[0].edges == ()


def test_enumeration_is_deterministic_and_oriented():
    a = [g.edges for g in islice(enumerate_oriented_graphs(4), 100)]
    b = [g.edges for g in islice(enumerate_oriented_graphs(4), 100)]
    assert a == b
    for g in islice(enumerate_oriented_graphs(4), 81):
        for u, v in g.edges:
            assert not g.has_edge(v, u)


def test_engine_agrees_with_oracle_exhaustive_n4():
    for g in enumerate_oriented_graphs(4):
        if not g.edges:
            continue
        delta = degree_profile(g).pseudo_delta0
        for orient in Orientation:
            out = find_antipath(g, 3, orient)
            if isinstance(out, Found):
                assert has_antipath(g, 3, orient)
            if delta >= 2:
                assert isinstance(out, Found) and has_antipath(g, 3, orient)
