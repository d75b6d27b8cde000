import pytest

from antipaths import (
    EvenK,
    GraphError,
    Orientation,
    degree_profile,
    gen_cycle_blowup,
    gen_random,
    gen_tournament_union,
    has_antipath,
    longest_antipath,
)


def test_tournament_union_triangle():
    d = gen_tournament_union(3, 1)
    assert d.n == 3 and len(d.edges) == 3
    assert degree_profile(d).delta0 == 1
    assert longest_antipath(d).max_length == 1


def test_tournament_union_even_k_rejected():
    with pytest.raises(EvenK):
        gen_tournament_union(4, 1)
    with pytest.raises(GraphError):
        gen_tournament_union(1, 1)


def test_tournament_union_five_two_copies():
    d = gen_tournament_union(5, 2)
    assert d.n == 10 and len(d.edges) == 20
    prof = degree_profile(d)
    assert prof.delta0 == 2
    assert all(x == 2 for x in prof.d_out) and all(x == 2 for x in prof.d_in)
    # components have 5 vertices, so no length-5 path in either orientation
    for orient in Orientation:
        assert not has_antipath(d, 5, orient)


def test_tournament_union_regularity():
    for k in (3, 5, 7, 9):
        prof = degree_profile(gen_tournament_union(k, 2))
        want = (k - 1) // 2
        assert set(prof.d_out) == {want} and set(prof.d_in) == {want}


def test_blowup_arithmetic():
    d = gen_cycle_blowup(3, 2)
    assert d.n == 6 and len(d.edges) == 12
    prof = degree_profile(d)
    assert prof.delta0 == 2
    assert set(prof.d_out) == {2} and set(prof.d_in) == {2}


def test_blowup_longest_is_one_below_double_class_size():
    # class size 2 plays k/2 with k = 4; the largest alternating path has k-1 edges
    assert longest_antipath(gen_cycle_blowup(3, 2)).max_length == 3


def test_blowup_directed_cycle_case():
    d = gen_cycle_blowup(4, 1)
    assert d.edges == ((0, 1), (1, 2), (2, 3), (3, 0))
    assert longest_antipath(d).max_length == 1


def test_blowup_validation():
    with pytest.raises(GraphError):
        gen_cycle_blowup(2, 2)
    with pytest.raises(GraphError):
        gen_cycle_blowup(3, 0)


def test_random_single_vertex():
    d = gen_random(1, "tournament", seed=0)
    assert d.n == 1 and d.edges == ()


def test_random_determinism():
    a = gen_random(20, "tournament", seed=7)
    b = gen_random(20, "tournament", seed=7)
    assert a == b
    c = gen_random(20, "oriented", seed=7, p=0.4)
    assert c == gen_random(20, "oriented", seed=7, p=0.4)
    assert a != gen_random(20, "tournament", seed=8)


def test_random_tournament_is_complete():
    d = gen_random(9, "tournament", seed=5)
    assert len(d.edges) == 36
    prof = degree_profile(d)
    assert [o + i for o, i in zip(prof.d_out, prof.d_in)] == [8] * 9


def test_random_tournament_semidegree_spread():
    # measured: 66 of seeds 0..99 reach delta0 >= 5 at n=20; assert a safe floor
    good = sum(
        1 for s in range(100) if degree_profile(gen_random(20, "tournament", s)).delta0 >= 5
    )
    assert good >= 55


def test_random_oriented_density_and_validity():
    d = gen_random(30, "oriented", seed=11, p=0.8)
    pairs = 30 * 29 // 2
    assert 0.65 * pairs < len(d.edges) < 0.95 * pairs
    for u, v in d.edges:
        assert not d.has_edge(v, u)


def test_random_bad_params():
    with pytest.raises(GraphError):
        gen_random(5, "weird", seed=0)
    with pytest.raises(GraphError):
        gen_random(5, "oriented", seed=0, p=1.5)
