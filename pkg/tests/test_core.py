from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from twisted_flips.core import (
    Edge,
    EdgeSet,
    MaxPlaneSubgraph,
    all_edges,
    complete_to_maximal,
    crosses,
    enumerate_maximal_plane,
    is_maximal_plane,
    is_plane,
    make_edge,
    path_graph,
    star,
)
from twisted_flips.errors import (
    LimitExceededError,
    LoopError,
    NotMaximalError,
    NotPlaneError,
    VertexRangeError,
)

T4 = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
T4_MINUS_14 = EdgeSet(4, [e for e in T4 if e != (1, 4)])
T4_MINUS_23 = EdgeSet(4, [e for e in T4 if e != (2, 3)])

# frozen from oracles.maximal_plane_by_subsets(5)
T5_MAXIMAL = [
    ((1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)),
    ((1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (4, 5)),
    ((1, 2), (1, 3), (1, 4), (2, 4), (3, 4), (3, 5), (4, 5)),
    ((1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)),
    ((1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)),
]


def test_make_edge():
    assert make_edge(2, 5) == Edge(2, 5)
    assert make_edge(5, 2) == Edge(2, 5)
    with pytest.raises(LoopError):
        make_edge(3, 3)
    with pytest.raises(VertexRangeError):
        make_edge(0, 2)
    with pytest.raises(VertexRangeError):
        make_edge(1, 5, n=4)


@pytest.mark.parametrize(
    "e, f, expected",
    [((1, 4), (2, 3), True), ((1, 3), (2, 4), False), ((1, 3), (3, 5), False)],
)
def test_crosses_examples(e, f, expected):
    assert crosses(e, f) is expected
    assert crosses(f, e) is expected


@pytest.mark.parametrize("n", range(2, 10))
def test_crosses_matches_interval_oracle(n):
    for e in all_edges(n):
        for f in all_edges(n):
            assert crosses(e, f) == oracles.cross(e, f)
            if set(e) & set(f):
                assert not crosses(e, f)


def test_edge_set_normalizes():
    s = EdgeSet(4, [(3, 1), (1, 2), (1, 3)])
    assert s.edges == ((1, 2), (1, 3))
    assert (3, 1) in s and (2, 4) not in s
    assert EdgeSet.from_json(s.to_json()) == s
    assert s.to_json() == {"n": 4, "edges": [[1, 2], [1, 3]]}
    with pytest.raises(VertexRangeError):
        EdgeSet(3, [(1, 4)])


def test_is_plane():
    assert is_plane(EdgeSet(4, [(1, 2), (1, 3), (1, 4)]))
    assert not is_plane(EdgeSet(4, [(1, 4), (2, 3)]))
    assert is_plane(EdgeSet(7))


def test_is_maximal_plane():
    assert is_maximal_plane(T4_MINUS_14)
    assert not is_maximal_plane(EdgeSet(4, [e for e in T4 if e not in ((1, 4), (2, 3))]))
    assert not is_maximal_plane(EdgeSet(4, [(1, 4), (2, 3)]))


def test_max_plane_subgraph_validates():
    MaxPlaneSubgraph(4, T4_MINUS_23.edges)
    with pytest.raises(NotPlaneError):
        MaxPlaneSubgraph(4, T4)
    with pytest.raises(NotMaximalError):
        MaxPlaneSubgraph(4, [(1, 2)])


def test_complete_to_maximal_examples():
    assert complete_to_maximal(EdgeSet(3)).edges == ((1, 2), (1, 3), (2, 3))
    assert complete_to_maximal(EdgeSet(4, [(2, 3)])) == T4_MINUS_14
    with pytest.raises(NotPlaneError):
        complete_to_maximal(EdgeSet(4, [(1, 4), (2, 3)]))


def test_complete_to_maximal_is_greedy_lexicographic():
    # {} over n=4: (1,4) is scanned before (2,3) and wins
    assert complete_to_maximal(EdgeSet(4)) == T4_MINUS_23


def test_enumeration_fixtures():
    assert [g.edges for g in enumerate_maximal_plane(2)] == [((1, 2),)]
    assert [g.edges for g in enumerate_maximal_plane(3)] == [((1, 2), (1, 3), (2, 3))]
    assert enumerate_maximal_plane(4) == [T4_MINUS_23, T4_MINUS_14]
    t5 = enumerate_maximal_plane(5)
    assert [g.edges for g in t5] == T5_MAXIMAL
    assert all(len(g) == 7 for g in t5)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_enumeration_matches_subset_oracle(n):
    assert [g.edges for g in enumerate_maximal_plane(n)] == oracles.maximal_plane_by_subsets(n)


@pytest.mark.parametrize("n", [6, 7])
def test_enumeration_matches_branching_oracle(n):
    assert [g.edges for g in enumerate_maximal_plane(n)] == oracles.maximal_plane_by_branching(n)


def test_enumeration_guard():
    with pytest.raises(LimitExceededError):
        enumerate_maximal_plane(10)
    with pytest.raises(LimitExceededError):
        enumerate_maximal_plane(13, limit=13)
    with pytest.raises(VertexRangeError):
        enumerate_maximal_plane(1)
    assert len(enumerate_maximal_plane(10, limit=10)) == 1430


def test_edge_count_statistic():
    # observed, not asserted as a theorem elsewhere: 2n - 3 edges, Catalan many graphs
    counts = {n: len(enumerate_maximal_plane(n)) for n in range(2, 10)}
    assert counts == {2: 1, 3: 1, 4: 2, 5: 5, 6: 14, 7: 42, 8: 132, 9: 429}
    for n in range(2, 9):
        assert {len(g) for g in enumerate_maximal_plane(n)} == {2 * n - 3}


@pytest.mark.parametrize("n", range(2, 10))
def test_star_and_path_are_plane(n):
    assert is_plane(star(n)) and is_plane(path_graph(n))


@st.composite
def plane_sets(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    picked = draw(st.lists(st.sampled_from(all_edges(n)), max_size=2 * n))
    kept = []
    for e in picked:
        if not any(crosses(e, f) for f in kept):
            kept.append(e)
    return EdgeSet(n, kept)


@given(plane_sets())
def test_completion_contains_input_and_is_maximal(s):
    g = complete_to_maximal(s)
    assert s.issubset(g)
    assert oracles.maximal_plane(s.n, g.edges)


@given(plane_sets())
def test_plane_predicate_agrees_with_oracle(s):
    assert is_plane(s) == oracles.plane(s.edges)


@settings(max_examples=200)
@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(all_edges(n))))))
def test_maximal_predicate_agrees_with_oracle(args):
    n, edges = args
    assert is_maximal_plane(EdgeSet(n, edges)) == oracles.maximal_plane(n, edges)


def test_enumeration_deterministic_and_sorted():
    a = enumerate_maximal_plane(7)
    assert a == enumerate_maximal_plane(7)
    assert [g.edges for g in a] == sorted(g.edges for g in a)
    assert len({g.key() for g in a}) == len(a)


def test_every_pair_scan_symmetric_small():
    for n in range(2, 10):
        for e, f in combinations(all_edges(n), 2):
            assert crosses(e, f) == crosses(f, e)
