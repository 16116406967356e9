import pytest
from hypothesis import given, strategies as st

from twisted_flips import constructive
from twisted_flips.constructive import (
    degree_signature,
    fixed_edge_flip_path,
    matching_preserving_path,
    pair_measure,
)
from twisted_flips.core import EdgeSet, MaxPlaneSubgraph, enumerate_maximal_plane
from twisted_flips.errors import (
    ClaimViolation,
    FixedSetViolation,
    MismatchedAmbientError,
    NoPerfectMatchingError,
    NotPlaneError,
)
from twisted_flips.flips import ExchangeMove, FlipPath, bfs_path, build_flip_graph
from twisted_flips.matchings import perfect_matchings_of

A = MaxPlaneSubgraph(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])  # T_4 minus (1,4)
B = MaxPlaneSubgraph(4, [(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)])  # T_4 minus (2,3)


def test_degree_signature_examples():
    sa = degree_signature(A)
    assert sa.forward_degree == (2, 2, 1) and sa.max_forward == (3, 4, 4)
    sb = degree_signature(B)
    assert sb.forward_degree == (3, 1, 1) and sb.max_forward == (4, 4, 4)
    s2 = degree_signature(enumerate_maximal_plane(2)[0])
    assert s2.forward_degree == (1,) and s2.max_forward == (2,)


def test_degree_signature_undefined_max():
    s = degree_signature(EdgeSet(4, [(1, 2)]))
    assert s.forward_degree == (1, 0, 0) and s.max_forward == (2, None, None)


def test_pair_measure_examples():
    assert pair_measure(A, A) == (3, 0)
    assert pair_measure(A, B) == (0, 3)
    # agree at v1 only: n = 5 pair with degrees (4,1,1,1) / (3,2,...) differ at v1, pick another
    subs = enumerate_maximal_plane(5)
    g, h = subs[1], subs[2]
    assert degree_signature(g).forward_degree[:2] == (3, 2)
    assert degree_signature(h).forward_degree[:2] == (3, 1)
    assert pair_measure(g, h) == (1, 5 - 2)
    with pytest.raises(MismatchedAmbientError):
        pair_measure(A, enumerate_maximal_plane(5)[0])


@pytest.mark.parametrize("n", range(2, 8))
def test_measure_zero_iff_equal(n):
    subs = enumerate_maximal_plane(n)
    for r in subs:
        for q in subs:
            assert (pair_measure(r, q).m == 0) == (r == q)


def test_pair_measure_is_prefix_not_last_agreement():
    # n=5: degrees (3,2,1,1) and (3,1,2,1) agree at v1 and v4 but k stops at 1
    subs = enumerate_maximal_plane(5)
    g, h = subs[1], subs[2]
    dg, dh = degree_signature(g).forward_degree, degree_signature(h).forward_degree
    assert dg[0] == dh[0] and dg[1] != dh[1] and dg[3] == dh[3]
    assert pair_measure(g, h).k == 1


def test_single_step_example():
    fixed = EdgeSet(4, [(1, 2), (1, 3), (2, 4), (3, 4)])
    p = fixed_edge_flip_path(B, A, fixed)
    assert p.nodes == (B, A)
    assert p.moves == (ExchangeMove((1, 4), (2, 3)),)
    assert p.constructive


def test_identity_path():
    p = fixed_edge_flip_path(A, A, EdgeSet(4, [(1, 2)]))
    assert len(p) == 0 and p.nodes == (A,)


def test_reverse_orientation():
    # Q has the larger degree at v1, so the segment is built from Q's side
    p = fixed_edge_flip_path(A, B)
    assert p.nodes == (A, B)
    assert p.moves == (ExchangeMove((2, 3), (1, 4)),)


def test_fixed_set_errors():
    with pytest.raises(FixedSetViolation):
        fixed_edge_flip_path(A, B, EdgeSet(4, [(1, 4)]))
    with pytest.raises(NotPlaneError):
        fixed_edge_flip_path(A, B, EdgeSet(4, [(1, 4), (2, 3)]))


@pytest.mark.parametrize("n", range(2, 8))
def test_all_pairs_with_common_edges_fixed(n):
    subs = enumerate_maximal_plane(n)
    for r in subs:
        for q in subs:
            fixed = EdgeSet.from_mask(n, r.mask & q.mask)
            p = fixed_edge_flip_path(r, q, fixed)
            p.validate()
            assert p.nodes[0] == r and p.nodes[-1] == q
            assert all(fixed.issubset(g) for g in p.nodes)


@pytest.mark.parametrize("n", range(3, 8))
def test_moves_have_pivot_shape(n):
    # every move trades (p, j) for (p + 1, j - 1), in one direction or the other
    subs = enumerate_maximal_plane(n)
    for r in subs:
        for q in subs:
            for move in fixed_edge_flip_path(r, q).moves:
                g, h = move.removed, move.added
                if g[0] > h[0]:
                    g, h = h, g
                assert h == (g[0] + 1, g[1] - 1)


def test_steps_drop_pivot_degree_and_grow_prefix():
    subs = enumerate_maximal_plane(7)
    r, q = subs[0], subs[-1]
    p = fixed_edge_flip_path(r, q)
    ks = [pair_measure(g, q).k for g in p.nodes]
    # r has the larger forward degrees in front, so the whole path runs from r's side
    for (g, h), move in zip(zip(p.nodes, p.nodes[1:]), p.moves):
        piv = move.removed[0]
        assert degree_signature(h).degree(piv) == degree_signature(g).degree(piv) - 1
    assert ks == sorted(ks) and ks[-1] == 6


@pytest.mark.parametrize("n", range(2, 7))
def test_agrees_with_search_on_existence(n):
    subs = enumerate_maximal_plane(n)
    for r in subs:
        for q in subs:
            fixed = EdgeSet.from_mask(n, r.mask & q.mask)
            found = bfs_path(build_flip_graph(n, fixed), r, q)
            assert found is not None
            assert len(fixed_edge_flip_path(r, q, fixed)) >= len(found)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_maximal_plane(n)), st.sampled_from(enumerate_maximal_plane(n)),
    st.randoms())))
def test_smaller_fixed_sets_accepted(args):
    r, q, rnd = args
    common = list(EdgeSet.from_mask(r.n, r.mask & q.mask))
    fixed = EdgeSet(r.n, rnd.sample(common, rnd.randint(0, len(common))))
    p = fixed_edge_flip_path(r, q, fixed)
    p.validate()
    assert p.nodes[-1] == q


def test_claim_violation_surfaces_and_fallback(monkeypatch):
    def broken(*args, **kwargs):
        raise ClaimViolation("result not maximal", step=0, pivot=1, edges=A.edges)

    monkeypatch.setattr(constructive, "_reduce_at_pivot", broken)
    with pytest.raises(ClaimViolation) as info:
        fixed_edge_flip_path(A, B)
    assert info.value.to_dict()["reason"] == "result not maximal"
    p = fixed_edge_flip_path(A, B, fallback=True)
    assert not p.constructive
    p.validate()


def test_matching_preserving_examples():
    p = matching_preserving_path(A, B)
    p.validate()
    assert p.nodes[0] == A and p.nodes[-1] == B
    assert all(len(perfect_matchings_of(g)) == 2 for g in (A, B))
    assert len(matching_preserving_path(A, A)) == 0


def test_matching_preserving_all_pairs_t6():
    subs = [g for g in enumerate_maximal_plane(6) if perfect_matchings_of(g)]
    for s in subs:
        for r in subs:
            p = matching_preserving_path(s, r)
            p.validate()
            assert p.nodes[0] == s and p.nodes[-1] == r
            assert all(perfect_matchings_of(g) for g in p.nodes)


def test_matching_preserving_needs_matchings():
    bad = next(g for g in enumerate_maximal_plane(6) if not perfect_matchings_of(g))
    good = next(g for g in enumerate_maximal_plane(6) if perfect_matchings_of(g))
    with pytest.raises(NoPerfectMatchingError):
        matching_preserving_path(bad, good)
    with pytest.raises(NoPerfectMatchingError):
        matching_preserving_path(good, bad)


def test_constructive_path_json_round_trip():
    subs = enumerate_maximal_plane(6)
    p = fixed_edge_flip_path(subs[0], subs[-1])
    data = p.to_json()
    assert data["constructive"] is True
    q = FlipPath.from_json(data)
    q.validate()
    assert q.nodes == p.nodes and q.constraint == p.constraint
