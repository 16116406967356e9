"""Explicit flip paths built from forward-degree signatures.

``fixed_edge_flip_path`` walks two maximal plane subgraphs R and Q towards
each other. At the first vertex ``p`` where their forward degrees differ, the
side with the larger degree repeatedly trades its longest forward edge
``(p, j)`` for ``(p + 1, j - 1)`` until the degrees agree. The agreeing prefix
grows by at least one vertex per round, so at most n - 1 rounds are needed.
Every intermediate graph is checked; a failed check raises
:class:`ClaimViolation` instead of being patched.

``matching_preserving_path`` chains such paths through graphs that each
contain a fixed perfect matching, so every node on the result contains one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import EdgeSet, MaxPlaneSubgraph, ambient, complete_to_maximal, is_plane
from .errors import (
    ClaimViolation,
    FixedSetViolation,
    MismatchedAmbientError,
    NoPerfectMatchingError,
    NotPlaneError,
)
from .flips import FlipPath, bfs_path, build_flip_graph
from .matchings import MatchingGraph, build_matching_graph, matching_path, perfect_matchings_of


@dataclass(frozen=True)
class DegreeSignature:
    n: int
    forward_neighbors: tuple[tuple[int, ...], ...]  # entry i-1 lists j > i with (i, j) present

    @property
    def forward_degree(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.forward_neighbors)

    @property
    def max_forward(self) -> tuple[int | None, ...]:
        return tuple(nb[-1] if nb else None for nb in self.forward_neighbors)

    def degree(self, i: int) -> int:
        return len(self.forward_neighbors[i - 1])


class PairMeasure(NamedTuple):
    k: int
    m: int


def degree_signature(g: EdgeSet) -> DegreeSignature:
    nbrs: list[list[int]] = [[] for _ in range(g.n - 1)]
    for lo, hi in g.edges:
        nbrs[lo - 1].append(hi)
    return DegreeSignature(g.n, tuple(tuple(sorted(x)) for x in nbrs))


def pair_measure(r: EdgeSet, q: EdgeSet) -> PairMeasure:
    """Length ``k`` of the agreeing forward-degree prefix, and ``m = n - 1 - k``."""
    if r.n != q.n:
        raise MismatchedAmbientError(f"n={r.n} vs n={q.n}")
    dr, dq = degree_signature(r).forward_degree, degree_signature(q).forward_degree
    k = 0
    while k < len(dr) and dr[k] == dq[k]:
        k += 1
    return PairMeasure(k, r.n - 1 - k)


def _forward_degree(mask: int, n: int, p: int) -> int:
    amb = ambient(n)
    return sum(1 for j in range(p + 1, n + 1) if mask >> amb.index[(p, j)] & 1)


def _reduce_at_pivot(start: EdgeSet, p: int, target: int, fixed: EdgeSet) -> list[MaxPlaneSubgraph]:
    """Exchange ``(p, max)`` for ``(p + 1, max - 1)`` until the degree at ``p`` is ``target``."""
    n = start.n
    amb = ambient(n)
    seg = [start if isinstance(start, MaxPlaneSubgraph) else MaxPlaneSubgraph(n, start.edges)]
    mask = start.mask
    degree = _forward_degree(mask, n, p)
    step = 0
    while degree > target:
        top = max(j for j in range(p + 1, n + 1) if mask >> amb.index[(p, j)] & 1)
        removed = (p, top)
        added = (p + 1, top - 1)
        current = amb.unmask(mask)

        def fail(reason):
            return ClaimViolation(reason, step=step, pivot=p, edges=current, removed=removed, added=added)

        if added[0] >= added[1]:
            raise fail("degenerate added edge")
        if removed in fixed:
            raise fail("removed edge belongs to the fixed set")
        if mask >> amb.index[added] & 1:
            raise fail("added edge already present")
        mask = mask & ~(1 << amb.index[removed]) | 1 << amb.index[added]
        if not amb.mask_is_plane(mask):
            raise fail("result not plane")
        if not amb.mask_is_maximal_plane(mask):
            raise fail("result not maximal")
        if fixed.mask & ~mask:
            raise fail("result misses part of the fixed set")
        new_degree = _forward_degree(mask, n, p)
        if new_degree != degree - 1:
            raise fail("forward degree at pivot did not drop by one")
        degree = new_degree
        seg.append(MaxPlaneSubgraph.from_mask(n, mask))
        step += 1
    return seg


def _constructive(r: EdgeSet, q: EdgeSet, fixed: EdgeSet) -> list[MaxPlaneSubgraph]:
    front = [r if isinstance(r, MaxPlaneSubgraph) else MaxPlaneSubgraph(r.n, r.edges)]
    back = [q if isinstance(q, MaxPlaneSubgraph) else MaxPlaneSubgraph(q.n, q.edges)]
    k_prev = -1
    while front[-1] != back[-1]:
        a, b = front[-1], back[-1]
        k, _ = pair_measure(a, b)
        if k <= k_prev:
            raise ClaimViolation("agreeing prefix did not grow", pivot=k + 1, edges=a.edges)
        if k >= a.n - 1:
            raise ClaimViolation("forward degrees agree but graphs differ", pivot=None, edges=a.edges)
        p = k + 1
        da, db = degree_signature(a).degree(p), degree_signature(b).degree(p)
        if da > db:
            front.extend(_reduce_at_pivot(a, p, db, fixed)[1:])
        else:
            back.extend(_reduce_at_pivot(b, p, da, fixed)[1:])
        k_prev = k
    return front + back[-2::-1]


def fixed_edge_flip_path(
    r: EdgeSet, q: EdgeSet, fixed: EdgeSet | None = None, *, fallback: bool = False
) -> FlipPath:
    """Flip path from ``r`` to ``q`` through maximal plane subgraphs containing ``fixed``.

    ``fixed`` defaults to the common edges of ``r`` and ``q``. With
    ``fallback=True`` a :class:`ClaimViolation` is replaced by a search path,
    marked ``constructive=False``.
    """
    if r.n != q.n:
        raise MismatchedAmbientError(f"n={r.n} vs n={q.n}")
    if fixed is None:
        fixed = EdgeSet.from_mask(r.n, r.mask & q.mask)
    if fixed.n != r.n:
        raise MismatchedAmbientError(f"fixed set over n={fixed.n}, graphs over n={r.n}")
    if not is_plane(fixed):
        raise NotPlaneError(f"fixed set {fixed.key()} has a crossing pair")
    if not (fixed.issubset(r) and fixed.issubset(q)):
        raise FixedSetViolation("fixed set is not contained in both endpoints")
    try:
        nodes = _constructive(r, q, fixed)
    except ClaimViolation:
        if not fallback:
            raise
        return bfs_path(build_flip_graph(r.n, fixed), r, q)
    return FlipPath.from_nodes(nodes, constraint=fixed, constructive=True)


def least_matching(g: EdgeSet):
    found = perfect_matchings_of(g)
    if not found:
        raise NoPerfectMatchingError(f"{g.key()} contains no perfect matching")
    return found[0]


def matching_preserving_path(
    s: EdgeSet, r: EdgeSet, matching_graph: MatchingGraph | None = None
) -> FlipPath:
    """Flip path from ``s`` to ``r`` along which every node contains a perfect matching.

    Takes the least perfect matching of each endpoint, joins them by a
    matching-graph path ``M_0 .. M_k``, completes each ``M_{i-1} | M_i``
    greedily to a maximal plane subgraph ``S_i``, and links consecutive
    ``S_i, S_{i+1}`` with :func:`fixed_edge_flip_path` holding ``M_i`` fixed.
    """
    if s.n != r.n:
        raise MismatchedAmbientError(f"n={s.n} vs n={r.n}")
    ms, mr = least_matching(s), least_matching(r)
    if s == r:
        return FlipPath.from_nodes([s], constraint=None, constructive=True)
    mg = matching_graph if matching_graph is not None else build_matching_graph(s.n, limit=max(s.n, 12))
    chain = matching_path(mg, ms, mr)
    stops: list[EdgeSet] = [s]
    for prev, cur in zip(chain, chain[1:]):
        stops.append(complete_to_maximal(EdgeSet.from_mask(s.n, prev.mask | cur.mask)))
    stops.append(r)
    nodes: list[MaxPlaneSubgraph] = []
    for i, matching in enumerate(chain):
        seg = fixed_edge_flip_path(stops[i], stops[i + 1], matching).nodes
        nodes.extend(seg if not nodes else seg[1:])
    return FlipPath.from_nodes(nodes, constraint=None, constructive=True)
