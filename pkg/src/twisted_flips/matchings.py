"""Plane perfect matchings of T_2m and the matching graph on them.

Two plane perfect matchings are adjacent when their symmetric difference is
a plane cycle with four edges. Paths in the matching graph are found by
breadth-first search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import EdgeSet, Edge, ambient, check_limit, crosses
from .errors import (
    EmptyGraphError,
    MismatchedAmbientError,
    NoPathError,
    NotAMatchingError,
    NotPlaneError,
    OddVertexCountError,
    UnknownNodeError,
    VertexRangeError,
)
from .search import adjacency, reachable, shortest_path

DEFAULT_MATCHING_LIMIT = 12
HARD_MATCHING_LIMIT = 16


class PlanePerfectMatching(EdgeSet):
    def __post_init__(self):
        super().__post_init__()
        if self.n % 2:
            raise OddVertexCountError(f"n={self.n} is odd")
        covered = [v for e in self.edges for v in e]
        if len(covered) != self.n or len(set(covered)) != self.n:
            raise NotAMatchingError(f"{self.key()} is not a perfect matching of T_{self.n}")
        if not ambient(self.n).mask_is_plane(self.mask):
            raise NotPlaneError(f"matching {self.key()} has a crossing pair")


def _check_even(n: int) -> None:
    if n < 2:
        raise VertexRangeError(f"need n >= 2, got {n}")
    if n % 2:
        raise OddVertexCountError(f"n={n} is odd")


def _matchings_within(n: int, allowed: Iterable[Edge]) -> list[PlanePerfectMatching]:
    # Backtracking on the lowest uncovered vertex.
    partners: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for lo, hi in allowed:
        partners[lo].append(hi)
        partners[hi].append(lo)
    for v in partners:
        partners[v].sort()
    out: list[PlanePerfectMatching] = []
    chosen: list[Edge] = []
    covered = [False] * (n + 1)

    def extend(v):
        while v <= n and covered[v]:
            v += 1
        if v > n:
            out.append(PlanePerfectMatching(n, tuple(chosen)))
            return
        for w in partners[v]:
            if covered[w]:
                continue
            e = Edge(v, w) if v < w else Edge(w, v)
            if any(crosses(e, f) for f in chosen):
                continue
            covered[v] = covered[w] = True
            chosen.append(e)
            extend(v + 1)
            chosen.pop()
            covered[v] = covered[w] = False

    extend(1)
    out.sort()
    return out


def enumerate_plane_perfect_matchings(n: int, limit: int = DEFAULT_MATCHING_LIMIT) -> list[PlanePerfectMatching]:
    _check_even(n)
    check_limit(n, limit, HARD_MATCHING_LIMIT, "matching enumeration")
    return _matchings_within(n, ambient(n).edges)


def perfect_matchings_of(g: EdgeSet) -> list[PlanePerfectMatching]:
    """Perfect matchings using only edges of ``g`` (plane when ``g`` is)."""
    _check_even(g.n)
    return _matchings_within(g.n, g.edges)


def matchings_adjacent(a: EdgeSet, b: EdgeSet) -> bool:
    if a.n != b.n:
        raise MismatchedAmbientError(f"n={a.n} vs n={b.n}")
    diff = ambient(a.n).unmask(a.mask ^ b.mask)
    if len(diff) != 4:
        return False
    degree: dict[int, int] = {}
    for e in diff:
        for v in e:
            degree[v] = degree.get(v, 0) + 1
    if len(degree) != 4 or any(d != 2 for d in degree.values()):
        return False
    # four edges, four vertices, all of degree two: one closed walk unless
    # it splits into two digons, which cannot happen without repeated edges.
    return not any(crosses(e, f) for i, e in enumerate(diff) for f in diff[i + 1:])


@dataclass(frozen=True)
class MatchingGraph:
    n: int
    nodes: tuple[PlanePerfectMatching, ...]
    links: tuple[tuple[int, int], ...]
    _index: dict = field(init=False, repr=False, compare=False)
    _adj: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.nodes)})
        object.__setattr__(self, "_adj", adjacency(len(self.nodes), self.links))

    def index_of(self, m: EdgeSet) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise UnknownNodeError(f"{m.key()} is not a node of this matching graph") from None

    def is_connected(self) -> bool:
        if not self.nodes:
            raise EmptyGraphError("matching graph has no nodes")
        return len(reachable(self._adj, 0)) == len(self.nodes)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "constraint": None,
            "nodes": [m.to_json() for m in self.nodes],
            "links": [[a, b, {}] for a, b in self.links],
        }


def build_matching_graph(n: int, limit: int = DEFAULT_MATCHING_LIMIT) -> MatchingGraph:
    nodes = tuple(enumerate_plane_perfect_matchings(n, limit))
    links = tuple(
        (i, j)
        for i in range(len(nodes))
        for j in range(i + 1, len(nodes))
        if matchings_adjacent(nodes[i], nodes[j])
    )
    return MatchingGraph(n, nodes, links)


def matching_path(mg: MatchingGraph, a: EdgeSet, b: EdgeSet) -> list[PlanePerfectMatching]:
    idx = shortest_path(mg._adj, mg.index_of(a), mg.index_of(b))
    if idx is None:
        raise NoPathError(f"no matching-graph path from {a.key()} to {b.key()} at n={mg.n}")
    return [mg.nodes[i] for i in idx]
