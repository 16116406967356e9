"""Edges of the twisted graph T_n, its crossing rule, and maximal plane subgraphs.

Vertices are numbered 1..n from left to right. Two edges cross exactly when
the index interval of one strictly contains the index interval of the other.
Maximal plane subgraphs are therefore the maximal independent sets of the
crossing-conflict graph on the C(n, 2) edges, which is how they are
enumerated here.

Internally edge sets are also kept as integer bitmasks over a fixed edge
ordering; see :func:`ambient`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    LimitExceededError,
    LoopError,
    NotMaximalError,
    NotPlaneError,
    VertexRangeError,
)

DEFAULT_ENUM_LIMIT = 9
HARD_ENUM_LIMIT = 12


class Edge(NamedTuple):
    lo: int
    hi: int

    def __str__(self):
        return f"{self.lo}-{self.hi}"


def make_edge(a: int, b: int, n: int | None = None) -> Edge:
    """Return the canonical edge ``(min(a, b), max(a, b))``.

    With ``n`` given, both endpoints must lie in ``[1, n]``.
    """
    if a == b:
        raise LoopError(f"loop at vertex {a}")
    if min(a, b) < 1 or (n is not None and max(a, b) > n):
        raise VertexRangeError(f"edge ({a}, {b}) outside [1, {n}]")
    return Edge(a, b) if a < b else Edge(b, a)


def crosses(e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    i, j = e1
    s, t = e2
    return i < s < t < j or s < i < j < t


class Ambient:
    """Edge indexing and conflict masks for T_n (cached per n)."""

    def __init__(self, n: int):
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(
            Edge(i, j) for i, j in combinations(range(1, n + 1), 2)
        )
        self.index = {e: k for k, e in enumerate(self.edges)}
        self.conflicts: tuple[int, ...] = tuple(
            sum(1 << b for b, f in enumerate(self.edges) if crosses(e, f))
            for e in self.edges
        )
        self.full = (1 << len(self.edges)) - 1

    def mask(self, edges: Iterable[tuple[int, int]]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.index[e]
        return m

    def unmask(self, mask: int) -> tuple[Edge, ...]:
        return tuple(e for k, e in enumerate(self.edges) if mask >> k & 1)

    def mask_is_plane(self, mask: int) -> bool:
        rest = mask
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            if self.conflicts[k] & mask:
                return False
            rest ^= low
        return True

    def mask_is_maximal_plane(self, mask: int) -> bool:
        if not self.mask_is_plane(mask):
            return False
        outside = self.full & ~mask
        while outside:
            low = outside & -outside
            if not self.conflicts[low.bit_length() - 1] & mask:
                return False
            outside ^= low
        return True


@lru_cache(maxsize=None)
def ambient(n: int) -> Ambient:
    if n < 1:
        raise VertexRangeError(f"n must be positive, got {n}")
    return Ambient(n)


def all_edges(n: int) -> tuple[Edge, ...]:
    return ambient(n).edges


@dataclass(frozen=True, eq=False)
class EdgeSet:
    """Sorted, duplicate-free set of edges of T_n.

    Accepts any iterable of vertex pairs; pairs are normalized with
    :func:`make_edge`. Equality and hashing depend only on ``(n, edges)``,
    so subclasses compare equal to plain edge sets with the same content.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    _mask: int = field(default=0, init=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise VertexRangeError(f"n must be positive, got {self.n}")
        canon = tuple(sorted({make_edge(a, b, self.n) for a, b in self.edges}))
        object.__setattr__(self, "edges", canon)
        object.__setattr__(self, "_mask", ambient(self.n).mask(canon))

    @property
    def mask(self) -> int:
        return self._mask

    @classmethod
    def from_mask(cls, n: int, mask: int):
        return cls(n, ambient(n).unmask(mask))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, e):
        try:
            return bool(self._mask >> ambient(self.n).index[make_edge(*e)] & 1)
        except (KeyError, ValueError):
            return False

    def __eq__(self, other):
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return self.n == other.n and self._mask == other._mask

    def __hash__(self):
        return hash((self.n, self._mask))

    def __lt__(self, other):
        return (self.n, self.edges) < (other.n, other.edges)

    def issubset(self, other: "EdgeSet") -> bool:
        return self.n == other.n and self._mask & ~other._mask == 0

    def key(self) -> str:
        """Stable textual identity, e.g. ``"1-2,1-3,2-3"``."""
        return ",".join(str(e) for e in self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict):
        return cls(int(data["n"]), tuple(tuple(e) for e in data["edges"]))


class MaxPlaneSubgraph(EdgeSet):
    """An edge set that is plane and cannot be extended without a crossing."""

    def __post_init__(self):
        super().__post_init__()
        amb = ambient(self.n)
        if not amb.mask_is_plane(self.mask):
            raise NotPlaneError(f"edge set {self.key()} has a crossing pair")
        if not amb.mask_is_maximal_plane(self.mask):
            raise NotMaximalError(f"edge set {self.key()} is plane but not maximal")


def is_plane(s: EdgeSet) -> bool:
    return ambient(s.n).mask_is_plane(s.mask)


def is_maximal_plane(s: EdgeSet) -> bool:
    return ambient(s.n).mask_is_maximal_plane(s.mask)


def complete_to_maximal(s: EdgeSet) -> MaxPlaneSubgraph:
    """Greedy extension of a plane edge set, scanning edges in (lo, hi) order."""
    amb = ambient(s.n)
    if not amb.mask_is_plane(s.mask):
        raise NotPlaneError(f"cannot complete non-plane set {s.key()}")
    mask = s.mask
    for k, conf in enumerate(amb.conflicts):
        if not conf & mask:
            mask |= 1 << k
    return MaxPlaneSubgraph.from_mask(s.n, mask)


def check_limit(n: int, limit: int, hard: int, what: str) -> None:
    if limit > hard:
        raise LimitExceededError(f"{what} limit {limit} above hard cap {hard}")
    if n > limit:
        raise LimitExceededError(f"{what} at n={n} exceeds limit {limit}")


def _maximal_independent_masks(amb: Ambient) -> list[int]:
    # Bron-Kerbosch with pivoting, run on the complement of the conflict
    # graph: cliques there are independent sets here.
    m = len(amb.edges)
    compat = [amb.full & ~amb.conflicts[k] & ~(1 << k) for k in range(m)]
    found: list[int] = []

    def bits(x):
        while x:
            low = x & -x
            yield low.bit_length() - 1
            x ^= low

    def expand(r, p, x):
        if not p and not x:
            found.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (p & compat[u]).bit_count())
        for v in list(bits(p & ~compat[pivot])):
            expand(r | 1 << v, p & compat[v], x & compat[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, amb.full, 0)
    return found


def enumerate_maximal_plane(n: int, limit: int = DEFAULT_ENUM_LIMIT) -> list[MaxPlaneSubgraph]:
    """All maximal plane subgraphs of T_n, sorted by edge list."""
    if n < 2:
        raise VertexRangeError(f"enumeration needs n >= 2, got {n}")
    check_limit(n, limit, HARD_ENUM_LIMIT, "max-plane enumeration")
    amb = ambient(n)
    return sorted(MaxPlaneSubgraph.from_mask(n, m) for m in _maximal_independent_masks(amb))


def star(n: int) -> EdgeSet:
    return EdgeSet(n, tuple((1, j) for j in range(2, n + 1)))


def path_graph(n: int) -> EdgeSet:
    return EdgeSet(n, tuple((i, i + 1) for i in range(1, n)))
