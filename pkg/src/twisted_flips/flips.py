"""Edge-exchange adjacency between maximal plane subgraphs of T_n.

``build_flip_graph(n, F)`` materializes the max graph restricted to subgraphs
containing a fixed plane edge set ``F`` (the unrestricted graph when ``F`` is
empty). Searches on it serve as the oracle for the constructive paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .core import (
    DEFAULT_ENUM_LIMIT,
    Edge,
    EdgeSet,
    MaxPlaneSubgraph,
    ambient,
    enumerate_maximal_plane,
    is_maximal_plane,
    is_plane,
    make_edge,
)
from .errors import (
    EmptyGraphError,
    InvalidPathError,
    MismatchedAmbientError,
    NotPlaneError,
    UnknownNodeError,
)
from .search import adjacency, reachable, shortest_path


class ExchangeMove(NamedTuple):
    removed: Edge
    added: Edge

    def apply(self, g: EdgeSet) -> EdgeSet:
        if self.removed not in g or self.added in g:
            raise InvalidPathError(f"move -{self.removed}/+{self.added} does not apply to {g.key()}")
        amb = ambient(g.n)
        mask = g.mask & ~(1 << amb.index[self.removed]) | 1 << amb.index[self.added]
        return EdgeSet.from_mask(g.n, mask)

    def label(self) -> str:
        return f"-{self.removed}/+{self.added}"

    def to_json(self) -> dict:
        return {"remove": list(self.removed), "add": list(self.added)}

    @classmethod
    def from_json(cls, data: dict) -> "ExchangeMove":
        return cls(make_edge(*data["remove"]), make_edge(*data["add"]))


def move_between(a: EdgeSet, b: EdgeSet) -> ExchangeMove:
    """The unique exchange turning ``a`` into ``b``; raises if there is none."""
    if a.n != b.n:
        raise MismatchedAmbientError(f"n={a.n} vs n={b.n}")
    gone = a.mask & ~b.mask
    new = b.mask & ~a.mask
    if gone.bit_count() != 1 or new.bit_count() != 1:
        raise InvalidPathError(f"{a.key()} and {b.key()} do not differ by one exchange")
    edges = ambient(a.n).edges
    return ExchangeMove(edges[gone.bit_length() - 1], edges[new.bit_length() - 1])


def exchange_neighbors(g: EdgeSet) -> list[tuple[ExchangeMove, MaxPlaneSubgraph]]:
    """Every ``(G - g) + h`` that is again maximal plane, ordered by (g, h)."""
    amb = ambient(g.n)
    out = []
    for ki, removed in enumerate(amb.edges):
        if not g.mask >> ki & 1:
            continue
        base = g.mask & ~(1 << ki)
        for kj, added in enumerate(amb.edges):
            if base >> kj & 1 or kj == ki:
                continue
            mask = base | 1 << kj
            if amb.mask_is_maximal_plane(mask):
                out.append((ExchangeMove(removed, added), MaxPlaneSubgraph.from_mask(g.n, mask)))
    return out


@dataclass(frozen=True)
class FlipPath:
    nodes: tuple[MaxPlaneSubgraph, ...]
    moves: tuple[ExchangeMove, ...]
    constraint: EdgeSet | None = None
    constructive: bool = True

    @classmethod
    def from_nodes(cls, nodes: Sequence[EdgeSet], constraint=None, constructive=True) -> "FlipPath":
        nodes = tuple(n if isinstance(n, MaxPlaneSubgraph) else MaxPlaneSubgraph(n.n, n.edges) for n in nodes)
        moves = tuple(move_between(a, b) for a, b in zip(nodes, nodes[1:]))
        return cls(nodes, moves, constraint, constructive)

    def __len__(self):
        return len(self.moves)

    @property
    def n(self) -> int:
        return self.nodes[0].n

    def validate(self) -> None:
        """Raise :class:`InvalidPathError` unless every step is a valid exchange."""
        if not self.nodes:
            raise InvalidPathError("path has no nodes")
        if len(self.moves) != len(self.nodes) - 1:
            raise InvalidPathError("moves must number one fewer than nodes")
        for i, node in enumerate(self.nodes):
            if node.n != self.n:
                raise InvalidPathError(f"node {i} lives in T_{node.n}, not T_{self.n}")
            if not is_maximal_plane(node):
                raise InvalidPathError(f"node {i} is not maximal plane")
            if self.constraint is not None and not self.constraint.issubset(node):
                raise InvalidPathError(f"node {i} misses part of the fixed set")
        for i, (a, move, b) in enumerate(zip(self.nodes, self.moves, self.nodes[1:])):
            if move.apply(a) != b:
                raise InvalidPathError(f"move {i} ({move.label()}) does not produce node {i + 1}")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "constraint": [list(e) for e in self.constraint] if self.constraint is not None else [],
            "nodes": [g.to_json() for g in self.nodes],
            "moves": [m.to_json() for m in self.moves],
            "constructive": self.constructive,
        }

    @classmethod
    def from_json(cls, data: dict) -> "FlipPath":
        n = int(data["n"])
        return cls(
            nodes=tuple(MaxPlaneSubgraph.from_json(g) for g in data["nodes"]),
            moves=tuple(ExchangeMove.from_json(m) for m in data["moves"]),
            constraint=EdgeSet(n, tuple(tuple(e) for e in data.get("constraint") or ())),
            constructive=bool(data.get("constructive", True)),
        )


@dataclass(frozen=True)
class FlipGraph:
    n: int
    constraint: EdgeSet
    nodes: tuple[MaxPlaneSubgraph, ...]
    # (a, b, move) with a < b; ``move`` turns nodes[a] into nodes[b].
    links: tuple[tuple[int, int, ExchangeMove], ...]
    _index: dict = field(init=False, repr=False, compare=False)
    _adj: list = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(self.nodes)})
        object.__setattr__(self, "_adj", adjacency(len(self.nodes), [(a, b) for a, b, _ in self.links]))

    def index_of(self, g: EdgeSet) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise UnknownNodeError(f"{g.key()} is not a node of this flip graph") from None

    def neighbors(self, i: int) -> list[int]:
        return self._adj[i]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "constraint": [list(e) for e in self.constraint],
            "nodes": [g.to_json() for g in self.nodes],
            "links": [[a, b, m.to_json()] for a, b, m in self.links],
        }


def build_flip_graph(n: int, fixed: EdgeSet | None = None, limit: int = DEFAULT_ENUM_LIMIT) -> FlipGraph:
    fixed = fixed if fixed is not None else EdgeSet(n)
    if fixed.n != n:
        raise MismatchedAmbientError(f"fixed set over n={fixed.n}, graph over n={n}")
    if not is_plane(fixed):
        raise NotPlaneError(f"fixed set {fixed.key()} has a crossing pair")
    nodes = tuple(g for g in enumerate_maximal_plane(n, limit) if fixed.issubset(g))
    index = {g: i for i, g in enumerate(nodes)}
    links = []
    for a, g in enumerate(nodes):
        for move, h in exchange_neighbors(g):
            b = index.get(h)
            if b is not None and a < b:
                links.append((a, b, move))
    links.sort(key=lambda t: (t[0], t[1]))
    return FlipGraph(n, fixed, nodes, tuple(links))


def bfs_path(fg: FlipGraph, a: EdgeSet, b: EdgeSet) -> FlipPath | None:
    ia, ib = fg.index_of(a), fg.index_of(b)
    idx = shortest_path(fg._adj, ia, ib)
    if idx is None:
        return None
    return FlipPath.from_nodes([fg.nodes[i] for i in idx], constraint=fg.constraint, constructive=False)


def is_connected(fg: FlipGraph) -> bool:
    if not fg.nodes:
        raise EmptyGraphError("flip graph has no nodes")
    return len(reachable(fg._adj, 0)) == len(fg.nodes)
