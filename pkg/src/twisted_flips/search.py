"""Breadth-first search over index-based adjacency lists."""

from __future__ import annotations

from collections import deque
from typing import Sequence


def adjacency(num_nodes: int, links: Sequence[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(num_nodes)]
    for a, b in links:
        adj[a].append(b)
        adj[b].append(a)
    for row in adj:
        row.sort()
    return adj


def shortest_path(adj: Sequence[Sequence[int]], source: int, target: int) -> list[int] | None:
    """Shortest index path; neighbours are expanded lowest index first."""
    if source == target:
        return [source]
    parent = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in parent:
                continue
            parent[v] = u
            if v == target:
                path = [v]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(v)
    return None


def reachable(adj: Sequence[Sequence[int]], source: int) -> set[int]:
    seen = {source}
    queue = deque([source])
    while queue:
        for v in adj[queue.popleft()]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen
