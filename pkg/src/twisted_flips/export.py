"""DOT rendering and JSON helpers shared by the CLI."""

from __future__ import annotations

import json

from .flips import FlipGraph
from .matchings import MatchingGraph


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _dot(name: str, labels, links) -> str:
    lines = [f"graph {name} {{"]
    for i, label in enumerate(labels):
        lines.append(f'  n{i} [label="{label}"];')
    for a, b, tag in links:
        attr = f' [label="{tag}"]' if tag else ""
        lines.append(f"  n{a} -- n{b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def flip_graph_to_dot(fg: FlipGraph, label_moves: bool = True) -> str:
    return _dot(
        f"MP_T{fg.n}",
        [g.key() for g in fg.nodes],
        [(a, b, m.label() if label_moves else "") for a, b, m in fg.links],
    )


def matching_graph_to_dot(mg: MatchingGraph) -> str:
    return _dot(f"M_T{mg.n}", [m.key() for m in mg.nodes], [(a, b, "") for a, b in mg.links])
