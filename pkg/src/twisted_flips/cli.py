"""Command-line entry point: ``twisted-flips {enumerate,path,verify,export}``.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage or
validation errors (reported as JSON on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .constructive import fixed_edge_flip_path, matching_preserving_path
from .core import DEFAULT_ENUM_LIMIT, EdgeSet, MaxPlaneSubgraph, enumerate_maximal_plane
from .errors import NoPathError, TwistedError
from .export import dumps, flip_graph_to_dot, matching_graph_to_dot
from .flips import bfs_path, build_flip_graph
from .matchings import DEFAULT_MATCHING_LIMIT, build_matching_graph, enumerate_plane_perfect_matchings
from .verify import SUITES, run_suite


class UsageError(TwistedError):
    code = "Usage"


def _load(path: str) -> EdgeSet:
    try:
        return EdgeSet.from_json(json.loads(Path(path).read_text()))
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read edge set from {path}: {exc}") from None


def cmd_enumerate(args) -> int:
    if args.kind == "max-plane":
        limit = args.limit or DEFAULT_ENUM_LIMIT
        items = enumerate_maximal_plane(args.n, limit)
    else:
        limit = args.limit or DEFAULT_MATCHING_LIMIT
        items = enumerate_plane_perfect_matchings(args.n, limit)
    if args.format == "count":
        sys.stdout.write(f"{len(items)}\n")
    elif args.format == "json":
        sys.stdout.write(dumps([g.to_json() for g in items]))
    elif args.kind == "max-plane":
        sys.stdout.write(flip_graph_to_dot(build_flip_graph(args.n, limit=limit)))
    else:
        sys.stdout.write(matching_graph_to_dot(build_matching_graph(args.n, limit)))
    return 0


def cmd_path(args) -> int:
    start = MaxPlaneSubgraph(*_as_pair(_load(args.source)))
    end = MaxPlaneSubgraph(*_as_pair(_load(args.target)))
    fixed = _load(args.fixed) if args.fixed else None
    if args.mode == "theorem2":
        path = fixed_edge_flip_path(start, end, fixed, fallback=args.fallback)
    elif args.mode == "theorem3":
        if fixed is not None:
            raise UsageError("theorem3 mode takes no fixed set")
        path = matching_preserving_path(start, end)
    else:
        fg = build_flip_graph(start.n, fixed, limit=args.limit or DEFAULT_ENUM_LIMIT)
        path = bfs_path(fg, start, end)
        if path is None:
            raise NoPathError("endpoints lie in different components")
    path.validate()
    sys.stdout.write(dumps(path.to_json()))
    return 0


def _as_pair(s: EdgeSet):
    return s.n, s.edges


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.n_max)
    if args.format == "text":
        sys.stdout.write("\n".join(report.lines()) + "\n")
    else:
        sys.stdout.write(dumps(report.to_json(timing=args.timing)))
    if args.timing:
        sys.stderr.write(f"wall time {report.wall_time:.3f}s\n")
    return 0 if report.passed else 1


def cmd_export(args) -> int:
    if args.graph == "flip":
        fixed = _load(args.fixed) if args.fixed else None
        fg = build_flip_graph(args.n, fixed, limit=args.limit or DEFAULT_ENUM_LIMIT)
        text = flip_graph_to_dot(fg) if args.format == "dot" else dumps(fg.to_json())
    else:
        mg = build_matching_graph(args.n, args.limit or DEFAULT_MATCHING_LIMIT)
        text = matching_graph_to_dot(mg) if args.format == "dot" else dumps(mg.to_json())
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twisted-flips", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list maximal plane subgraphs or plane perfect matchings")
    p.add_argument("--kind", choices=("max-plane", "matchings"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot", "count"), default="json")
    p.add_argument("--limit", type=int, help="raise the enumeration guard (hard caps still apply)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("path", help="build a flip path between two maximal plane subgraphs")
    p.add_argument("--mode", choices=("theorem2", "theorem3", "bfs"), required=True)
    p.add_argument("--from", dest="source", required=True, help="EdgeSet JSON file")
    p.add_argument("--to", dest="target", required=True, help="EdgeSet JSON file")
    p.add_argument("--fixed", help="EdgeSet JSON file of edges kept on every node")
    p.add_argument("--fallback", action="store_true", help="use search if a constructed step fails")
    p.add_argument("--limit", type=int)
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a flip graph or matching graph as DOT or JSON")
    p.add_argument("--graph", choices=("flip", "matching"), default="flip")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fixed", help="EdgeSet JSON file restricting the flip graph")
    p.add_argument("--format", choices=("json", "dot"), default="dot")
    p.add_argument("--limit", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TwistedError as exc:
        sys.stderr.write(json.dumps(exc.to_dict(), sort_keys=True) + "\n")
        return 1 if isinstance(exc, NoPathError) else 2


if __name__ == "__main__":
    sys.exit(main())
