"""Exhaustive verification suites for the connectivity results at small n.

Each suite returns a :class:`VerificationReport`. Reports hold only counts
and verdicts, so serializing the same suite twice gives identical bytes;
wall time is attached separately and left out unless asked for.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .constructive import fixed_edge_flip_path, matching_preserving_path
from .core import (
    EdgeSet,
    HARD_ENUM_LIMIT,
    all_edges,
    crosses,
    enumerate_maximal_plane,
    is_plane,
    path_graph,
    star,
)
from .errors import ClaimViolation, InvalidPathError, LimitExceededError, NoPathError
from .flips import bfs_path, build_flip_graph, is_connected
from .matchings import HARD_MATCHING_LIMIT, build_matching_graph, perfect_matchings_of
from .search import adjacency, reachable

SUITES = ("crossing", "theorem1", "theorem2", "theorem3", "fig3")


@dataclass
class CheckResult:
    name: str
    passed: bool
    counts: dict = field(default_factory=dict)
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    checks: list[CheckResult] = field(default_factory=list)
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "n_max": self.n_max,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {c.counts}" + (f"  {c.detail}" if c.detail else "")
                for c in self.checks]


def _contains_strictly(outer, inner) -> bool:
    # interval containment with all four endpoints distinct
    a = set(range(outer[0], outer[1] + 1))
    b = set(range(inner[0], inner[1] + 1))
    return b < a and not set(outer) & set(inner)


def check_crossing(n_max: int) -> list[CheckResult]:
    out = []
    for n in range(2, n_max + 1):
        edges = all_edges(n)
        bad = []
        pairs = 0
        for e in edges:
            for f in edges:
                pairs += 1
                c = crosses(e, f)
                if c != crosses(f, e):
                    bad.append(f"asymmetric {e} {f}")
                if set(e) & set(f) and c:
                    bad.append(f"shared endpoint crosses {e} {f}")
                if c != (_contains_strictly(e, f) ^ _contains_strictly(f, e)):
                    bad.append(f"containment mismatch {e} {f}")
        if not (is_plane(star(n)) and is_plane(path_graph(n))):
            bad.append("star or path not plane")
        out.append(CheckResult(f"crossing n={n}", not bad, {"pairs": pairs}, "; ".join(bad[:3])))
    return out


def check_theorem1(n_max: int) -> list[CheckResult]:
    out = []
    for n in range(2, n_max + 1, 2):
        mg = build_matching_graph(n, limit=max(n, 12))
        ok = mg.is_connected()
        out.append(CheckResult(f"matching graph connected n={n}", ok,
                               {"nodes": len(mg.nodes), "links": len(mg.links)}))
    return out


def check_theorem2(n_max: int, bfs_max: int = 6) -> list[CheckResult]:
    out = []
    for n in range(2, n_max + 1):
        subs = enumerate_maximal_plane(n, limit=max(n, 9))
        violations, invalid, paths, cross_checked, disconnected = 0, 0, 0, 0, 0
        first_problem = ""
        graphs = {}
        for r in subs:
            for q in subs:
                fixed = EdgeSet.from_mask(n, r.mask & q.mask)
                try:
                    path = fixed_edge_flip_path(r, q, fixed)
                    path.validate()
                    if path.nodes[0] != r or path.nodes[-1] != q:
                        raise InvalidPathError("endpoints differ from the requested pair")
                    paths += 1
                except ClaimViolation as exc:
                    violations += 1
                    first_problem = first_problem or str(exc)
                    continue
                except InvalidPathError as exc:
                    invalid += 1
                    first_problem = first_problem or str(exc)
                    continue
                if n <= bfs_max:
                    if fixed not in graphs:
                        graphs[fixed] = build_flip_graph(n, fixed, limit=max(n, 9))
                    fg = graphs[fixed]
                    if bfs_path(fg, r, q) is None:
                        disconnected += 1
                    cross_checked += 1
        connected_sets = sum(1 for fg in graphs.values() if is_connected(fg))
        ok = violations == 0 and invalid == 0 and disconnected == 0 and connected_sets == len(graphs)
        out.append(CheckResult(
            f"fixed-edge flip paths n={n}", ok,
            {"subgraphs": len(subs), "paths": paths, "claim_violations": violations,
             "invalid_paths": invalid, "bfs_cross_checked": cross_checked,
             "bfs_missing": disconnected, "fixed_sets": len(graphs),
             "fixed_sets_connected": connected_sets},
            first_problem,
        ))
    return out


def check_theorem3(n_max: int) -> list[CheckResult]:
    out = []
    for n in range(2, n_max + 1, 2):
        mg = build_matching_graph(n, limit=max(n, 12))
        fg = build_flip_graph(n, limit=max(n, 9))
        has_pm = [bool(perfect_matchings_of(g)) for g in fg.nodes]
        chosen = [i for i, ok in enumerate(has_pm) if ok]
        problems, paths = 0, 0
        first_problem = ""
        for a in chosen:
            for b in chosen:
                s, r = fg.nodes[a], fg.nodes[b]
                try:
                    path = matching_preserving_path(s, r, mg)
                    path.validate()
                    if path.nodes[0] != s or path.nodes[-1] != r:
                        raise InvalidPathError("endpoints differ from the requested pair")
                    if not all(has_pm[fg.index_of(g)] for g in path.nodes):
                        raise InvalidPathError("a node on the path has no perfect matching")
                    paths += 1
                except (ClaimViolation, InvalidPathError, NoPathError) as exc:
                    problems += 1
                    first_problem = first_problem or str(exc)
        keep = set(chosen)
        induced = adjacency(len(fg.nodes), [(a, b) for a, b, _ in fg.links if a in keep and b in keep])
        search_connected = bool(chosen) and reachable(induced, chosen[0]) >= keep
        out.append(CheckResult(
            f"matching-preserving flip paths n={n}", problems == 0 and search_connected,
            {"subgraphs": len(fg.nodes), "with_matching": len(chosen), "paths": paths,
             "failures": problems, "induced_connected": search_connected},
            first_problem,
        ))
    return out


def check_fig3(n_max: int) -> list[CheckResult]:
    out = []
    for n in range(6, n_max + 1, 2):
        subs = enumerate_maximal_plane(n, limit=max(n, 9))
        witnesses = [g for g in subs if not perfect_matchings_of(g)]
        out.append(CheckResult(
            f"subgraph without perfect matching n={n}", bool(witnesses),
            {"subgraphs": len(subs), "witnesses": len(witnesses)},
            witnesses[0].key() if witnesses else "",
        ))
    return out


_RUNNERS = {
    "crossing": check_crossing,
    "theorem1": check_theorem1,
    "theorem2": check_theorem2,
    "theorem3": check_theorem3,
    "fig3": check_fig3,
}


def run_suite(suite: str, n_max: int) -> VerificationReport:
    if suite != "all" and suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    if n_max < 2:
        raise LimitExceededError(f"n-max must be at least 2, got {n_max}")
    if n_max > HARD_ENUM_LIMIT and suite != "theorem1":
        raise LimitExceededError(f"n-max {n_max} above hard cap {HARD_ENUM_LIMIT}")
    if n_max > HARD_MATCHING_LIMIT:
        raise LimitExceededError(f"n-max {n_max} above hard cap {HARD_MATCHING_LIMIT}")
    if suite == "fig3" and n_max < 6:
        raise LimitExceededError("fig3 needs n-max >= 6")
    start = time.perf_counter()
    report = VerificationReport(suite, n_max)
    for name in (SUITES if suite == "all" else (suite,)):
        for check in _RUNNERS[name](n_max):
            if suite == "all":
                check.name = f"{name}: {check.name}"
            report.checks.append(check)
    report.wall_time = time.perf_counter() - start
    return report
