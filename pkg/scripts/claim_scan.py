"""Run the degree-signature construction on every ordered pair at larger n.

Prints claim-violation counts and path-length statistics next to the
shortest search path lengths (search only up to --bfs-max).

    python scripts/claim_scan.py --n 8 --bfs-max 7
"""

import argparse
import statistics
import time

from twisted_flips import EdgeSet, bfs_path, build_flip_graph, enumerate_maximal_plane, fixed_edge_flip_path
from twisted_flips.errors import ClaimViolation


def scan(n, bfs_max):
    subs = enumerate_maximal_plane(n, limit=max(n, 9))
    lengths, excess, violations = [], [], 0
    graphs = {}
    for r in subs:
        for q in subs:
            fixed = EdgeSet.from_mask(n, r.mask & q.mask)
            try:
                p = fixed_edge_flip_path(r, q, fixed)
            except ClaimViolation as exc:
                violations += 1
                print("  violation:", exc)
                continue
            lengths.append(len(p))
            if n <= bfs_max:
                if fixed not in graphs:
                    graphs[fixed] = build_flip_graph(n, fixed, limit=max(n, 9))
                excess.append(len(p) - len(bfs_path(graphs[fixed], r, q)))
    return len(subs), lengths, excess, violations


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5, 6, 7, 8])
    ap.add_argument("--bfs-max", type=int, default=7)
    args = ap.parse_args()
    print(f"{'n':>3} {'graphs':>7} {'pairs':>7} {'viol':>5} {'mean len':>9} {'max len':>8} {'mean excess':>12} {'secs':>6}")
    for n in args.n:
        t = time.perf_counter()
        count, lengths, excess, violations = scan(n, args.bfs_max)
        ex = f"{statistics.mean(excess):.3f}" if excess else "-"
        print(f"{n:>3} {count:>7} {len(lengths):>7} {violations:>5} {statistics.mean(lengths):>9.3f} "
              f"{max(lengths):>8} {ex:>12} {time.perf_counter() - t:>6.1f}")


if __name__ == "__main__":
    main()
