"""Counts of maximal plane subgraphs, plane perfect matchings, and subgraphs
without a perfect matching, for small n."""

import argparse

from twisted_flips import build_flip_graph, build_matching_graph, enumerate_maximal_plane, perfect_matchings_of


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=9)
    args = ap.parse_args()
    print(f"{'n':>3} {'max-plane':>10} {'edges':>6} {'flip links':>11} {'matchings':>10} {'no-matching':>12}")
    for n in range(2, args.n_max + 1):
        subs = enumerate_maximal_plane(n, limit=max(n, 9))
        sizes = sorted({len(g) for g in subs})
        links = len(build_flip_graph(n, limit=max(n, 9)).links)
        if n % 2:
            pm, bare = "-", "-"
        else:
            pm = len(build_matching_graph(n).nodes)
            bare = sum(1 for g in subs if not perfect_matchings_of(g))
        print(f"{n:>3} {len(subs):>10} {','.join(map(str, sizes)):>6} {links:>11} {pm:>10} {bare:>12}")


if __name__ == "__main__":
    main()
