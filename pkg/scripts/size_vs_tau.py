"""Summary size and average local visibility against tau, opt vs baseline.

    python3 scripts/size_vs_tau.py                 # seeded random graph
    python3 scripts/size_vs_tau.py edges.txt       # any SNAP-style edge list

Prints one row per (tau, sampling) averaged over seeds.  average r is taken
from shadow runs so pruned subtrees count too.
"""
import argparse
import time

from cliquesum import SummaryConfig, load_edge_list, maximal_cliques
from cliquesum.graph import erdos_renyi
from cliquesum.summarizer import Sampling
from cliquesum.verifier import summarize_with_shadow


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("input", nargs="?")
    ap.add_argument("--n", type=int, default=300)
    ap.add_argument("--p", type=float, default=0.05)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--taus", default="0.5,0.6,0.7,0.8,0.9")
    ap.add_argument("--bound", default="truss")
    ap.add_argument("--order", default="truss")
    args = ap.parse_args()

    g = load_edge_list(args.input) if args.input else erdos_renyi(args.n, args.p, seed=1)
    t0 = time.perf_counter()
    total = len(maximal_cliques(g))
    print(f"# {g.vertex_count} vertices, {g.edge_count} edges, {total} maximal cliques "
          f"({time.perf_counter() - t0:.2f}s)")
    print(f"{'tau':>5} {'sampling':>9} {'size':>9} {'frac':>7} {'avg_r':>7} {'time_s':>8}")
    for tau in (float(x) for x in args.taus.split(",")):
        for sampling in Sampling:
            sizes, rs, times = [], [], []
            for seed in range(args.seeds):
                cfg = SummaryConfig(tau, sampling=sampling, bound=args.bound, order=args.order, seed=seed)
                s = summarize_with_shadow(g, cfg)
                sizes.append(s.stats.summary_size)
                times.append(s.stats.wall_time)
                if s.stats.r_samples:
                    rs.append(s.stats.average_r())
            size = sum(sizes) / len(sizes)
            r = sum(rs) / len(rs) if rs else float("nan")
            print(f"{tau:5.2f} {sampling.value:>9} {size:9.1f} {size / max(total, 1):7.3f} {r:7.3f} "
                  f"{sum(times) / len(times):8.3f}")


if __name__ == "__main__":
    main()
