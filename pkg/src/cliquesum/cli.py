"""Command-line front end: ``cliquesum {enumerate,summarize,verify,bench}``."""
from __future__ import annotations

import argparse
import itertools
import json
import os
import random
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .decomposition import BoundKind, OrderKind, make_order
from .graph import EdgeListParseError, Graph, load_edge_list
from .mce import enumerate_maximal_cliques
from .summarizer import Mode, Sampling, SummaryConfig, YEstimator, summarize
from .verifier import (
    OracleSizeError,
    audit_tau_visible,
    brute_force_mce,
    estimate_expected_visibility,
    summarize_with_shadow,
)

WORKERS_ENV = "CLIQUESUM_WORKERS"
DEFAULT_TAUS = "0.5,0.6,0.7,0.8,0.9"

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass
class Writer:
    """Serializes records to one stream; shared by bench workers."""

    stream: object
    fmt: str = "text"

    def __post_init__(self):
        self._lock = threading.Lock()

    def line(self, text: str) -> None:
        with self._lock:
            self.stream.write(text + "\n")

    def clique(self, ids: list[int]) -> None:
        if self.fmt == "json-lines":
            self.line(json.dumps({"clique": ids}))
        else:
            self.line(" ".join(map(str, ids)))

    def record(self, kind: str, payload: dict) -> None:
        if self.fmt == "json-lines":
            self.line(json.dumps({kind: payload}, sort_keys=True))
        else:
            self.line("# " + kind + " " + " ".join(f"{k}={_fmt(v)}" for k, v in payload.items()))


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    if v is None:
        return "NA"
    return str(v)


def _config(args, tau: float | None = None, seed: int | None = None, **over) -> SummaryConfig:
    fields = dict(
        tau=args.tau if tau is None else tau,
        sampling=args.sampling,
        bound=args.bound,
        order=args.order,
        y_estimator=args.y_est,
        mode=args.mode,
        seed=args.seed if seed is None else seed,
        force_first=args.force_first,
    )
    fields.update(over)
    return SummaryConfig(**fields)


def _note(args, msg: str) -> None:
    if not args.quiet:
        print(msg, file=sys.stderr)


# -- subcommands ------------------------------------------------------------------


def cmd_enumerate(args, g: Graph, out: Writer) -> int:
    if args.max_vertices is not None and g.vertex_count > args.max_vertices:
        print(f"error: {g.vertex_count} vertices exceed --max-vertices", file=sys.stderr)
        return EXIT_ERROR
    order = None
    if args.order != "identity":
        order = make_order(g, args.order, random.Random(args.seed))
    stats = enumerate_maximal_cliques(g, order, lambda c, _i: out.clique(g.external_ids(c)))
    out.record(
        "stats",
        {"cliques": stats.cliques_completed, "wall_time": stats.wall_time, "peak_frames": stats.peak_frames},
    )
    return EXIT_OK


def cmd_summarize(args, g: Graph, out: Writer) -> int:
    cfg = _config(args)
    run = summarize_with_shadow if args.shadow else summarize
    s = run(g, cfg)
    for c in s.cliques:
        out.clique(g.external_ids(c))
    st = s.stats
    out.record(
        "stats",
        {
            "summary_size": st.summary_size,
            "cliques_completed": st.cliques_completed,
            "branches_kept": st.branches_kept,
            "branches_pruned": st.branches_pruned,
            "average_r": st.average_r(),
            "peak_frames": st.peak_frames,
            "seed": cfg.seed,
        },
    )
    # timing is not reproducible, keep it off stdout
    _note(args, f"wall_time={st.wall_time:.6f}s")
    return EXIT_OK


def cmd_verify(args, g: Graph, out: Writer) -> int:
    cfg = _config(args)
    try:
        cliques = sorted(brute_force_mce(g))
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    summary = [] if args.inject_empty else summarize(g, cfg).cliques
    report = audit_tau_visible(g, summary, cfg.tau, cliques)
    est = estimate_expected_visibility(
        g, cfg, args.runs, cliques=cliques, inject_empty=args.inject_empty
    )
    failing = []
    for c in cliques:
        e = est[c]
        ok = e.meets(cfg.tau, args.sigmas)
        if not ok:
            failing.append(c)
        out.record(
            "clique",
            {
                "members": " ".join(map(str, g.external_ids(c))) if out.fmt == "text" else g.external_ids(c),
                "mean": e.per_clique_mean,
                "stderr": e.per_clique_stderr,
                "visibility_seed": report.per_clique_visibility[c],
                "status": "ok" if ok else "FAIL",
            },
        )
    exact_needed = cfg.tau >= 1.0
    audit_ok = report.ok or not exact_needed
    passed = not failing and audit_ok
    out.record(
        "verdict",
        {
            "result": "PASS" if passed else "FAIL",
            "tau": cfg.tau,
            "runs": args.runs,
            "cliques": len(cliques),
            "failing": len(failing),
            "audit_violators": len(report.violating_cliques),
            "audit_min_visibility": report.min_visibility,
        },
    )
    return EXIT_OK if passed else EXIT_FAIL


def _bench_grid(args) -> list[SummaryConfig]:
    taus = [float(x) for x in args.taus.split(",")]
    bounds = [BoundKind(x) for x in args.bounds.split(",")]
    orders = [OrderKind(x) for x in args.orders.split(",")]
    samplings = [Sampling(x) for x in args.samplings.split(",")]
    return [
        _config(args, tau=t, sampling=s, bound=b, order=o)
        for s, o, b, t in itertools.product(samplings, orders, bounds, taus)
    ]


def bench_record(g: Graph, cfg: SummaryConfig, seeds: int, shadow_r: bool) -> dict:
    sizes, times, kept, pruned, rs, dmeans = [], [], [], [], [], []
    for k in range(seeds):
        run_cfg = SummaryConfig(**{**cfg.as_dict(), "seed": cfg.seed + k})
        s = summarize(g, run_cfg)
        sizes.append(s.stats.summary_size)
        times.append(s.stats.wall_time)
        kept.append(s.stats.branches_kept)
        pruned.append(s.stats.branches_pruned)
        if s.stats.frames_sampled:
            dmeans.append(s.stats.d_upper_sum / s.stats.frames_sampled)
        stats = summarize_with_shadow(g, run_cfg).stats if shadow_r else s.stats
        r = stats.average_r()
        if r is not None:
            rs.append(r)

    def mean(xs):
        return sum(xs) / len(xs) if xs else None

    return {
        "config": {k: v for k, v in cfg.as_dict().items() if k != "seed"},
        "seeds": [cfg.seed + k for k in range(seeds)],
        "summary_size": mean(sizes),
        "wall_time": mean(times),
        "branches_kept": mean(kept),
        "branches_pruned": mean(pruned),
        "average_r": mean(rs),
        "mean_d_upper": mean(dmeans),
    }


def cmd_bench(args, g: Graph, out: Writer) -> int:
    grid = _bench_grid(args)
    workers = args.workers or int(os.environ.get(WORKERS_ENV, "1"))
    out.fmt = "json-lines"
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(bench_record, g, cfg, args.seeds, args.shadow_r) for cfg in grid]
        # emit in grid order regardless of completion order
        for fut in futures:
            out.line(json.dumps(fut.result(), sort_keys=True))
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "summarize": cmd_summarize,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliquesum", description=__doc__)
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, tau_required: bool):
        sp.add_argument("input", help="SNAP-style edge list")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--output", choices=["text", "json-lines"], default="text")
        sp.add_argument("--quiet", action="store_true")
        if tau_required is None:
            return
        sp.add_argument("--tau", type=float, required=tau_required)
        sp.add_argument("--bound", choices=[b.value for b in BoundKind], default="truss")
        sp.add_argument("--order", choices=[o.value for o in OrderKind], default="truss")
        sp.add_argument("--sampling", choices=[s.value for s in Sampling], default="opt")
        sp.add_argument("--y-est", choices=[y.value for y in YEstimator], default="degree")
        sp.add_argument("--mode", choices=[m.value for m in Mode], default="branch")
        sp.add_argument("--force-first", action="store_true")

    e = sub.add_parser("enumerate", help="list every maximal clique")
    common(e, None)
    e.add_argument("--order", choices=["identity"] + [o.value for o in OrderKind], default="identity")
    e.add_argument("--max-vertices", type=int, default=None)

    s = sub.add_parser("summarize", help="sample an expected tau-visible summary")
    common(s, True)
    s.add_argument("--shadow", action="store_true", help="also walk pruned subtrees for average r")

    v = sub.add_parser("verify", help="Monte-Carlo check of expected visibility")
    common(v, True)
    v.add_argument("--runs", type=int, default=500)
    v.add_argument("--sigmas", type=float, default=3.0)
    v.add_argument("--inject-empty", action="store_true", help="negative control: empty summaries")

    b = sub.add_parser("bench", help="averaged runs over a (tau, bound, order, sampling) grid")
    common(b, False)
    b.add_argument("--taus", default=DEFAULT_TAUS)
    b.add_argument("--bounds", default="h,core,truss")
    b.add_argument("--orders", default="random,degeneracy,truss")
    b.add_argument("--samplings", default="baseline,opt")
    b.add_argument("--seeds", type=int, default=5)
    b.add_argument("--workers", type=int, default=None, help=f"defaults to ${WORKERS_ENV} or 1")
    b.add_argument("--no-shadow-r", dest="shadow_r", action="store_false")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "runs", 1) < 1 or getattr(args, "seeds", 1) < 1:
        print("error: --runs/--seeds must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    if args.subcommand == "bench" and args.tau is None:
        args.tau = float(args.taus.split(",")[0])
    try:
        t0 = time.perf_counter()
        g = load_edge_list(args.input)
        _note(args, f"loaded {g.vertex_count} vertices, {g.edge_count} edges in {time.perf_counter() - t0:.3f}s")
    except (OSError, EdgeListParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out = Writer(sys.stdout, args.output)
    try:
        return COMMANDS[args.subcommand](args, g, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
