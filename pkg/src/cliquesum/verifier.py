"""Ground truth and statistical checks for summaries.

The brute-force enumerator shares no code with :mod:`cliquesum.mce`: it walks
every vertex subset as a bitmask and filters cliques for maximality.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .decomposition import BoundKind, bound_adj
from .graph import Graph
from .mce import Clique, RunStats
from .summarizer import (
    FrameRecord,
    SamplingEnumerator,
    Summary,
    SummaryConfig,
    local_visibility,
    prepare,
    summarize,
)

ORACLE_MAX_VERTICES = 24


class OracleSizeError(ValueError):
    pass


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in nb) for nb in g.adj]


def brute_force_mce(g: Graph) -> set[Clique]:
    """All maximal cliques by exhaustive subset enumeration."""
    n = g.vertex_count
    if n > ORACLE_MAX_VERTICES:
        raise OracleSizeError(f"brute force refuses {n} > {ORACLE_MAX_VERTICES} vertices")
    if n == 0:
        return set()
    nbr = np.array(_masks(g), dtype=np.int64)
    is_clique = np.ones(1, dtype=bool)
    # common[m]: vertices adjacent to every member of m
    common = np.full(1, (1 << n) - 1, dtype=np.int64)
    for i in range(n):
        low = np.arange(1 << i, dtype=np.int64)
        ok = is_clique & ((nbr[i] & low) == low)
        is_clique = np.concatenate([is_clique, ok])
        common = np.concatenate([common, common & nbr[i]])
    masks = np.nonzero(is_clique & (common == 0))[0]
    masks = masks[masks != 0]
    return {tuple(v for v in range(n) if (int(m) >> v) & 1) for m in masks}


def max_clique_size(g: Graph) -> int:
    return max((len(c) for c in brute_force_mce(g)), default=0)


def visibility(c: Sequence[int], s: Iterable[Sequence[int]]) -> float:
    """Best overlap ratio of ``c`` against any summary clique; 0 for an empty summary."""
    cs = set(c)
    best = 0
    for other in s:
        k = len(cs.intersection(other))
        if k > best:
            best = k
    return best / len(cs)


@dataclass
class VisibilityReport:
    per_clique_visibility: dict[Clique, float]
    min_visibility: float
    mean_visibility: float
    violating_cliques: list[Clique]
    tau: float

    @property
    def ok(self) -> bool:
        return not self.violating_cliques


def audit_tau_visible(
    g: Graph,
    s: Summary | Iterable[Sequence[int]],
    tau: float,
    cliques: Iterable[Clique] | None = None,
) -> VisibilityReport:
    all_cliques = sorted(cliques if cliques is not None else brute_force_mce(g))
    summary = list(s.cliques if isinstance(s, Summary) else s)
    vis = {c: visibility(c, summary) for c in all_cliques}
    values = list(vis.values())
    return VisibilityReport(
        per_clique_visibility=vis,
        min_visibility=min(values, default=1.0),
        mean_visibility=sum(values) / len(values) if values else 1.0,
        violating_cliques=[c for c in all_cliques if vis[c] < tau],
        tau=tau,
    )


@dataclass
class ExpectationEstimate:
    per_clique_mean: float
    per_clique_stderr: float
    runs: int

    def meets(self, tau: float, sigmas: float = 3.0) -> bool:
        return self.per_clique_mean >= tau - sigmas * self.per_clique_stderr


def _mean_stderr(xs: np.ndarray) -> tuple[float, float]:
    mean = float(xs.mean())
    sd = float(xs.std(ddof=1))
    return mean, sd / math.sqrt(len(xs))


def estimate_expected_visibility(
    g: Graph,
    config: SummaryConfig,
    runs: int,
    seeds: Sequence[int] | None = None,
    cliques: Iterable[Clique] | None = None,
    inject_empty: bool = False,
) -> dict[Clique, ExpectationEstimate]:
    """Per-clique empirical mean of (1 if included else visibility) over seeded runs.

    Seeds default to ``config.seed .. config.seed + runs - 1``.  ``inject_empty``
    replaces every run's summary by the empty set (a negative control).
    """
    if runs < 2:
        raise ValueError("need at least two runs for a standard error")
    if seeds is None:
        seeds = range(config.seed, config.seed + runs)
    seeds = list(seeds)
    if len(seeds) != runs or len(set(seeds)) != runs:
        raise ValueError("seeds must be distinct and number exactly `runs`")
    all_cliques = sorted(cliques if cliques is not None else brute_force_mce(g))
    index = {c: i for i, c in enumerate(all_cliques)}
    bits = [sum(1 << v for v in c) for c in all_cliques]
    sizes = [len(c) for c in all_cliques]
    samples = np.zeros((runs, len(all_cliques)))
    for k, seed in enumerate(seeds):
        cfg = SummaryConfig(**{**config.as_dict(), "seed": seed})
        found = [] if inject_empty else summarize(g, cfg).cliques
        sbits = [sum(1 << v for v in c) for c in found]
        row = samples[k]
        for j, cb in enumerate(bits):
            row[j] = max(((cb & sb).bit_count() for sb in sbits), default=0) / sizes[j]
        for c in found:
            row[index[c]] = 1.0
    out = {}
    for j, c in enumerate(all_cliques):
        mean, se = _mean_stderr(samples[:, j])
        out[c] = ExpectationEstimate(mean, se, runs)
    return out


def average_r(stats: RunStats) -> float:
    if not stats.r_samples:
        raise ValueError("no local-visibility samples recorded")
    return sum(stats.r_samples) / len(stats.r_samples)


# -- instrumented engines ---------------------------------------------------------


class ShadowEnumerator(SamplingEnumerator):
    """Keeps walking pruned subtrees so their cliques contribute r samples.

    Shadow cliques are never included and consume no random draws, so the
    summary equals the plain run's for the same seed.
    """

    def on_prune(self, C, T, D):
        self._plain(list(C), list(T), list(D), include=False)


def summarize_with_shadow(g: Graph, config: SummaryConfig) -> Summary:
    return summarize(g, config, engine=ShadowEnumerator)


@dataclass
class BoundViolation:
    clique: Clique
    frame: FrameRecord
    r: float


class BoundAuditor(SamplingEnumerator):
    """Checks every ancestor's (d_upper, r_lower) against each completed clique.

    r is measured against the previous summary clique that was current when
    the ancestor computed its bound.  With ``chain=True`` each sampled frame
    also evaluates all three bounds and records ordering breaks.
    """

    chain = False

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.violations: list[BoundViolation] = []
        self.chain_breaks: list[tuple[int, int, int]] = []
        self.checked = 0

    def on_complete(self, C, r, included):
        for fr in self.stack:
            self.checked += 1
            actual = local_visibility(C, fr.prev)
            if fr.size + fr.d_upper < len(C) or fr.r_lower > actual + 1e-12:
                self.violations.append(BoundViolation(C, fr, actual))

    def _candidate_graph(self, T):
        gT = super()._candidate_graph(T)
        if self.chain and gT:
            h, c, t = (bound_adj(gT, k) for k in (BoundKind.H, BoundKind.CORE, BoundKind.TRUSS))
            if not h >= c >= t:
                self.chain_breaks.append((h, c, t))
        return gT


class ChainAuditor(BoundAuditor):
    chain = True


# -- exact expectation by exhaustive decision enumeration ---------------------------


class _ScriptedRandom:
    """Stands in for ``random.Random`` in the engine and replays fixed decisions."""

    def __init__(self, script: list[bool]):
        self.script = script
        self.i = 0
        self.probs: list[float] = []

    def random(self) -> float:
        raise AssertionError("scripted engine draws through _draw_keep only")


class _ScriptedEnumerator(SamplingEnumerator):
    def _draw_keep(self, p: float) -> bool:
        if self.config.force_first and not self.summary:
            p = 1.0
        rs = self.rng
        rs.probs.append(p)
        if rs.i < len(rs.script):
            keep = rs.script[rs.i]
        else:
            keep = p > 0.0
            rs.script.append(keep)
        rs.i += 1
        return keep


def summary_distribution(
    g: Graph, config: SummaryConfig, max_outcomes: int = 200_000
) -> list[tuple[float, list[Clique]]]:
    """Every reachable summary with its exact probability.

    Walks the tree of keep/prune decisions depth first, so the cost is the
    number of distinct decision paths; meant for graphs of a handful of
    vertices.  The search order is fixed by ``config`` (a random order uses
    ``config.seed``).
    """
    work, perm, _ = prepare(g, config)
    out: list[tuple[float, list[Clique]]] = []
    pending: list[list[bool]] = [[]]
    while pending:
        script = pending.pop()
        rs = _ScriptedRandom(list(script))
        run = _ScriptedEnumerator(work, config, rs)
        found = run.run()
        prob = 1.0
        for k, (keep, p) in enumerate(zip(rs.script, rs.probs)):
            if k >= len(script) and 0.0 < p < 1.0:
                pending.append(rs.script[:k] + [not keep])
            prob *= p if keep else 1.0 - p
        out.append((prob, [tuple(sorted(perm[v] for v in c)) for c in found]))
        if len(out) > max_outcomes:
            raise OracleSizeError("decision tree too large for exact enumeration")
    return out


def exact_expected_visibility(
    g: Graph, config: SummaryConfig, cliques: Iterable[Clique] | None = None
) -> dict[Clique, float]:
    """Exact E[1 if C in S else V_S(C)] for every maximal clique C."""
    all_cliques = sorted(cliques if cliques is not None else brute_force_mce(g))
    exp = dict.fromkeys(all_cliques, 0.0)
    for prob, found in summary_distribution(g, config):
        members = set(found)
        for c in all_cliques:
            exp[c] += prob * (1.0 if c in members else visibility(c, found))
    return exp
