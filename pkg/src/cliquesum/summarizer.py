"""Randomized branch sampling that yields an expected tau-visible clique summary.

Every search frame estimates an upper bound ``l_upper`` on the size of any
maximal clique below it and a lower bound ``r_lower`` on that clique's overlap
ratio with the last summary clique, then keeps the branch with probability
``s(r_lower) ** (1 / l_upper)``.
"""
from __future__ import annotations

import enum
import random
import time
from bisect import insort
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .decomposition import BoundKind, OrderKind, bound_adj, make_order
from .graph import Graph, intersect_sorted, relabel
from .mce import Clique, RunStats, _minus, grow


class Sampling(str, enum.Enum):
    BASELINE = "baseline"
    OPT = "opt"


class YEstimator(str, enum.Enum):
    SETDIFF = "setdiff"
    TVALUE = "t"
    DEGREE = "degree"


class Mode(str, enum.Enum):
    PER_BRANCH = "branch"
    ONE_SHOT = "oneshot"


@dataclass(frozen=True)
class SummaryConfig:
    tau: float
    sampling: Sampling = Sampling.OPT
    bound: BoundKind = BoundKind.TRUSS
    order: OrderKind = OrderKind.TRUSS
    y_estimator: YEstimator = YEstimator.DEGREE
    mode: Mode = Mode.PER_BRANCH
    seed: int = 0
    force_first: bool = False

    def __post_init__(self):
        if not 0.0 <= self.tau <= 1.0:
            raise ValueError(f"tau must lie in [0, 1], got {self.tau}")
        for name, kind in (
            ("sampling", Sampling),
            ("bound", BoundKind),
            ("order", OrderKind),
            ("y_estimator", YEstimator),
            ("mode", Mode),
        ):
            object.__setattr__(self, name, kind(getattr(self, name)))

    def as_dict(self) -> dict:
        return {
            "tau": self.tau,
            "sampling": self.sampling.value,
            "bound": self.bound.value,
            "order": self.order.value,
            "y_estimator": self.y_estimator.value,
            "mode": self.mode.value,
            "seed": self.seed,
            "force_first": self.force_first,
        }


@dataclass
class Summary:
    cliques: list[Clique]
    config: SummaryConfig
    stats: RunStats = field(default_factory=RunStats)

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)


# -- sampling functions -------------------------------------------------------


def sampling_baseline(r: float, tau: float) -> float:
    """``(1-r)(2-tau)/(2-r-tau)``; the 0/0 corner at r = tau = 1 is taken as 0."""
    den = 2.0 - r - tau
    if den <= 0.0:
        return 0.0
    return (1.0 - r) * (2.0 - tau) / den


def sampling_opt(r: float, tau: float) -> float:
    """``(tau-r)/(1-r)`` below tau, 0 from tau upward."""
    if r >= tau:
        return 0.0
    return (tau - r) / (1.0 - r)


SAMPLING_FUNCTIONS = {Sampling.BASELINE: sampling_baseline, Sampling.OPT: sampling_opt}


def branch_keep_probability(s_value: float, l_upper: int) -> float:
    if l_upper < 1:
        raise ValueError("l_upper must be >= 1")
    if s_value <= 0.0:
        return 0.0
    if s_value >= 1.0:
        return 1.0
    return s_value ** (1.0 / l_upper)


# -- bound estimation -----------------------------------------------------------


def _adj(gT) -> Sequence[Sequence[int]]:
    return gT.adj if isinstance(gT, Graph) else gT


def estimate_d_upper(gT, bound: BoundKind | str) -> int:
    """Upper bound on how many vertices of T a clique below this frame can add."""
    adj = _adj(gT)
    if not adj:
        return 0
    return max(1, min(len(adj), bound_adj(adj, BoundKind(bound))))


def estimate_y_upper(
    t: int,
    T: Sequence[int],
    C_prev: Sequence[int],
    gT,
    kind: YEstimator | str,
) -> int:
    """Upper bound on how many of t added vertices fall outside ``C_prev``.

    ``gT`` is the graph induced by ``T`` with local id i standing for ``T[i]``.
    """
    kind = YEstimator(kind)
    if kind is YEstimator.TVALUE:
        return t
    outside = _minus(T, C_prev)
    if kind is YEstimator.SETDIFF:
        return len(outside)
    adj = _adj(gT)
    pos = {v: i for i, v in enumerate(T)}
    return sum(1 for v in outside if len(adj[pos[v]]) >= t - 1)


def estimate_r_lower(
    C: Sequence[int],
    C_prev: Sequence[int],
    T: Sequence[int],
    d_upper: int,
    kind: YEstimator | str,
    gT,
) -> float:
    """Minimum over 1 <= t <= d_upper of ``(|C∩C'| + max(t - y_t, 0)) / (|C| + t)``."""
    if not C and d_upper <= 0:
        raise ValueError("empty configuration with nothing left to grow")
    if not C_prev:
        return 0.0
    common = len(intersect_sorted(C, C_prev))
    size = len(C)
    if d_upper <= 0:
        return common / size
    kind = YEstimator(kind)
    if kind is YEstimator.TVALUE:
        # numerator is constant, so the largest t gives the minimum
        return common / (size + d_upper)
    outside = _minus(T, C_prev)
    if kind is YEstimator.SETDIFF:
        ys = [len(outside)] * d_upper
    else:
        adj = _adj(gT)
        pos = {v: i for i, v in enumerate(T)}
        degs = [len(adj[pos[v]]) for v in outside]
        ys = [sum(1 for d in degs if d >= t - 1) for t in range(1, d_upper + 1)]
    return min(
        (common + max(t - ys[t - 1], 0)) / (size + t) for t in range(1, d_upper + 1)
    )


def local_visibility(c: Sequence[int], c_prev: Sequence[int]) -> float:
    """``|c ∩ c_prev| / |c|`` for ascending vertex sequences; 0 against an empty clique."""
    if not c:
        raise ValueError("local visibility of an empty clique")
    if not c_prev:
        return 0.0
    return len(intersect_sorted(c, c_prev)) / len(c)


# -- the sampling enumerator ----------------------------------------------------


class FrameRecord(NamedTuple):
    size: int
    d_upper: int
    r_lower: float
    prev: Clique


class SamplingEnumerator:
    """One summarization run over a graph already relabelled into search order.

    Subclasses may override :meth:`on_prune` and :meth:`on_complete`; the
    verifier uses them for shadow enumeration and bound auditing.
    """

    def __init__(self, g: Graph, config: SummaryConfig, rng: random.Random):
        self.g = g
        self.adj = g.adj
        self.config = config
        self.rng = rng
        self.s = SAMPLING_FUNCTIONS[config.sampling]
        self.summary: list[Clique] = []
        self.prev: Clique = ()
        self.stats = RunStats()
        self.stack: list[FrameRecord] = []

    # hooks

    def on_prune(self, C: list[int], T: list[int], D: list[int]) -> None:
        pass

    def on_complete(self, C: Clique, r: float | None, included: bool) -> None:
        pass

    # driver

    def run(self) -> list[Clique]:
        n = self.g.vertex_count
        if n:
            if self.config.mode is Mode.ONE_SHOT:
                self._plain([], list(range(n)), [])
            else:
                self._frame([], list(range(n)), [])
        self.stats.summary_size = len(self.summary)
        return self.summary

    def _draw_keep(self, p: float) -> bool:
        if self.config.force_first and not self.summary:
            p = 1.0
        return self.rng.random() < p

    def _candidate_graph(self, T: list[int]) -> list[list[int]]:
        pos = {v: i for i, v in enumerate(T)}
        adj = self.adj
        return [[pos[w] for w in intersect_sorted(T, adj[v])] for v in T]

    def _pivot(self, T: list[int], D: list[int], gT: list[list[int]]) -> int:
        best, best_score = -1, -1
        scored = [(v, len(gT[i])) for i, v in enumerate(T)]
        scored += [(v, len(intersect_sorted(T, self.adj[v]))) for v in D]
        for v, score in scored:
            if score > best_score or (score == best_score and v < best):
                best, best_score = v, score
        return best

    def _depth(self) -> None:
        depth = len(self.stack) + 1
        if depth > self.stats.peak_frames:
            self.stats.peak_frames = depth

    def _complete(self, C: list[int], include: bool | None = None) -> None:
        clique = tuple(C)
        r = local_visibility(clique, self.prev) if self.prev else None
        if include is None:
            p = self.s(r or 0.0, self.config.tau)
            include = self._draw_keep(p)
        self.stats.cliques_completed += 1
        if r is not None:
            self.stats.r_samples.append(r)
        self.on_complete(clique, r, include)
        if include:
            self.summary.append(clique)
            self.prev = clique

    def _frame(self, C: list[int], T: list[int], D: list[int]) -> None:
        self._depth()
        if not T and not D:
            self._complete(C, include=True)
            return
        cfg = self.config
        gT = self._candidate_graph(T)
        d_upper = estimate_d_upper(gT, cfg.bound)
        r_lower = estimate_r_lower(C, self.prev, T, d_upper, cfg.y_estimator, gT)
        l_upper = len(C) + d_upper if d_upper else max(len(C), 1)
        p = branch_keep_probability(self.s(r_lower, cfg.tau), l_upper)
        self.stats.frames_sampled += 1
        self.stats.d_upper_sum += d_upper
        if not self._draw_keep(p):
            self.stats.branches_pruned += 1
            self.on_prune(C, T, D)
            return
        self.stats.branches_kept += 1
        self.stack.append(FrameRecord(len(C), d_upper, r_lower, self.prev))
        pivot = self._pivot(T, D, gT)
        for v in _minus(T, self.adj[pivot]):
            nb = self.adj[v]
            self._frame(grow(C, v), intersect_sorted(T, nb), intersect_sorted(D, nb))
            T.remove(v)
            insort(D, v)
        self.stack.pop()

    def _plain(self, C: list[int], T: list[int], D: list[int], include: bool | None = None):
        """Unsampled enumeration; each completed clique is decided by ``_complete``."""
        self._depth()
        if not T and not D:
            self._complete(C, include)
            return
        self.stack.append(FrameRecord(len(C), len(T), 0.0, self.prev))
        pivot = self._pivot(T, D, self._candidate_graph(T))
        for v in _minus(T, self.adj[pivot]):
            nb = self.adj[v]
            self._plain(grow(C, v), intersect_sorted(T, nb), intersect_sorted(D, nb), include)
            T.remove(v)
            insort(D, v)
        self.stack.pop()


def prepare(g: Graph, config: SummaryConfig) -> tuple[Graph, tuple[int, ...], random.Random]:
    """Relabel ``g`` into the configured search order; returns (graph, perm, rng)."""
    rng = random.Random(config.seed)
    order = make_order(g, config.order, rng)
    return relabel(g, order), order.perm, rng


def summarize(g: Graph, config: SummaryConfig, engine=SamplingEnumerator) -> Summary:
    """Run one seeded summarization; cliques come back ascending in ``g``'s ids."""
    t0 = time.perf_counter()
    work, perm, rng = prepare(g, config)
    run = engine(work, config, rng)
    found = run.run()
    cliques = [tuple(sorted(perm[v] for v in c)) for c in found]
    run.stats.wall_time = time.perf_counter() - t0
    return Summary(cliques, config, run.stats)
