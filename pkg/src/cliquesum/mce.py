"""Bron–Kerbosch maximal clique enumeration with pivoting."""
from __future__ import annotations

import time
from bisect import insort
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .graph import Graph, VertexOrder, intersect_sorted, relabel

Clique = tuple[int, ...]
Sink = Callable[[Clique, int], None]


@dataclass
class RunStats:
    summary_size: int = 0
    cliques_completed: int = 0
    branches_kept: int = 0
    branches_pruned: int = 0
    r_samples: list[float] = field(default_factory=list)
    wall_time: float = 0.0
    peak_frames: int = 0
    frames_sampled: int = 0
    d_upper_sum: int = 0

    def as_dict(self, with_samples: bool = False) -> dict:
        d = {
            "summary_size": self.summary_size,
            "cliques_completed": self.cliques_completed,
            "branches_kept": self.branches_kept,
            "branches_pruned": self.branches_pruned,
            "average_r": self.average_r(),
            "wall_time": self.wall_time,
            "peak_frames": self.peak_frames,
        }
        if with_samples:
            d["r_samples"] = list(self.r_samples)
        return d

    def average_r(self) -> float | None:
        if not self.r_samples:
            return None
        return sum(self.r_samples) / len(self.r_samples)


def choose_pivot(adj: Sequence[Sequence[int]], T: Sequence[int], D: Sequence[int]) -> int:
    """Vertex of T ∪ D with the most neighbors in T; smallest id on ties."""
    if not T and not D:
        raise ValueError("pivot requested with T and D both empty")
    best, best_score = -1, -1
    for v in sorted((*T, *D)):
        score = len(intersect_sorted(T, adj[v]))
        if score > best_score:
            best, best_score = v, score
    return best


def enumerate_maximal_cliques(
    g: Graph,
    order: VertexOrder | None = None,
    sink: Sink | None = None,
) -> RunStats:
    """Deliver every maximal clique of ``g`` to ``sink`` exactly once.

    With ``order`` the search runs on ``g`` relabelled by it (so candidates are
    expanded in that order) and cliques are translated back to ``g``'s ids
    before delivery.  Each delivered clique is a fresh ascending tuple.
    """
    work = g if order is None else relabel(g, order)
    back = None if order is None else order.perm
    adj = work.adj
    stats = RunStats()
    depth = 0
    t0 = time.perf_counter()

    def expand(C: list[int], T: list[int], D: list[int]) -> None:
        nonlocal depth
        depth += 1
        if depth > stats.peak_frames:
            stats.peak_frames = depth
        if not T and not D:
            clique = tuple(C) if back is None else tuple(sorted(back[v] for v in C))
            if sink is not None:
                sink(clique, stats.cliques_completed)
            stats.cliques_completed += 1
            depth -= 1
            return
        pivot = choose_pivot(adj, T, D)
        # T and D are private to this frame: every caller passes fresh lists
        for v in _minus(T, adj[pivot]):
            nb = adj[v]
            expand(grow(C, v), intersect_sorted(T, nb), intersect_sorted(D, nb))
            T.remove(v)
            insort(D, v)
        depth -= 1

    if work.vertex_count:
        expand([], list(range(work.vertex_count)), [])
    stats.summary_size = stats.cliques_completed
    stats.wall_time = time.perf_counter() - t0
    return stats


def grow(C: list[int], v: int) -> list[int]:
    """Copy of ascending ``C`` with ``v`` inserted in place.

    Pivoting means vertices do not join C in id order, so plain appends would
    break the sortedness the overlap merge-joins rely on.
    """
    out = C.copy()
    insort(out, v)
    return out


def _minus(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Ascending ``a`` minus ascending ``b``."""
    common = set(intersect_sorted(a, b))
    return [x for x in a if x not in common]


def maximal_cliques(g: Graph, order: VertexOrder | None = None) -> list[Clique]:
    out: list[Clique] = []
    enumerate_maximal_cliques(g, order, lambda c, _i: out.append(c))
    return out
