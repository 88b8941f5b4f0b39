"""Core and truss decompositions, the orders they induce, and clique-size bounds.

The ``*_adj`` helpers take a bare adjacency (sequence of ascending neighbor
sequences) so per-frame candidate graphs can be scored without building a
:class:`Graph`.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Sequence

from .graph import Graph, VertexOrder, intersect_sorted

Adjacency = Sequence[Sequence[int]]


class BoundKind(str, enum.Enum):
    H = "h"
    CORE = "core"
    TRUSS = "truss"


class OrderKind(str, enum.Enum):
    RANDOM = "random"
    DEGENERACY = "degeneracy"
    TRUSS = "truss"


@dataclass(frozen=True)
class CoreResult:
    core_number: tuple[int, ...]
    degeneracy_order: VertexOrder
    degeneracy: int


@dataclass(frozen=True)
class TrussResult:
    truss_number: dict[tuple[int, int], int]
    vertex_truss: tuple[int, ...]
    truss_order: VertexOrder
    max_truss: int


# -- peeling on bare adjacency ------------------------------------------------


def core_peel_adj(adj: Adjacency) -> tuple[list[int], list[int]]:
    """Return ``(core_number, peel_order)``; min current degree first, low id on ties."""
    n = len(adj)
    deg = [len(nb) for nb in adj]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapify(heap)
    gone = [False] * n
    core = [0] * n
    order = []
    k = 0
    while heap:
        d, v = heappop(heap)
        if gone[v] or d != deg[v]:
            continue
        gone[v] = True
        if d > k:
            k = d
        core[v] = k
        order.append(v)
        for w in adj[v]:
            if not gone[w]:
                deg[w] -= 1
                heappush(heap, (deg[w], w))
    return core, order


def edge_support_adj(adj: Adjacency) -> dict[tuple[int, int], int]:
    return {
        (u, v): len(intersect_sorted(nb, adj[v]))
        for u, nb in enumerate(adj)
        for v in nb
        if u < v
    }


def truss_peel_adj(adj: Adjacency) -> tuple[dict[tuple[int, int], int], list[int]]:
    """Return ``(edge_truss, vertex_peel_order)``.

    Repeatedly removes the edge of least remaining support (lexicographically
    smallest on ties).  A vertex is emitted when its last edge goes; isolated
    vertices come first in ascending id.
    """
    n = len(adj)
    sup = edge_support_adj(adj)
    heap = [(s, u, v) for (u, v), s in sup.items()]
    heapify(heap)
    alive = [set(nb) for nb in adj]
    left = [len(nb) for nb in adj]
    order = [v for v in range(n) if not left[v]]
    truss: dict[tuple[int, int], int] = {}
    k = 2
    while heap:
        s, u, v = heappop(heap)
        if (u, v) in truss or sup[(u, v)] != s:
            continue
        if s + 2 > k:
            k = s + 2
        truss[(u, v)] = k
        alive[u].discard(v)
        alive[v].discard(u)
        for w in alive[u] & alive[v]:
            for e in ((u, w) if u < w else (w, u), (v, w) if v < w else (w, v)):
                sup[e] -= 1
                heappush(heap, (sup[e], *e))
        left[u] -= 1
        left[v] -= 1
        if not left[u]:
            order.append(u)
        if not left[v]:
            order.append(v)
    return truss, order


def h_index_degrees(degrees: Sequence[int]) -> int:
    """Largest h with at least h degrees >= h - 1 (0 when there are none)."""
    n = len(degrees)
    if n == 0:
        return 0
    hist = [0] * (n + 1)
    for d in degrees:
        hist[min(d, n)] += 1
    at_least = 0
    # at_least = #vertices with degree >= h - 1 once bucket h-1 is added
    for h in range(n, 0, -1):
        at_least += hist[h - 1] + (hist[n] if h == n else 0)
        if at_least >= h:
            return h
    return 0


def core_bound_adj(adj: Adjacency) -> int:
    if not adj:
        return 0
    core, _ = core_peel_adj(adj)
    return max(core) + 1


def truss_bound_adj(adj: Adjacency) -> int:
    if not adj:
        return 0
    truss, _ = truss_peel_adj(adj)
    return max(truss.values(), default=1)


def bound_adj(adj: Adjacency, kind: BoundKind) -> int:
    if kind is BoundKind.H:
        return h_index_degrees([len(nb) for nb in adj])
    if kind is BoundKind.CORE:
        return core_bound_adj(adj)
    return truss_bound_adj(adj)


# -- Graph-level API ------------------------------------------------------------


def core_decompose(g: Graph) -> CoreResult:
    core, order = core_peel_adj(g.adj)
    return CoreResult(tuple(core), VertexOrder(tuple(order), "degeneracy"), max(core, default=0))


def truss_decompose(g: Graph) -> TrussResult:
    truss, order = truss_peel_adj(g.adj)
    vt = [1] * g.vertex_count
    for (u, v), k in truss.items():
        if k > vt[u]:
            vt[u] = k
        if k > vt[v]:
            vt[v] = k
    if truss:
        top = max(truss.values())
    else:
        top = 1 if g.vertex_count else 0
    return TrussResult(truss, tuple(vt), VertexOrder(tuple(order), "truss"), top)


def edge_support(g: Graph) -> dict[tuple[int, int], int]:
    return edge_support_adj(g.adj)


def h_bound(g: Graph) -> int:
    return h_index_degrees(g.degrees().tolist())


def core_bound(g: Graph) -> int:
    return core_bound_adj(g.adj)


def truss_bound(g: Graph) -> int:
    return truss_decompose(g).max_truss


def clique_bound(g: Graph, kind: BoundKind) -> int:
    return bound_adj(g.adj, BoundKind(kind))


def degeneracy_order(g: Graph) -> VertexOrder:
    return core_decompose(g).degeneracy_order


def truss_order(g: Graph) -> VertexOrder:
    return truss_decompose(g).truss_order


def make_order(g: Graph, kind: OrderKind | str, rng: random.Random | None = None) -> VertexOrder:
    kind = OrderKind(kind)
    if kind is OrderKind.DEGENERACY:
        return degeneracy_order(g)
    if kind is OrderKind.TRUSS:
        return truss_order(g)
    if rng is None:
        raise ValueError("random order needs an rng")
    return VertexOrder.random(g.vertex_count, rng)
