"""Undirected graphs in compressed adjacency (CSR) form.

Vertex ids are dense ``0..n-1``.  Loaders compact arbitrary source ids and keep
the mapping in ``Graph.original_id`` so results can be reported in file ids.
"""
from __future__ import annotations

import io
import random
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, TextIO

import numpy as np

MAX_VERTICES = 2**32 - 1

VertexSet = Sequence[int]


class EdgeListParseError(ValueError):
    """Raised for a malformed data line in an edge-list file."""

    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno
        self.line = line


@dataclass(frozen=True)
class LoadStats:
    data_lines: int = 0
    self_loops: int = 0
    duplicate_edges: int = 0


@dataclass(frozen=True, eq=False)
class Graph:
    offsets: np.ndarray
    targets: np.ndarray
    original_id: np.ndarray | None = None
    load_stats: LoadStats = field(default_factory=LoadStats, compare=False)

    @property
    def vertex_count(self) -> int:
        return len(self.offsets) - 1

    @property
    def edge_count(self) -> int:
        return len(self.targets) // 2

    def __len__(self) -> int:
        return self.vertex_count

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.offsets, other.offsets) and np.array_equal(
            self.targets, other.targets
        )

    __hash__ = None  # type: ignore[assignment]

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor slices as Python tuples; the hot loops iterate these."""
        off = self.offsets.tolist()
        tgt = self.targets.tolist()
        return tuple(tuple(tgt[off[v] : off[v + 1]]) for v in range(len(off) - 1))

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adj)

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def edges(self) -> list[tuple[int, int]]:
        """Each undirected edge once, as ``(u, v)`` with ``u < v``."""
        return [(u, v) for u, nb in enumerate(self.adj) for v in nb if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adj[u]
        i = bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def external_id(self, v: int) -> int:
        if self.original_id is None:
            return v
        return int(self.original_id[v])

    def external_ids(self, vs: Iterable[int]) -> list[int]:
        return sorted(self.external_id(v) for v in vs)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        original_id: np.ndarray | None = None,
    ) -> Graph:
        """Build from an edge iterable over ids in ``0..n-1``.

        Self-loops are dropped, reversed and repeated pairs collapse into one
        undirected edge.
        """
        arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        return cls._from_array(n, arr, original_id)

    @classmethod
    def from_adjacency(cls, lists: Sequence[Iterable[int]]) -> Graph:
        edges = [(u, v) for u, nb in enumerate(lists) for v in nb]
        return cls.from_edges(len(lists), edges)

    @classmethod
    def _from_array(
        cls,
        n: int,
        arr: np.ndarray,
        original_id: np.ndarray | None = None,
        data_lines: int = 0,
    ) -> Graph:
        if n > MAX_VERTICES:
            raise ValueError(f"{n} vertices exceed the 32-bit id space")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise ValueError("edge endpoint out of range")
        loops = arr[:, 0] == arr[:, 1]
        n_loops = int(loops.sum())
        arr = arr[~loops]
        both = np.concatenate([arr, arr[:, ::-1]]) if len(arr) else arr
        if len(both):
            both = np.unique(both, axis=0)
        n_dupes = len(arr) - len(both) // 2
        counts = np.bincount(both[:, 0], minlength=n) if len(both) else np.zeros(n, np.int64)
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        targets = both[:, 1].astype(np.uint32) if len(both) else np.zeros(0, np.uint32)
        stats = LoadStats(data_lines=data_lines, self_loops=n_loops, duplicate_edges=n_dupes)
        return cls(offsets, targets, original_id, stats)


def neighbors(g: Graph, v: int) -> tuple[int, ...]:
    if not 0 <= v < g.vertex_count:
        raise IndexError(f"vertex {v} out of range for {g.vertex_count} vertices")
    return g.adj[v]


def intersect_sorted(a: VertexSet, b: VertexSet) -> list[int]:
    """Intersection of two ascending sequences.

    Merge join; switches to binary search into the longer side when the
    lengths are lopsided, which keeps small-candidate-set refinements against
    hub neighborhoods cheap.
    """
    la, lb = len(a), len(b)
    if la > lb:
        a, b, la, lb = b, a, lb, la
    if la == 0:
        return []
    out = []
    if lb > 8 * la:
        lo = 0
        for x in a:
            lo = bisect_left(b, x, lo)
            if lo == lb:
                break
            if b[lo] == x:
                out.append(x)
                lo += 1
        return out
    i = j = 0
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def count_common(a: VertexSet, b: VertexSet) -> int:
    return len(intersect_sorted(a, b))


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph on ``s`` relabelled ``0..len(s)-1`` in ascending order of ``s``.

    ``original_id`` of the result maps each new id to the id in ``g``'s own
    source space (or to the id in ``g`` when ``g`` has none).
    """
    s = list(s)
    pos = {v: i for i, v in enumerate(s)}
    lists = [[pos[w] for w in intersect_sorted(s, g.adj[v])] for v in s]
    sub = Graph.from_adjacency(lists)
    if g.original_id is not None:
        rel = g.original_id[np.asarray(s, dtype=np.int64)] if s else np.zeros(0, np.int64)
    else:
        rel = np.asarray(s, dtype=np.int64)
    return Graph(sub.offsets, sub.targets, rel)


@dataclass(frozen=True)
class VertexOrder:
    """A vertex permutation; ``perm[i]`` is the vertex at position ``i``."""

    perm: tuple[int, ...]
    kind: str = "identity"

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("order is not a permutation of 0..n-1")

    def __len__(self) -> int:
        return len(self.perm)

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.perm)
        for i, v in enumerate(self.perm):
            pos[v] = i
        return tuple(pos)

    @classmethod
    def identity(cls, n: int) -> VertexOrder:
        return cls(tuple(range(n)), "identity")

    @classmethod
    def random(cls, n: int, rng: random.Random) -> VertexOrder:
        perm = list(range(n))
        rng.shuffle(perm)
        return cls(tuple(perm), "random")


def relabel(g: Graph, order: VertexOrder) -> Graph:
    """Rename vertices so that position in ``order`` becomes the new id."""
    if len(order) != g.vertex_count:
        raise ValueError("order length does not match vertex count")
    pos = order.position
    lists = [sorted(pos[w] for w in g.adj[v]) for v in order.perm]
    new = Graph.from_adjacency(lists)
    perm = np.asarray(order.perm, dtype=np.int64)
    if g.original_id is not None:
        orig = g.original_id[perm] if len(perm) else g.original_id[:0]
    else:
        orig = perm
    return Graph(new.offsets, new.targets, orig, g.load_stats)


# -- loading ------------------------------------------------------------------


def parse_edge_list(stream: TextIO | str) -> Graph:
    """Parse a SNAP-style edge list.

    ``#`` lines are comments and blank lines are ignored; every other line must
    hold exactly two non-negative integer ids.  Ids are compacted to
    ``0..n-1`` in ascending source-id order.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    us: list[int] = []
    vs: list[int] = []
    data_lines = 0
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, line.rstrip("\n"), "expected two vertex ids")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, line.rstrip("\n"), "non-integer vertex id") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(lineno, line.rstrip("\n"), "negative vertex id")
        us.append(u)
        vs.append(v)
        data_lines += 1
    if not us:
        return Graph(np.zeros(1, np.int64), np.zeros(0, np.uint32), np.zeros(0, np.int64))
    raw = np.stack([np.asarray(us, dtype=np.uint64), np.asarray(vs, dtype=np.uint64)], axis=1)
    ids, compact = np.unique(raw, return_inverse=True)
    compact = compact.reshape(-1, 2).astype(np.int64)
    return Graph._from_array(len(ids), compact, ids.astype(np.int64), data_lines)


def load_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph) -> str:
    return "".join(f"{g.external_id(u)} {g.external_id(v)}\n" for u, v in g.edges())


# -- generators used by tests, scripts and the CLI ------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_multipartite(*sizes: int) -> Graph:
    part = [p for p, size in enumerate(sizes) for _ in range(size)]
    n = len(part)
    return Graph.from_edges(
        n, ((u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v])
    )


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )
