"""Simple undirected graphs on vertices ``0..n-1`` and the metrics the packing
conditions are built from: degree sequences, degeneracy, forest statistics.

Each vertex keeps both a frozenset of neighbors and an integer bitmask of
the same neighborhood. Python integers are unbounded, so the bitmask form
works for every ``n``; the search and link code use it exclusively.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

import numpy as np

__all__ = [
    "GraphError",
    "NotAForestError",
    "SizeMismatchError",
    "UnsupportedSizeError",
    "Graph",
    "DegeneracyResult",
    "new_graph",
    "from_masks",
    "degree_sequence",
    "degeneracy",
    "is_forest",
    "components",
    "excess_leaves",
    "leaves_and_nontrivial_components",
    "complement",
    "relabel",
    "canonical_key",
    "canonical_form",
    "CANONICAL_MAX_N",
]

CANONICAL_MAX_N = 10


class GraphError(ValueError):
    """Invalid graph construction or an operation outside its domain."""


class NotAForestError(GraphError):
    pass


class SizeMismatchError(GraphError):
    pass


class UnsupportedSizeError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)
    masks: tuple[int, ...] = field(repr=False, compare=False)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def iter_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph on ``n`` vertices. Repeated edges are merged.

    Raises GraphError for a negative ``n``, an endpoint outside ``[0, n)``,
    or a loop.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return from_masks(masks)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_masks(masks: Iterable[int]) -> Graph:
    """Build a graph from per-vertex neighbor bitmasks (assumed symmetric)."""
    masks = tuple(masks)
    adj = tuple(frozenset(_bits(m)) for m in masks)
    return Graph(len(masks), adj, masks)


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees(), reverse=True)


class DegeneracyResult(NamedTuple):
    c: int
    ordering: list[int]


def degeneracy(g: Graph) -> DegeneracyResult:
    """Min-degree peeling; ties go to the smallest index.

    The returned ordering is the reverse of the removal order, so every
    vertex has at most ``c`` neighbors earlier in it.
    """
    deg = g.degrees()
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    removal: list[int] = []
    c = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        removal.append(v)
        c = max(c, d)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    removal.reverse()
    return DegeneracyResult(c, removal)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_forest(g: Graph) -> bool:
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in g.iter_edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _require_forest(f: Graph) -> None:
    if not is_forest(f):
        raise NotAForestError("graph contains a cycle")


def excess_leaves(f: Graph) -> int:
    """Sum over vertices of ``max(deg - 2, 0)``; zero exactly for linear forests."""
    _require_forest(f)
    return sum(max(d - 2, 0) for d in f.degrees())


def leaves_and_nontrivial_components(f: Graph) -> tuple[int, int]:
    _require_forest(f)
    leaves = sum(1 for d in f.degrees() if d == 1)
    nontrivial = sum(1 for comp in components(f) if len(comp) >= 2)
    return leaves, nontrivial


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return from_masks(full & ~m & ~(1 << v) for v, m in enumerate(g.masks))


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v`` in ``g``."""
    return new_graph(g.n, ((perm[u], perm[v]) for u, v in g.iter_edges()))


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)


@lru_cache(maxsize=None)
def _triangle(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    iu, ju = np.triu_indices(n, k=1)
    m = len(iu)
    weights = (np.int64(1) << np.arange(m - 1, -1, -1, dtype=np.int64)) if m else np.zeros(0, np.int64)
    return iu, ju, weights


_CHUNK = 1 << 16


def _canonical(g: Graph) -> tuple[int, np.ndarray]:
    n = g.n
    if n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(f"canonical_key supports n <= {CANONICAL_MAX_N}, got {n}")
    if n <= 1:
        return 0, np.arange(n)
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.iter_edges():
        a[u, v] = a[v, u] = 1
    iu, ju, weights = _triangle(n)
    perms = _perm_table(n)
    best_val = None
    best_perm = None
    for start in range(0, len(perms), _CHUNK):
        p = perms[start : start + _CHUNK]
        # bit k of a candidate is adjacency of (p[iu[k]], p[ju[k]]), MSB first
        vals = a[p[:, iu], p[:, ju]] @ weights
        i = int(np.argmin(vals))
        if best_val is None or vals[i] < best_val:
            best_val = int(vals[i])
            best_perm = p[i]
    return best_val, best_perm


def canonical_key(g: Graph) -> bytes:
    """Isomorphism-invariant key: the lexicographically least upper-triangle
    adjacency bitstring over every vertex permutation, prefixed by ``n``.

    Brute force over ``n!`` permutations; limited to ``n <= 10``.
    """
    val, _ = _canonical(g)
    m = g.n * (g.n - 1) // 2
    return bytes([g.n]) + val.to_bytes((m + 7) // 8, "big")


def canonical_form(g: Graph) -> Graph:
    """The relabeling of ``g`` whose adjacency bitstring is ``canonical_key``."""
    _, p = _canonical(g)
    # new vertex i is old vertex p[i]
    inv = [0] * g.n
    for i, old in enumerate(p):
        inv[int(old)] = i
    return relabel(g, inv)
