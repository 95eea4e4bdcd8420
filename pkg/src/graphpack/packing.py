"""Bijections between two vertex sets, their conflicts, and the link/swap
machinery used to repair a single conflict.

A mapping ``f`` sends G-vertices to H-vertices. Overlaying the two edge sets
through ``f`` gives a two-colored multigraph on ``V(G)``; it is never built
explicitly. A *link* from ``u`` is a path ``u - mid - endpoint`` with one
G-edge and one H-edge: GH when the G-edge touches ``u``, HG otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import Graph, GraphError, SizeMismatchError, _bits

__all__ = [
    "Mapping",
    "Conflict",
    "Quasipacking",
    "LinkKind",
    "Link",
    "identity",
    "conflicts",
    "is_packing",
    "make_quasipacking",
    "links_from",
    "link_free_targets",
    "swap",
    "link_count_bound",
]


@dataclass(frozen=True)
class Mapping:
    forward: tuple[int, ...]
    inverse: tuple[int, ...]

    @classmethod
    def from_forward(cls, forward: Sequence[int]) -> Mapping:
        forward = tuple(forward)
        n = len(forward)
        inverse = [-1] * n
        for v, w in enumerate(forward):
            if not 0 <= w < n or inverse[w] != -1:
                raise GraphError(f"not a permutation of 0..{n - 1}: {list(forward)}")
            inverse[w] = v
        return cls(forward, tuple(inverse))

    @property
    def n(self) -> int:
        return len(self.forward)

    def __call__(self, v: int) -> int:
        return self.forward[v]


def identity(n: int) -> Mapping:
    r = tuple(range(n))
    return Mapping(r, r)


@dataclass(frozen=True, order=True)
class Conflict:
    u: int
    x: int

    def __post_init__(self) -> None:
        if self.u >= self.x:
            raise GraphError(f"conflict must be stored with u < x, got ({self.u}, {self.x})")


@dataclass(frozen=True)
class Quasipacking:
    """A mapping with exactly one conflicting pair.

    ``source`` is the conflict endpoint that links are counted from. It
    defaults to ``conflict.u``; the incremental solver sets it to the
    endpoint whose image is the newly processed H-vertex.
    """

    mapping: Mapping
    conflict: Conflict
    source: int

    @property
    def other(self) -> int:
        return self.conflict.x if self.source == self.conflict.u else self.conflict.u


class LinkKind(str, enum.Enum):
    GH = "GH"
    HG = "HG"


class Link(NamedTuple):
    source: int
    endpoint: int
    kind: LinkKind
    mid: int


def _check_sizes(g: Graph, h: Graph, m: Mapping | None = None) -> None:
    if g.n != h.n:
        raise SizeMismatchError(f"graphs have different orders: {g.n} and {h.n}")
    if m is not None and m.n != g.n:
        raise SizeMismatchError(f"mapping has size {m.n}, graphs have {g.n}")


def _conflicts(gmasks: Sequence[int], hmasks: Sequence[int], fwd: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for u, mu in enumerate(gmasks):
        hu = hmasks[fwd[u]]
        for v in _bits(mu >> (u + 1)):
            v += u + 1
            if (hu >> fwd[v]) & 1:
                out.append((u, v))
    return out


def conflicts(g: Graph, h: Graph, m: Mapping) -> list[Conflict]:
    """Every G-edge ``ux`` whose image ``f(u)f(x)`` is an H-edge, sorted."""
    _check_sizes(g, h, m)
    return [Conflict(u, x) for u, x in _conflicts(g.masks, h.masks, m.forward)]


def is_packing(g: Graph, h: Graph, m: Mapping) -> bool:
    return not conflicts(g, h, m)


def make_quasipacking(g: Graph, h: Graph, m: Mapping, source: int | None = None) -> Quasipacking:
    """Validate that ``m`` has exactly one conflict and wrap it.

    Raises GraphError if the number of conflicts is not one or ``source``
    is not an endpoint of the conflict.
    """
    found = conflicts(g, h, m)
    if len(found) != 1:
        raise GraphError(f"a quasipacking needs exactly one conflict, found {len(found)}")
    c = found[0]
    if source is None:
        source = c.u
    elif source not in (c.u, c.x):
        raise GraphError(f"source {source} is not an endpoint of conflict ({c.u}, {c.x})")
    return Quasipacking(m, c, source)


def _links(
    gmasks: Sequence[int],
    hmasks: Sequence[int],
    fwd: Sequence[int],
    inv: Sequence[int],
    u: int,
) -> list[Link]:
    out = []
    for y in _bits(gmasks[u]):
        for z in _bits(hmasks[fwd[y]]):
            out.append(Link(u, inv[z], LinkKind.GH, y))
    for z in _bits(hmasks[fwd[u]]):
        mid = inv[z]
        for w in _bits(gmasks[mid]):
            out.append(Link(u, w, LinkKind.HG, mid))
    return out


def _linked_mask(
    gmasks: Sequence[int],
    hmasks: Sequence[int],
    fwd: Sequence[int],
    inv: Sequence[int],
    u: int,
) -> int:
    # Union of link endpoints from u, as a bitmask over G-vertices.
    reach = 0
    for y in _bits(gmasks[u]):
        for z in _bits(hmasks[fwd[y]]):
            reach |= 1 << inv[z]
    for z in _bits(hmasks[fwd[u]]):
        reach |= gmasks[inv[z]]
    return reach


def links_from(g: Graph, h: Graph, m: Mapping, u: int) -> list[Link]:
    """All links from ``u`` counted with multiplicity, self-links included.

    GH-links come first (by G-neighbor, then H-neighbor of its image), then
    HG-links (by H-neighbor of ``f(u)``, then G-neighbor of its preimage).
    """
    _check_sizes(g, h, m)
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    return _links(g.masks, h.masks, m.forward, m.inverse, u)


def link_free_targets(g: Graph, h: Graph, qp: Quasipacking) -> list[int]:
    """Vertices other than the conflict endpoints that no link from the
    source reaches, ascending. Swapping the source with any of them gives a
    packing."""
    _check_sizes(g, h, qp.mapping)
    m = qp.mapping
    reach = _linked_mask(g.masks, h.masks, m.forward, m.inverse, qp.source)
    reach |= (1 << qp.conflict.u) | (1 << qp.conflict.x)
    return [y for y in range(g.n) if not (reach >> y) & 1]


def swap(m: Mapping, u: int, y: int) -> Mapping:
    """Exchange the images of ``u`` and ``y``."""
    if u == y:
        raise GraphError("swap needs two distinct vertices")
    fwd = list(m.forward)
    inv = list(m.inverse)
    fwd[u], fwd[y] = fwd[y], fwd[u]
    inv[fwd[u]] = u
    inv[fwd[y]] = y
    return Mapping(tuple(fwd), tuple(inv))


def _link_bound(
    gmasks: Sequence[int],
    hmasks: Sequence[int],
    fwd: Sequence[int],
    inv: Sequence[int],
    u: int,
) -> int:
    gh = sum(hmasks[fwd[y]].bit_count() for y in _bits(gmasks[u]))
    hg = sum(gmasks[inv[z]].bit_count() for z in _bits(hmasks[fwd[u]]))
    return gh + hg


def link_count_bound(g: Graph, h: Graph, qp: Quasipacking) -> tuple[int, int]:
    """``(number of links from the source, upper bound)`` where the bound is
    the sum of H-degrees of the images of the source's G-neighbors plus the
    G-degrees of the preimages of the source image's H-neighbors."""
    m = qp.mapping
    observed = len(links_from(g, h, m, qp.source))
    bound = _link_bound(g.masks, h.masks, m.forward, m.inverse, qp.source)
    return observed, bound
