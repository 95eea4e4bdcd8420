"""Packing solvers.

``pack_incremental`` inserts the edges of H one at a time in degeneracy
order, keeping the mapping a packing of the partial H. Each insertion
creates at most one conflict; it is repaired by swapping the conflicting
endpoint with a vertex that no link reaches. When the degree-sum condition
holds such a vertex always exists.

``pack_exact`` is a complete backtracking search used as the oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .conditions import degss_holds
from .graph import Graph, SizeMismatchError, _bits, degeneracy, degree_sequence
from .packing import (
    Mapping,
    _conflicts,
    _link_bound,
    _linked_mask,
    _links,
    is_packing,
)

__all__ = [
    "PackStatus",
    "PackStats",
    "PackOutcome",
    "DEFAULT_BUDGET",
    "pack_incremental",
    "pack_exact",
    "certify_nonpacking_star_matching",
]

DEFAULT_BUDGET = 10**8


class PackStatus(str, enum.Enum):
    PACKED = "Packed"
    NOT_GUARANTEED = "NotGuaranteed"
    IMPOSSIBLE = "Impossible"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass
class PackStats:
    edges_inserted: int = 0
    swaps: int = 0
    nodes: int = 0


@dataclass(frozen=True)
class PackOutcome:
    status: PackStatus
    mapping: Mapping | None = None
    stats: PackStats = field(default_factory=PackStats)

    @property
    def packed(self) -> bool:
        return self.status is PackStatus.PACKED


def _same_n(g: Graph, h: Graph) -> int:
    if g.n != h.n:
        raise SizeMismatchError(f"graphs have different orders: {g.n} and {h.n}")
    return g.n


def _packed(g: Graph, h: Graph, fwd: list[int], stats: PackStats) -> PackOutcome:
    m = Mapping.from_forward(fwd)
    if not is_packing(g, h, m):
        raise RuntimeError("solver produced a mapping that is not a packing")
    return PackOutcome(PackStatus.PACKED, m, stats)


def pack_incremental(g: Graph, h: Graph, *, check: bool = False) -> PackOutcome:
    """Constructive packing by single-swap repair.

    With ``check=True`` every step is audited: the partial H stays
    degree-dominated by H, each conflict is unique and has two self-links,
    the link bound is below ``n`` whenever the degree-sum condition holds,
    and each swap leaves no conflict. A failed audit raises AssertionError.
    """
    n = _same_n(g, h)
    stats = PackStats()
    order = degeneracy(h).ordering
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    gm = g.masks
    hm = [0] * n
    fwd = list(range(n))
    inv = list(range(n))
    if check:
        guaranteed = degss_holds(g, h).verdict
        final_degrees = degree_sequence(h)

    for v in order:
        for w in sorted(w for w in h.adj[v] if pos[w] < pos[v]):
            hm[v] |= 1 << w
            hm[w] |= 1 << v
            stats.edges_inserted += 1
            u, x = inv[v], inv[w]
            if check:
                partial = sorted((m.bit_count() for m in hm), reverse=True)
                assert all(a <= b for a, b in zip(partial, final_degrees))
            if not (gm[u] >> x) & 1:
                continue
            if check:
                assert _conflicts(gm, hm, fwd) == [(min(u, x), max(u, x))]
                selfs = sum(1 for link in _links(gm, hm, fwd, inv, u) if link.endpoint == u)
                assert selfs >= 2
                if guaranteed:
                    assert _link_bound(gm, hm, fwd, inv, u) < n
            reach = _linked_mask(gm, hm, fwd, inv, u) | (1 << u) | (1 << x)
            free = ((1 << n) - 1) & ~reach
            if not free:
                return PackOutcome(PackStatus.NOT_GUARANTEED, None, stats)
            y = (free & -free).bit_length() - 1
            fwd[u], fwd[y] = fwd[y], fwd[u]
            inv[fwd[u]] = u
            inv[fwd[y]] = y
            stats.swaps += 1
            if check:
                assert not _conflicts(gm, hm, fwd)

    return _packed(g, h, fwd, stats)


def pack_exact(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> PackOutcome:
    """Decide packability by backtracking.

    G-vertices are assigned in order of decreasing degree (ties by index),
    each to the smallest admissible H-vertex first, so the first witness
    found is the lexicographically least in that order. An assignment is
    pruned when it puts a G-edge on an H-edge, when ``deg_G(v)`` exceeds the
    complement degree of the image, or when it leaves some unassigned
    G-neighbor without a candidate.
    """
    n = _same_n(g, h)
    stats = PackStats()
    if n == 0:
        return _packed(g, h, [], stats)
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    hdeg = h.degrees()
    allowed = [
        sum(1 << w for w in range(n) if g.degree(v) <= n - 1 - hdeg[w]) for v in range(n)
    ]
    if any(a == 0 for a in allowed):
        return PackOutcome(PackStatus.IMPOSSIBLE, None, stats)
    gm = g.masks
    hm = h.masks
    forb = [0] * n
    fwd = [-1] * n
    assigned = 0  # bitmask of assigned G-vertices

    class _Budget(Exception):
        pass

    def search(k: int, used: int) -> bool:
        nonlocal assigned
        if k == n:
            return True
        v = order[k]
        cand = allowed[v] & ~used & ~forb[v]
        open_nbrs = list(_bits(gm[v] & ~assigned))
        for w in _bits(cand):
            stats.nodes += 1
            if stats.nodes > budget:
                raise _Budget
            saved = [forb[b] for b in open_nbrs]
            used2 = used | (1 << w)
            ok = True
            for b in open_nbrs:
                forb[b] |= hm[w]
                if not allowed[b] & ~used2 & ~forb[b]:
                    ok = False
            if ok:
                fwd[v] = w
                assigned |= 1 << v
                if search(k + 1, used2):
                    return True
                assigned &= ~(1 << v)
                fwd[v] = -1
            for b, s in zip(open_nbrs, saved):
                forb[b] = s
        return False

    try:
        found = search(0, 0)
    except _Budget:
        return PackOutcome(PackStatus.BUDGET_EXCEEDED, None, stats)
    if found:
        return _packed(g, h, fwd, stats)
    return PackOutcome(PackStatus.IMPOSSIBLE, None, stats)


def certify_nonpacking_star_matching(g: Graph, h: Graph) -> bool:
    """True when ``g`` is a perfect matching and ``h`` has a vertex adjacent
    to all others. Then the preimage of that vertex and its G-partner always
    collide, so the pair cannot pack."""
    if g.n != h.n or g.n < 2:
        return False
    if any(d != 1 for d in g.degrees()):
        return False
    return any(d == h.n - 1 for d in h.degrees())
