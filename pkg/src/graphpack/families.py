"""Named extremal families, forest-to-tree augmentation, and small-graph
enumeration for the survey."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator

from .graph import (
    Graph,
    GraphError,
    UnsupportedSizeError,
    canonical_form,
    canonical_key,
    components,
    excess_leaves,
    from_masks,
    is_forest,
    new_graph,
)

__all__ = [
    "FamilyTag",
    "FamilySpec",
    "generate",
    "matching",
    "star",
    "complete_bipartite",
    "clique_plus_isolated",
    "sharpness_pairs",
    "augment_forest_to_tree",
    "enumerate_labeled_forests",
    "enumerate_graphs_bounded_degree",
    "enumerate_graphs",
    "enumerate_forests",
]


class FamilyTag(str, enum.Enum):
    MATCHING = "Matching"
    STAR = "Star"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    CLIQUE_PLUS_ISOLATED = "CliquePlusIsolated"


@dataclass(frozen=True)
class FamilySpec:
    """``param`` is ``s`` for CompleteBipartite and ``k`` for
    CliquePlusIsolated; unused otherwise."""

    tag: FamilyTag
    n: int
    param: int | None = None

    def validate(self) -> None:
        n, p = self.n, self.param
        if n < 1:
            raise GraphError(f"{self.tag.value} needs n >= 1")
        if self.tag is FamilyTag.MATCHING and n % 2:
            raise GraphError(f"Matching needs even n, got {n}")
        if self.tag is FamilyTag.COMPLETE_BIPARTITE and (p is None or not 1 <= p <= n - 1):
            raise GraphError(f"CompleteBipartite needs 1 <= s <= n-1, got s={p}, n={n}")
        if self.tag is FamilyTag.CLIQUE_PLUS_ISOLATED and (p is None or not 1 <= p <= n):
            raise GraphError(f"CliquePlusIsolated needs 1 <= k <= n, got k={p}, n={n}")


def generate(spec: FamilySpec) -> Graph:
    spec.validate()
    n, p = spec.n, spec.param
    if spec.tag is FamilyTag.MATCHING:
        return new_graph(n, ((i, i + 1) for i in range(0, n, 2)))
    if spec.tag is FamilyTag.STAR:
        return new_graph(n, ((0, i) for i in range(1, n)))
    if spec.tag is FamilyTag.COMPLETE_BIPARTITE:
        return new_graph(n, ((a, b) for a in range(p) for b in range(p, n)))
    return new_graph(n, itertools.combinations(range(p), 2))


def matching(n: int) -> Graph:
    return generate(FamilySpec(FamilyTag.MATCHING, n))


def star(n: int) -> Graph:
    return generate(FamilySpec(FamilyTag.STAR, n))


def complete_bipartite(s: int, t: int) -> Graph:
    return generate(FamilySpec(FamilyTag.COMPLETE_BIPARTITE, s + t, s))


def clique_plus_isolated(k: int, n: int) -> Graph:
    return generate(FamilySpec(FamilyTag.CLIQUE_PLUS_ISOLATED, n, k))


def sharpness_pairs(n: int) -> list[tuple[str, Graph, Graph]]:
    """``(label, G, H)`` for every listed family that exists at order ``n``.

    Each pair meets the degree-sum condition with equality and does not
    pack. ``H ⊇ K_{n/2+1}`` and ``G ⊇ K_{n/2+1}`` use the minimal member.
    """
    if n < 2 or n % 2:
        return []
    half = n // 2
    m = matching(n)
    big = clique_plus_isolated(half + 1, n)
    out = [
        ("H=matching,G=clique", big, m),
        ("H=clique,G=matching", m, big),
    ]
    if half % 2:
        kbal = complete_bipartite(half, half)
        out.append(("H=matching,G=Kn/2,n/2", kbal, m))
        out.append(("H=Kn/2,n/2,G=matching", m, kbal))
    for s in range(1, n, 2):
        out.append((f"H=K{s},{n - s},G=matching", m, complete_bipartite(s, n - s)))
    return out


def augment_forest_to_tree(f: Graph, *, check: bool = True) -> tuple[Graph, list[tuple[int, int]]]:
    """Join a forest into a spanning tree without changing its excess leaves.

    Leaves of distinct nontrivial components are joined first; isolated
    vertices are then hung off a current leaf one at a time. An edgeless
    input is bootstrapped with the edge ``0-1``. With ``check`` the excess
    leaves are recomputed after every added edge.

    Returns the tree and the added edges in insertion order.
    Raises GraphError for ``n < 2`` and NotAForestError for a non-forest.
    """
    if f.n < 2:
        raise GraphError("augmentation needs at least two vertices")
    target = excess_leaves(f)
    masks = list(f.masks)
    added: list[tuple[int, int]] = []

    def add(a: int, b: int) -> None:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
        added.append((min(a, b), max(a, b)))
        if check:
            got = excess_leaves(from_masks(masks))
            assert got == target, f"excess leaves changed {target} -> {got}"

    if f.num_edges() == 0:
        add(0, 1)
    while True:
        g = from_masks(masks)
        nontrivial = [c for c in components(g) if len(c) >= 2]
        if len(nontrivial) <= 1:
            break
        a = min(v for v in nontrivial[0] if g.degree(v) == 1)
        b = min(v for v in nontrivial[1] if g.degree(v) == 1)
        add(a, b)
    for v in range(f.n):
        if masks[v] == 0:
            g = from_masks(masks)
            leaf = min(w for w in range(f.n) if g.degree(w) == 1)
            add(leaf, v)
    tree = from_masks(masks)
    if check:
        assert is_forest(tree) and len(components(tree)) == 1
    return tree, added


LABELED_FOREST_MAX_N = 7


def enumerate_labeled_forests(n: int) -> Iterator[Graph]:
    """Every acyclic edge subset of ``K_n`` exactly once, ``n <= 7``.

    Edges of ``K_n`` are decided in lexicographic order; an edge is only
    taken when its endpoints lie in different components so far.
    """
    if n > LABELED_FOREST_MAX_N:
        raise UnsupportedSizeError(f"labeled forest enumeration supports n <= {LABELED_FOREST_MAX_N}")
    pairs = list(itertools.combinations(range(n), 2))

    def rec(i: int, comp: tuple[int, ...], chosen: list[tuple[int, int]]) -> Iterator[Graph]:
        if i == len(pairs):
            yield new_graph(n, chosen)
            return
        yield from rec(i + 1, comp, chosen)
        a, b = pairs[i]
        ca, cb = comp[a], comp[b]
        if ca != cb:
            merged = tuple(ca if c == cb else c for c in comp)
            chosen.append(pairs[i])
            yield from rec(i + 1, merged, chosen)
            chosen.pop()

    yield from rec(0, tuple(range(n)), [])


GRAPH_ENUM_MAX_N = 8


def _extend_classes(n: int, admissible) -> list[Graph]:
    """Isomorphism classes on ``n`` vertices of a vertex-deletion-closed
    family, built by adding one vertex to each class on ``n - 1`` vertices.

    ``admissible(g, nbrs)`` decides whether a new vertex adjacent to the
    vertex set ``nbrs`` may be added to ``g``.
    """
    classes = [from_masks([])]
    for k in range(1, n + 1):
        seen: dict[bytes, Graph] = {}
        for g in classes:
            for r in range(k):
                for nbrs in itertools.combinations(range(k - 1), r):
                    if not admissible(g, nbrs):
                        continue
                    masks = list(g.masks) + [0]
                    for w in nbrs:
                        masks[w] |= 1 << (k - 1)
                        masks[k - 1] |= 1 << w
                    cand = from_masks(masks)
                    key = canonical_key(cand)
                    if key not in seen:
                        seen[key] = canonical_form(cand)
        classes = [seen[key] for key in sorted(seen)]
    return classes


def enumerate_graphs_bounded_degree(n: int, dmax: int) -> list[Graph]:
    """One canonical representative per isomorphism class of graphs on
    ``n <= 8`` vertices with maximum degree at most ``dmax``, sorted by
    canonical key."""
    if n > GRAPH_ENUM_MAX_N:
        raise UnsupportedSizeError(f"graph enumeration supports n <= {GRAPH_ENUM_MAX_N}")

    def admissible(g: Graph, nbrs: tuple[int, ...]) -> bool:
        return len(nbrs) <= dmax and all(g.degree(w) < dmax for w in nbrs)

    return _extend_classes(n, admissible)


def enumerate_graphs(n: int) -> list[Graph]:
    return enumerate_graphs_bounded_degree(n, max(n - 1, 0))


def enumerate_forests(n: int) -> list[Graph]:
    """Forests on ``n <= 8`` vertices up to isomorphism. Every forest has a
    vertex of degree at most one, so attaching a new vertex to at most one
    old vertex reaches every class."""
    if n > GRAPH_ENUM_MAX_N:
        raise UnsupportedSizeError(f"forest enumeration supports n <= {GRAPH_ENUM_MAX_N}")
    return _extend_classes(n, lambda g, nbrs: len(nbrs) <= 1)
