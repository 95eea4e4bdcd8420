"""Exhaustive small-order surveys of non-packing pairs.

Scopes:

``theorem5``
    Every pair (G, F), F a forest, with ``3 Delta(G) + excess(F) <= n``.
    All non-packing pairs are reported.
``question1``
    Pairs meeting the degree-sum condition with equality, ``lhs == n``,
    that do not pack. Each one is tagged with the listed extremal family
    it belongs to, or ``none``.
``question2``
    Pairs (G, F) with ``3 Delta(G) + excess(F) == n + 1`` and either ``n``
    odd or ``Delta(G) >= 2`` that do not pack.

Pairs are taken up to isomorphism. Both enumeration and output order are
deterministic, so a report is byte-identical across runs.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .conditions import degss_lhs, is_perfect_matching
from .families import (
    enumerate_forests,
    enumerate_graphs,
    enumerate_graphs_bounded_degree,
    sharpness_pairs,
)
from .graph import Graph, canonical_form, canonical_key, components, excess_leaves, new_graph
from .solver import DEFAULT_BUDGET, PackStatus, pack_exact

__all__ = [
    "SCOPES",
    "EXHAUSTIVE_MAX_N",
    "SAMPLED_MAX_N",
    "SurveyError",
    "Finding",
    "SurveyResult",
    "describe",
    "candidate_pairs",
    "run_survey",
    "format_report",
]

SCOPES = ("theorem5", "question1", "question2")
EXHAUSTIVE_MAX_N = 6
SAMPLED_MAX_N = 8


class SurveyError(ValueError):
    pass


@dataclass(frozen=True)
class Finding:
    g: Graph
    h: Graph
    lhs: int
    status: PackStatus
    family: str | None = None


@dataclass
class SurveyResult:
    scope: str
    n: int
    examined: int
    findings: list[Finding] = field(default_factory=list)
    sampled: bool = False
    seed: int = 0

    @property
    def nonpacking(self) -> list[Finding]:
        return [f for f in self.findings if f.status is PackStatus.IMPOSSIBLE]

    @property
    def undecided(self) -> list[Finding]:
        return [f for f in self.findings if f.status is PackStatus.BUDGET_EXCEEDED]


def _component_name(g: Graph, comp: list[int]) -> str:
    k = len(comp)
    degs = sorted((g.degree(v) for v in comp), reverse=True)
    m = sum(degs) // 2
    if k == 1:
        return "K1"
    if m == k * (k - 1) // 2:
        return f"K{k}"
    if m == k - 1:
        if degs[0] <= 2:
            return f"P{k}"
        if degs[0] == k - 1:
            return f"K1,{k - 1}"
        return "T[" + "".join(map(str, degs)) + "]"
    if all(d == 2 for d in degs):
        return f"C{k}"
    return "G[" + "".join(map(str, degs)) + "]"


def describe(g: Graph) -> str:
    """Short name built from component names, e.g. ``3K2`` or ``P4+2K1``."""
    if g.n == 0:
        return "K0"
    counts = Counter(_component_name(g, c) for c in components(g))
    parts = sorted(counts.items(), key=lambda kv: (kv[0] == "K1", kv[0]))
    return "+".join(name if c == 1 else f"{c}{name}" for name, c in parts)


def _has_clique(g: Graph, k: int) -> bool:
    for sub in itertools.combinations(range(g.n), k):
        if all(g.has_edge(a, b) for a, b in itertools.combinations(sub, 2)):
            return True
    return False


def _listed_family(g: Graph, h: Graph) -> str | None:
    n = g.n
    if n % 2:
        return None
    key_g, key_h = canonical_key(g), canonical_key(h)
    for label, fg, fh in sharpness_pairs(n):
        if label == "H=matching,G=clique":
            if is_perfect_matching(h) and _has_clique(g, n // 2 + 1):
                return "H=matching,G>=K" + str(n // 2 + 1)
        elif label == "H=clique,G=matching":
            if is_perfect_matching(g) and _has_clique(h, n // 2 + 1):
                return "H>=K" + str(n // 2 + 1) + ",G=matching"
        elif canonical_key(fg) == key_g and canonical_key(fh) == key_h:
            return label
    return None


def _random_graph(n: int, rng: random.Random) -> Graph:
    p = rng.random()
    return new_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def candidate_pairs(
    n: int, scope: str, *, forests_only: bool = False
) -> list[tuple[Graph, Graph, int]]:
    """``(G, H, lhs)`` for every isomorphism-class pair in ``scope``."""
    if scope == "theorem5":
        gs = enumerate_graphs_bounded_degree(n, n // 3)
        fs = [(f, excess_leaves(f)) for f in enumerate_forests(n)]
        return [
            (g, f, 3 * g.max_degree() + ex)
            for g in gs
            for f, ex in fs
            if 3 * g.max_degree() + ex <= n
        ]
    if scope == "question2":
        gs = enumerate_graphs_bounded_degree(n, (n + 1) // 3)
        fs = [(f, excess_leaves(f)) for f in enumerate_forests(n)]
        return [
            (g, f, n + 1)
            for g in gs
            for f, ex in fs
            if 3 * g.max_degree() + ex == n + 1 and (n % 2 == 1 or g.max_degree() >= 2)
        ]
    if scope == "question1":
        gs = enumerate_graphs(n)
        hs = enumerate_forests(n) if forests_only else gs
        out = []
        for g in gs:
            for h in hs:
                lhs, _ = degss_lhs(g, h)
                if lhs == n:
                    out.append((g, h, lhs))
        return out
    raise SurveyError(f"unknown scope {scope!r}")


def _sampled_question1(n: int, sample: int, seed: int, forests_only: bool) -> list[tuple[Graph, Graph, int]]:
    # Random labeled pairs; only those at equality are kept, deduplicated.
    rng = random.Random(seed)
    seen: dict[tuple[bytes, bytes], tuple[Graph, Graph, int]] = {}
    for _ in range(sample):
        g = _random_graph(n, rng)
        if forests_only:
            h = _random_forest(n, rng)
        else:
            h = _random_graph(n, rng)
        lhs, _ = degss_lhs(g, h)
        if lhs == n:
            key = (canonical_key(g), canonical_key(h))
            if key not in seen:
                seen[key] = (canonical_form(g), canonical_form(h), lhs)
    return [seen[k] for k in sorted(seen)]


def _random_forest(n: int, rng: random.Random) -> Graph:
    edges = []
    for v in range(1, n):
        if rng.random() < 0.8:
            edges.append((rng.randrange(v), v))
    return new_graph(n, edges)


def _decide(args: tuple[Graph, Graph, int]) -> PackStatus:
    g, h, budget = args
    return pack_exact(g, h, budget).status


def run_survey(
    n: int,
    scope: str,
    *,
    sample: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    forests_only: bool = False,
) -> SurveyResult:
    """Decide every candidate pair with the exact solver and collect the
    ones that do not pack (or exhaust the budget).

    Exhaustive runs need ``n <= 6``; ``sample`` allows ``n <= 8``.
    """
    if scope not in SCOPES:
        raise SurveyError(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    if n < 1:
        raise SurveyError("survey needs n >= 1")
    limit = SAMPLED_MAX_N if sample is not None else EXHAUSTIVE_MAX_N
    if n > limit:
        raise SurveyError(
            f"n={n} exceeds {limit}" + ("" if sample is not None else "; pass a sample size for n <= 8")
        )
    if sample is not None and scope == "question1" and n > EXHAUSTIVE_MAX_N:
        pairs = _sampled_question1(n, sample, seed, forests_only)
    else:
        pairs = candidate_pairs(n, scope, forests_only=forests_only)
        if sample is not None and sample < len(pairs):
            idx = sorted(random.Random(seed).sample(range(len(pairs)), sample))
            pairs = [pairs[i] for i in idx]

    work = [(g, h, budget) for g, h, _ in pairs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            statuses = list(pool.map(_decide, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        statuses = [_decide(w) for w in work]

    findings = []
    for (g, h, lhs), status in zip(pairs, statuses):
        if status is PackStatus.PACKED:
            continue
        family = _listed_family(g, h) if scope == "question1" else None
        findings.append(Finding(g, h, lhs, status, family))
    findings.sort(key=lambda f: (canonical_key(f.g), canonical_key(f.h)))
    return SurveyResult(scope, n, len(pairs), findings, sample is not None, seed)


def _edges(g: Graph) -> str:
    return ",".join(f"{u}-{v}" for u, v in g.edges()) or "-"


def format_report(result: SurveyResult) -> str:
    head = f"scope={result.scope} n={result.n} pairs={result.examined}"
    if result.sampled:
        head += f" sampled=1 seed={result.seed}"
    head += f" nonpacking={len(result.nonpacking)} undecided={len(result.undecided)}"
    lines = ["# graphpack survey", head]
    for f in result.findings:
        line = (
            f"pair g={describe(f.g)} h={describe(f.h)} lhs={f.lhs} status={f.status.value}"
            f" g_edges={_edges(f.g)} h_edges={_edges(f.h)}"
        )
        if result.scope == "question1":
            line += f" listed={f.family or 'none'}"
        lines.append(line)
    return "\n".join(lines) + "\n"
