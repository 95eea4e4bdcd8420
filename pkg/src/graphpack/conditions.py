"""Sufficient conditions for two graphs to pack, evaluated as numeric reports.

Every report carries its left-hand side, the right-hand side ``n`` and the
intermediate quantities, so a verdict can be recomputed by hand.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import (
    Graph,
    SizeMismatchError,
    components,
    degeneracy,
    degree_sequence,
    excess_leaves,
    is_forest,
    NotAForestError,
)

__all__ = [
    "Theorem",
    "ConditionReport",
    "SharpnessVerdict",
    "sauer_spencer_holds",
    "brandt_holds",
    "brandt_forest_holds",
    "degss_holds",
    "degss_lhs",
    "degss_dominates_checks",
    "onlysharp_report",
    "onlysharpness_classify",
    "is_perfect_matching",
    "is_spanning_star",
    "all_reports",
]


class Theorem(str, enum.Enum):
    SS = "SS"
    BRANDT = "Brandt"
    BRANDT_FOREST = "BrandtForest"
    DEGSS = "DegSS"
    ONLY_SHARP = "OnlySharp"


@dataclass(frozen=True)
class ConditionReport:
    theorem: Theorem
    lhs: int
    rhs: int
    verdict: bool
    detail: dict[str, int] = field(default_factory=dict)

    @property
    def non_strict(self) -> bool:
        return self.theorem is Theorem.ONLY_SHARP

    def consistent(self) -> bool:
        """Recompute lhs and verdict from ``detail``."""
        d = self.detail
        if self.theorem is Theorem.SS:
            lhs = 2 * d["delta_g"] * d["delta_h"]
        elif self.theorem is Theorem.BRANDT:
            lhs = 3 * d["delta_g"] + d["leaves"] - 2
        elif self.theorem in (Theorem.BRANDT_FOREST, Theorem.ONLY_SHARP):
            lhs = 3 * d["delta_g"] + d["excess_leaves"]
        else:
            lhs = d["sum_h_top"] + d["sum_g_top"]
        verdict = lhs <= self.rhs if self.non_strict else lhs < self.rhs
        return lhs == self.lhs and verdict == self.verdict


class SharpnessVerdict(str, enum.Enum):
    PACKS_GUARANTEED = "PacksGuaranteed"
    EXCEPTIONAL_PAIR = "ExceptionalPair"
    HYPOTHESIS_FAILS = "HypothesisFails"


def _same_n(g: Graph, h: Graph) -> int:
    if g.n != h.n:
        raise SizeMismatchError(f"graphs have different orders: {g.n} and {h.n}")
    return g.n


def _require_forest(f: Graph) -> None:
    if not is_forest(f):
        raise NotAForestError("second graph must be a forest")


def sauer_spencer_holds(g: Graph, h: Graph) -> ConditionReport:
    n = _same_n(g, h)
    dg, dh = g.max_degree(), h.max_degree()
    lhs = 2 * dg * dh
    return ConditionReport(
        Theorem.SS, lhs, n, lhs < n,
        {"delta_g": dg, "delta_h": dh, "bec_product": (dg + 1) * (dh + 1)},
    )


def brandt_holds(g: Graph, t: Graph) -> ConditionReport:
    """Tree version: ``3 Delta(G) + leaves(T) - 2 < n``."""
    n = _same_n(g, t)
    _require_forest(t)
    if n >= 1 and len(components(t)) != 1:
        raise NotAForestError("second graph must be a tree")
    leaves = sum(1 for d in t.degrees() if d == 1)
    dg = g.max_degree()
    lhs = 3 * dg + leaves - 2
    return ConditionReport(Theorem.BRANDT, lhs, n, lhs < n, {"delta_g": dg, "leaves": leaves})


def brandt_forest_holds(g: Graph, f: Graph) -> ConditionReport:
    n = _same_n(g, f)
    _require_forest(f)
    dg = g.max_degree()
    ex = excess_leaves(f)
    lhs = 3 * dg + ex
    return ConditionReport(
        Theorem.BRANDT_FOREST, lhs, n, lhs < n, {"delta_g": dg, "excess_leaves": ex}
    )


def degss_lhs(g: Graph, h: Graph) -> tuple[int, dict[str, int]]:
    """Top ``Delta(G)`` H-degrees plus top ``c`` G-degrees, ``c`` the
    degeneracy of ``h``."""
    dg = g.max_degree()
    c = degeneracy(h).c
    ds_h = degree_sequence(h)
    ds_g = degree_sequence(g)
    assert dg <= len(ds_h) and c <= len(ds_g)
    sum_h = sum(ds_h[:dg])
    sum_g = sum(ds_g[:c])
    detail = {
        "delta_g": dg,
        "delta_h": h.max_degree(),
        "c": c,
        "sum_h_top": sum_h,
        "sum_g_top": sum_g,
    }
    return sum_h + sum_g, detail


def degss_holds(g: Graph, h: Graph) -> ConditionReport:
    n = _same_n(g, h)
    lhs, detail = degss_lhs(g, h)
    return ConditionReport(Theorem.DEGSS, lhs, n, lhs < n, detail)


def degss_dominates_checks(g: Graph, h: Graph) -> bool:
    """Check the degree-sum condition against the two classical ones it
    refines: it never exceeds ``2 Delta(G) Delta(H)``, and for a tree ``h``
    never exceeds ``3 Delta(G) + leaves(h) - 2``."""
    lhs, _ = degss_lhs(g, h)
    if lhs > 2 * g.max_degree() * h.max_degree():
        return False
    if h.n >= 2 and is_forest(h) and len(components(h)) == 1:
        leaves = sum(1 for d in h.degrees() if d == 1)
        if lhs > 3 * g.max_degree() + leaves - 2:
            return False
    return True


def is_perfect_matching(g: Graph) -> bool:
    return g.n > 0 and all(d == 1 for d in g.degrees())


def is_spanning_star(g: Graph) -> bool:
    """``K_{1,n-1}``: degrees ``(n-1, 1, ..., 1)`` and connected."""
    if g.n < 2:
        return False
    ds = degree_sequence(g)
    return ds[0] == g.n - 1 and all(d == 1 for d in ds[1:]) and len(components(g)) == 1


def onlysharp_report(g: Graph, f: Graph) -> ConditionReport:
    n = _same_n(g, f)
    _require_forest(f)
    dg = g.max_degree()
    ex = excess_leaves(f)
    lhs = 3 * dg + ex
    return ConditionReport(
        Theorem.ONLY_SHARP, lhs, n, lhs <= n, {"delta_g": dg, "excess_leaves": ex}
    )


def onlysharpness_classify(g: Graph, f: Graph) -> SharpnessVerdict:
    report = onlysharp_report(g, f)
    if not report.verdict:
        return SharpnessVerdict.HYPOTHESIS_FAILS
    if g.n % 2 == 0 and is_perfect_matching(g) and is_spanning_star(f):
        return SharpnessVerdict.EXCEPTIONAL_PAIR
    return SharpnessVerdict.PACKS_GUARANTEED


def all_reports(g: Graph, h: Graph) -> tuple[list[ConditionReport], SharpnessVerdict | None]:
    """Every applicable report for ``(g, h)``; the sharpness verdict is
    ``None`` unless ``h`` is a forest."""
    reports = [sauer_spencer_holds(g, h)]
    verdict = None
    if is_forest(h):
        if h.n >= 1 and len(components(h)) == 1:
            reports.append(brandt_holds(g, h))
        reports.append(brandt_forest_holds(g, h))
    reports.append(degss_holds(g, h))
    if is_forest(h):
        reports.append(onlysharp_report(g, h))
        verdict = onlysharpness_classify(g, h)
    return reports, verdict
