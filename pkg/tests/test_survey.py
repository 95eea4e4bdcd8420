import pytest

from graphpack.conditions import is_perfect_matching, is_spanning_star
from graphpack.families import matching, star
from graphpack.graph import excess_leaves
from graphpack.solver import PackStatus
from graphpack.survey import candidate_pairs, describe, format_report, run_survey

from _support import cycle, disjoint_union, empty, path


def test_describe():
    assert describe(matching(6)) == "3K2"
    assert describe(star(6)) == "K1,5"
    assert describe(disjoint_union(path(4), empty(2))) == "P4+2K1"
    assert describe(cycle(5)) == "C5"


@pytest.mark.parametrize("n", [4, 6])
def test_theorem5_even(n):
    r = run_survey(n, "theorem5")
    assert len(r.findings) == 1
    f = r.findings[0]
    assert f.status is PackStatus.IMPOSSIBLE
    assert is_perfect_matching(f.g) and is_spanning_star(f.h)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_theorem5_no_exceptions(n):
    # at n=2 the single-edge pair has 3*1 + 0 > 2, so it is outside the hypothesis
    assert run_survey(n, "theorem5").findings == []


def test_theorem5_candidates_meet_hypothesis():
    for g, f, lhs in candidate_pairs(6, "theorem5"):
        assert lhs == 3 * g.max_degree() + excess_leaves(f) <= 6


def test_question1_tags_listed_families():
    r = run_survey(4, "question1")
    assert all(f.family is not None for f in r.findings)
    assert len(r.findings) == 3


def test_question1_forest_restriction():
    r = run_survey(6, "question1", forests_only=True)
    labels = [f.family for f in r.findings]
    assert "H=K1,5,G=matching" in labels


def test_question2_candidates():
    for g, f, _ in candidate_pairs(6, "question2"):
        assert 3 * g.max_degree() + excess_leaves(f) == 7 and g.max_degree() >= 2


def test_report_is_deterministic():
    a = format_report(run_survey(6, "question1"))
    b = format_report(run_survey(6, "question1", jobs=2))
    assert a == b


def test_sampled_large_n():
    r = run_survey(8, "theorem5", sample=40, seed=3)
    assert r.sampled and r.examined == 40
    again = run_survey(8, "theorem5", sample=40, seed=3)
    assert format_report(r) == format_report(again)
