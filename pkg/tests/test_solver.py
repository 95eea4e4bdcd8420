import random

import pytest

from graphpack.conditions import degss_holds
from graphpack.families import complete_bipartite, matching, star
from graphpack.graph import SizeMismatchError, new_graph
from graphpack.packing import is_packing
from graphpack.solver import (
    PackStatus,
    certify_nonpacking_star_matching,
    pack_exact,
    pack_incremental,
)

from _support import brute_force_packs, cycle, empty, path, random_forest, random_graph


class TestIncremental:
    def test_matching_vs_path(self):
        out = pack_incremental(matching(6), path(6), check=True)
        assert out.status is PackStatus.PACKED
        assert is_packing(matching(6), path(6), out.mapping)

    def test_trivial_cases(self):
        out = pack_incremental(empty(1), empty(1))
        assert out.packed and out.mapping.forward == (0,)
        out = pack_incremental(matching(6), empty(6))
        assert out.packed and out.mapping.forward == tuple(range(6)) and out.stats.swaps == 0

    def test_exceptional_pair_not_guaranteed(self):
        out = pack_incremental(matching(6), star(6), check=True)
        assert out.status is PackStatus.NOT_GUARANTEED and out.mapping is None
        assert pack_exact(matching(6), star(6)).status is PackStatus.IMPOSSIBLE

    def test_mismatch(self):
        with pytest.raises(SizeMismatchError):
            pack_incremental(empty(2), empty(3))

    def test_guarantee_random(self):
        rng = random.Random(10)
        hits = 0
        while hits < 300:
            n = rng.randint(2, 20)
            g = random_graph(n, rng.uniform(0, 0.2), rng)
            h = random_forest(n, rng) if rng.random() < 0.5 else random_graph(n, rng.uniform(0, 0.2), rng)
            if not degss_holds(g, h).verdict:
                continue
            hits += 1
            out = pack_incremental(g, h, check=True)
            assert out.packed

    def test_best_effort_outside_condition(self):
        # pairs outside the condition: any Packed result must still verify
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(2, 9)
            g = random_graph(n, rng.random(), rng)
            h = random_graph(n, rng.random(), rng)
            out = pack_incremental(g, h)
            if out.packed:
                assert is_packing(g, h, out.mapping)


class TestExact:
    def test_impossible_examples(self):
        assert pack_exact(matching(6), star(6)).status is PackStatus.IMPOSSIBLE
        assert pack_exact(matching(6), complete_bipartite(3, 3)).status is PackStatus.IMPOSSIBLE

    def test_two_hexagons(self):
        out = pack_exact(cycle(6), cycle(6))
        assert out.packed and is_packing(cycle(6), cycle(6), out.mapping)

    def test_budget(self):
        out = pack_exact(matching(6), star(6), budget=3)
        assert out.status is PackStatus.BUDGET_EXCEEDED

    def test_empty_graph(self):
        assert pack_exact(empty(0), empty(0)).packed

    def test_agrees_with_brute_force(self):
        rng = random.Random(12)
        for _ in range(400):
            n = rng.randint(1, 6)
            g = random_graph(n, rng.random(), rng)
            h = random_graph(n, rng.random(), rng)
            out = pack_exact(g, h)
            assert out.packed == brute_force_packs(g, h)
            if out.packed:
                assert is_packing(g, h, out.mapping)

    def test_deterministic_witness(self):
        a = pack_exact(cycle(6), path(6)).mapping
        b = pack_exact(cycle(6), path(6)).mapping
        assert a == b


class TestCertificate:
    def test_matching_star(self):
        assert certify_nonpacking_star_matching(matching(6), star(6))

    def test_no_dominating_vertex(self):
        assert not certify_nonpacking_star_matching(matching(6), path(6))

    def test_not_one_regular(self):
        g = new_graph(6, [(0, 1), (2, 3)])
        assert not certify_nonpacking_star_matching(g, star(6))
        assert brute_force_packs(g, star(6))
        assert pack_exact(g, star(6)).packed

    def test_certificate_is_sound(self):
        rng = random.Random(13)
        for _ in range(300):
            n = rng.choice([2, 4, 6])
            g = random_graph(n, rng.random(), rng)
            h = random_graph(n, rng.random(), rng)
            if certify_nonpacking_star_matching(g, h):
                assert pack_exact(g, h).status is PackStatus.IMPOSSIBLE
