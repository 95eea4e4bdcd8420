import random
from collections import Counter

import pytest

from graphpack.families import matching, star
from graphpack.graph import GraphError, SizeMismatchError, complement, new_graph
from graphpack.packing import (
    Conflict,
    LinkKind,
    Mapping,
    conflicts,
    identity,
    is_packing,
    link_count_bound,
    link_free_targets,
    links_from,
    make_quasipacking,
    swap,
)
from graphpack.solver import pack_incremental

from _support import (
    empty,
    naive_links,
    path,
    random_graph,
    random_mapping,
    random_quasipacking,
)

EDGE3 = new_graph(3, [(0, 1)])


class TestMapping:
    def test_from_forward_builds_inverse(self):
        m = Mapping.from_forward([2, 0, 1])
        assert m.inverse == (1, 2, 0)

    def test_rejects_non_permutation(self):
        with pytest.raises(GraphError):
            Mapping.from_forward([0, 0, 1])

    def test_conflict_normalized(self):
        with pytest.raises(GraphError):
            Conflict(2, 1)


class TestConflicts:
    def test_edgeless_g(self):
        assert conflicts(empty(4), star(4), identity(4)) == []

    def test_single_edge(self):
        k2 = new_graph(2, [(0, 1)])
        assert conflicts(k2, k2, identity(2)) == [Conflict(0, 1)]

    def test_matching_vs_star(self):
        assert conflicts(matching(6), star(6), identity(6)) == [Conflict(0, 1)]

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            conflicts(empty(3), empty(4), identity(3))

    def test_k2_never_packs(self):
        k2 = new_graph(2, [(0, 1)])
        assert not is_packing(k2, k2, identity(2))
        assert not is_packing(k2, k2, Mapping.from_forward([1, 0]))

    def test_solver_witness_for_matching_vs_path(self):
        out = pack_incremental(matching(6), path(6))
        assert out.packed and is_packing(matching(6), path(6), out.mapping)

    def test_dual_implementation(self):
        rng = random.Random(1)
        for _ in range(500):
            n = rng.randint(1, 9)
            g = random_graph(n, rng.random(), rng)
            h = random_graph(n, rng.random(), rng)
            m = random_mapping(n, rng)
            relabeled = {frozenset((m(u), m(v))) for u, v in g.edges()}
            disjoint = relabeled.isdisjoint({frozenset(e) for e in h.edges()})
            ch = complement(h)
            in_complement = all(ch.has_edge(m(u), m(v)) for u, v in g.edges())
            assert is_packing(g, h, m) == disjoint == in_complement


class TestLinks:
    def test_edgeless(self):
        assert links_from(empty(4), empty(4), identity(4), 0) == []

    def test_two_self_links_at_parallel_pair(self):
        links = links_from(EDGE3, EDGE3, identity(3), 0)
        assert len(links) == 2
        assert {(l.endpoint, l.kind, l.mid) for l in links} == {
            (0, LinkKind.GH, 1),
            (0, LinkKind.HG, 1),
        }

    def test_matching_vs_star(self):
        links = links_from(matching(6), star(6), identity(6), 0)
        assert Counter(l.endpoint for l in links) == Counter([0, 0, 2, 3, 4, 5])
        gh = [l for l in links if l.kind is LinkKind.GH]
        assert [(l.endpoint, l.mid) for l in gh] == [(0, 1)]

    def test_link_soundness_and_oracle(self):
        rng = random.Random(2)
        for _ in range(300):
            n = rng.randint(1, 7)
            g = random_graph(n, rng.random(), rng)
            h = random_graph(n, rng.random(), rng)
            m = random_mapping(n, rng)
            for u in range(n):
                got = links_from(g, h, m, u)
                for l in got:
                    if l.kind is LinkKind.GH:
                        assert g.has_edge(u, l.mid) and h.has_edge(m(l.mid), m(l.endpoint))
                    else:
                        assert h.has_edge(m(u), m(l.mid)) and g.has_edge(l.mid, l.endpoint)
                assert Counter(got) == Counter(naive_links(g, h, m, u))


class TestQuasipacking:
    def test_requires_single_conflict(self):
        with pytest.raises(GraphError):
            make_quasipacking(empty(3), empty(3), identity(3))

    def test_source_must_be_endpoint(self):
        with pytest.raises(GraphError):
            make_quasipacking(EDGE3, EDGE3, identity(3), source=2)

    def test_link_free_targets_examples(self):
        qp = make_quasipacking(EDGE3, EDGE3, identity(3))
        assert link_free_targets(EDGE3, EDGE3, qp) == [2]
        qp = make_quasipacking(matching(6), star(6), identity(6))
        assert link_free_targets(matching(6), star(6), qp) == []

    def test_link_count_bound_examples(self):
        qp = make_quasipacking(EDGE3, EDGE3, identity(3))
        assert link_count_bound(EDGE3, EDGE3, qp) == (2, 2)
        qp = make_quasipacking(matching(6), star(6), identity(6))
        assert link_count_bound(matching(6), star(6), qp) == (6, 6)

    def test_random_quasipackings(self):
        rng = random.Random(3)
        for _ in range(300):
            n = rng.randint(2, 10)
            g, h, m, src = random_quasipacking(n, rng)
            qp = make_quasipacking(g, h, m, source=src)
            observed, bound = link_count_bound(g, h, qp)
            assert observed <= bound
            for y in link_free_targets(g, h, qp):
                assert is_packing(g, h, swap(m, src, y))


class TestSwap:
    def test_example(self):
        assert swap(identity(3), 0, 2).forward == (2, 1, 0)

    def test_same_vertex(self):
        with pytest.raises(GraphError):
            swap(identity(3), 1, 1)

    def test_involution(self):
        rng = random.Random(4)
        for _ in range(100):
            n = rng.randint(2, 10)
            m = random_mapping(n, rng)
            u, y = rng.sample(range(n), 2)
            s = swap(m, u, y)
            assert all(s.inverse[s.forward[v]] == v for v in range(n))
            assert swap(s, u, y) == m

    def test_resolves_link_free_example(self):
        assert is_packing(EDGE3, EDGE3, swap(identity(3), 0, 2))
