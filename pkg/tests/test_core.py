"""Hypergraph structure: construction, degrees, predicates, stats."""

from __future__ import annotations

import pytest

from hypercolor import Hypergraph, Rng, fano, random_linear
from hypercolor.transforms import max_degree_two_section

from brute import random_hypergraph_raw


def test_construction_canonicalizes_edges():
    h = Hypergraph(5, [[3, 1, 2], (4, 0)])
    assert h.edges == ((1, 2, 3), (0, 4))
    assert h.n == 5 and h.m == 2


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        Hypergraph(3, [()])
    with pytest.raises(ValueError):
        Hypergraph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Hypergraph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Hypergraph(3, [(-1, 0)])
    with pytest.raises(ValueError):
        Hypergraph(-1, [])


def test_duplicate_hyperedges_are_kept_as_positions():
    h = Hypergraph(2, [(0, 1), (0, 1)])
    assert h.m == 2
    assert h.vertex_degree(0) == 2
    assert h.hyperedge_degree(0) == 1 and h.hyperedge_degree(1) == 1


def test_degrees_and_incidence():
    h = Hypergraph(4, [(0, 1), (1, 2), (0, 1, 2)])
    assert h.degrees() == (2, 3, 2, 0)
    assert h.vertex_degree(1) == 3
    assert h.incident(3) == ()
    assert h.incident(0) == (0, 2)
    with pytest.raises(IndexError):
        h.vertex_degree(4)
    with pytest.raises(IndexError):
        h.hyperedge_degree(3)


def test_hyperedge_degree_counts_intersecting_positions():
    triangle = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
    assert [triangle.hyperedge_degree(i) for i in range(3)] == [2, 2, 2]
    f = fano()
    assert all(f.hyperedge_degree(i) == 6 for i in range(7))
    matching = Hypergraph(4, [(0, 1), (2, 3)])
    assert matching.hyperedge_degree(0) == 0


def test_rank_antirank_and_loopless():
    assert Hypergraph(3, []).rank is None
    assert Hypergraph(3, []).antirank is None
    h = Hypergraph(5, [(0,), (1, 2, 3), (0, 4)])
    assert h.rank == 3 and h.antirank == 1
    assert not h.loopless
    assert Hypergraph(3, [(0, 1)]).loopless
    assert Hypergraph(3, []).loopless


def test_linearity_predicate():
    assert fano().is_linear()
    assert not Hypergraph(4, [(0, 1, 2), (0, 1, 3)]).is_linear()
    assert Hypergraph(2, [(0,), (0,)]).is_linear()
    assert not Hypergraph(2, [(0, 1), (0, 1)]).is_linear()
    assert Hypergraph(3, []).is_linear()


def test_connected_components():
    h = Hypergraph(6, [(0, 1), (1, 2), (4, 5)])
    comps = h.connected_components()
    assert comps == [((0, 1, 2), (0, 1)), ((3,), ()), ((4, 5), (2,))]
    assert fano().stats().connected
    assert not h.stats().connected


def test_remove_hyperedge_shifts_positions():
    h = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
    g = h.remove_hyperedge(1)
    assert g.edges == ((0, 1), (0, 2))
    assert h.m == 3
    with pytest.raises(IndexError):
        h.remove_hyperedge(3)


def test_remove_hyperedge_monotonicity_properties():
    # Removal never increases max degree, two-section degree, or rank,
    # and never decreases antirank.
    for seed in range(40):
        h = random_hypergraph_raw(Rng(seed))
        if h.m == 0:
            continue
        st = h.stats()
        for i in range(h.m):
            g = h.remove_hyperedge(i)
            gt = g.stats()
            assert gt.max_degree <= st.max_degree
            assert gt.two_section_max_degree <= st.two_section_max_degree
            if g.m:
                assert gt.rank <= st.rank
                assert gt.antirank >= st.antirank


def test_stats_pinned_on_fano():
    st = fano().stats()
    assert (st.n, st.m) == (7, 7)
    assert st.rank == st.antirank == 3
    assert st.max_degree == st.min_degree == 3
    assert st.loopless and st.linear and st.connected
    assert st.uniform_k == 3 and st.regular_d == 3
    assert st.two_section_max_degree == 6


def test_stats_internal_consistency():
    for seed in range(60):
        h = random_hypergraph_raw(Rng(seed))
        st = h.stats()
        assert st.two_section_max_degree == max_degree_two_section(h)
        if st.m:
            assert st.antirank <= st.rank
            assert (st.uniform_k is not None) == (st.antirank == st.rank)
            assert st.loopless == (st.antirank >= 2)
        else:
            assert st.rank is None and st.antirank is None
        assert st.min_degree <= st.max_degree
        assert (st.regular_d is not None) == (st.min_degree == st.max_degree)


def test_stats_invariant_under_edge_permutation_and_relabeling():
    for seed in range(25):
        rng = Rng(seed + 1000)
        h = random_hypergraph_raw(rng)
        st = h.stats()

        edges = list(h.edges)
        rng.shuffle(edges)
        assert Hypergraph(h.n, edges).stats() == st

        relabel = list(range(h.n))
        rng.shuffle(relabel)
        mapped = [tuple(relabel[x] for x in e) for e in h.edges]
        assert Hypergraph(h.n, mapped).stats() == st


def test_two_section_degree_floor_on_loopless_instances():
    # Delta_2 >= (antirank - 1) * max_degree whenever there are no loops.
    for seed in range(60):
        h = random_hypergraph_raw(Rng(seed + 2000), size_lo=2)
        if h.m == 0:
            continue
        st = h.stats()
        assert st.loopless
        assert st.two_section_max_degree >= (st.antirank - 1) * st.max_degree


def test_hyperedge_degree_incidence_sum():
    # d(e) <= sum over x in e of (deg(x) - 1), with equality when linear.
    for seed in range(40):
        h = random_hypergraph_raw(Rng(seed + 3000))
        for i in range(h.m):
            bound = sum(h.vertex_degree(x) - 1 for x in h.edges[i])
            assert h.hyperedge_degree(i) <= bound
    for seed in range(10):
        h = random_linear(12, 8, 3, seed)
        for i in range(h.m):
            bound = sum(h.vertex_degree(x) - 1 for x in h.edges[i])
            assert h.hyperedge_degree(i) == bound
