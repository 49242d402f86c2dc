import itertools
import random

import pytest

from nutkernel import digraph as dg
from nutkernel.errors import (DuplicateArc, IndexOutOfRange, LastVertex,
                              LoopRejected)
from nutkernel.families import m_family

from _figures import SMALLEST_DEXTRO, digraph


def test_from_arcs_smallest_dextro():
    g = digraph(SMALLEST_DEXTRO)
    assert g.n == 4
    assert g.m == 6
    assert g.out_adj[0] == (1, 3)
    assert g.in_adj[3] == (0, 1, 2)


def test_from_arcs_rejects_bad_input():
    with pytest.raises(DuplicateArc):
        dg.from_arcs(3, [(0, 1), (0, 1)])
    with pytest.raises(LoopRejected):
        dg.from_arcs(3, [(1, 1)])
    with pytest.raises(IndexOutOfRange):
        dg.from_arcs(3, [(0, 3)])


def test_reverse_cycle():
    c3 = dg.dicycle(3)
    assert dg.reverse(c3).arcs == frozenset({(1, 0), (2, 1), (0, 2)})
    assert dg.reverse(dg.reverse(c3)) == c3


def test_reverse_fixed_point_on_symmetric_digraph():
    g = dg.as_symmetric_digraph(dg.complete_graph(4))
    assert dg.reverse(g) == g


def test_underlying_triangle_and_k4():
    assert dg.underlying(dg.dicycle(3)) == dg.complete_graph(3)
    assert dg.underlying(digraph(SMALLEST_DEXTRO)) == dg.complete_graph(4)


def test_underlying_of_antiprism_digraph_is_circulant():
    from nutkernel.families import circulant
    assert dg.underlying(m_family(1, 6)) == circulant(6, {1, 2})


def test_degrees():
    g = digraph(SMALLEST_DEXTRO)
    assert dg.degrees(g, 3) == (3, 0)  # a sink
    c3 = dg.dicycle(3)
    assert all(dg.degrees(c3, v) == (1, 1) for v in range(3))
    assert all(dg.degrees(m_family(1, 8), v) == (2, 2) for v in range(8))
    with pytest.raises(IndexOutOfRange):
        dg.degrees(g, 4)


def test_connectivity():
    two_cycles = dg.from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not dg.is_connected(two_cycles)
    assert dg.is_connected(m_family(2, 6))
    assert dg.is_connected(dg.from_arcs(1, []))


def test_strong_connectivity():
    assert dg.is_strongly_connected(dg.dicycle(3))
    assert not dg.is_strongly_connected(digraph(SMALLEST_DEXTRO))
    assert dg.is_strongly_connected(m_family(1, 6))


def test_strongly_connected_implies_connected_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(2, 8)
        arcs = [(u, v) for u in range(n) for v in range(n)
                if u != v and rng.random() < 0.3]
        g = dg.from_arcs(n, arcs)
        if dg.is_strongly_connected(g):
            assert dg.is_connected(g)


def test_bipartite():
    ok, parts = dg.is_bipartite(dg.dicycle(4))
    assert ok and set(map(frozenset, parts)) == {frozenset({0, 2}), frozenset({1, 3})}
    assert not dg.is_bipartite(m_family(1, 6))[0]
    from _figures import DELETION_EXAMPLE_BIPARTITE
    assert dg.is_bipartite(digraph(DELETION_EXAMPLE_BIPARTITE))[0]


def test_delete_vertex():
    c3 = dg.dicycle(3)
    g = dg.delete_vertex(c3, 1)
    assert g.n == 2 and g.arcs == frozenset({(1, 0)})
    with pytest.raises(LastVertex):
        dg.delete_vertex(dg.from_arcs(1, []), 0)
    with pytest.raises(IndexOutOfRange):
        dg.delete_vertex(c3, 5)


def test_cartesian_product_of_dicycles():
    g = dg.cartesian_product(dg.dicycle(3), dg.dicycle(4))
    assert g.n == 12
    assert g.m == 24
    assert all(dg.degrees(g, v) == (2, 2) for v in range(12))


def test_handshake_random():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randrange(1, 9)
        arcs = [(u, v) for u in range(n) for v in range(n)
                if u != v and rng.random() < 0.4]
        g = dg.from_arcs(n, arcs)
        assert sum(len(a) for a in g.out_adj) == g.m
        assert sum(len(a) for a in g.in_adj) == g.m
        assert dg.underlying(g) == dg.underlying(dg.reverse(g))


def test_is_oriented():
    assert dg.is_oriented(digraph(SMALLEST_DEXTRO))
    from _figures import NONORIENTED_AMBI_4
    assert not dg.is_oriented(digraph(NONORIENTED_AMBI_4))
    assert dg.is_oriented(dg.from_arcs(1, []))


def test_is_diregular():
    assert dg.is_diregular(dg.dicycle(3), 1)
    assert dg.is_diregular(m_family(1, 6), 2)
    assert not dg.is_diregular(digraph(SMALLEST_DEXTRO), 2)


def test_connected_diregular_is_strongly_connected_small():
    # Exhaustive over all orientations of small vertex sets would be the
    # census's job; here sample the structured generators.
    for n, m in itertools.product(range(3, 6), repeat=2):
        g = dg.cartesian_product(dg.dicycle(n), dg.dicycle(m))
        assert dg.is_diregular(g, 2)
        assert dg.is_strongly_connected(g)
