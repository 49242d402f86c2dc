import itertools

import pytest

from nutkernel import canon, enumeration as en
from nutkernel.digraph import (complete_graph, from_arcs, graph_from_edges,
                               graph_is_connected, is_diregular,
                               is_strongly_connected, underlying)
from nutkernel.errors import CapExceeded
from nutkernel.families import circulant


CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
CONNECTED_ORIENTED = {1: 1, 2: 1, 3: 5, 4: 34, 5: 535}


def test_gen_connected_graph_counts():
    for n, expect in CONNECTED_COUNTS.items():
        if n > 6:
            continue
        graphs = list(en.gen_connected_graphs(en.GenConstraints(order=n)))
        assert len(graphs) == expect
        assert all(graph_is_connected(g) for g in graphs)
        keys = {canon.canonical_graph_bytes(g) for g in graphs}
        assert len(keys) == expect


def test_gen_regular_counts():
    # connected 4-regular graphs
    for n, expect in {5: 1, 6: 1, 7: 2, 8: 6, 9: 16}.items():
        graphs = list(en.gen_connected_graphs(
            en.GenConstraints(order=n, regularity=4)))
        assert len(graphs) == expect, n


def test_gen_min_degree():
    graphs = list(en.gen_connected_graphs(
        en.GenConstraints(order=7, min_degree=4)))
    assert all(all(g.degree(v) >= 4 for v in range(7)) for g in graphs)
    # cross-check against unconstrained generation
    base = [g for g in en.gen_connected_graphs(en.GenConstraints(order=7))
            if all(g.degree(v) >= 4 for v in range(7))]
    assert len(graphs) == len(base)


def test_gen_cap():
    with pytest.raises(CapExceeded):
        list(en.gen_connected_graphs(en.GenConstraints(order=13)))


def test_orientation_counts_small():
    triangle = complete_graph(3)
    assert sum(1 for _ in en.orientations(triangle)) == 2
    assert sum(1 for _ in en.orientations(complete_graph(4))) == 4
    path3 = graph_from_edges(3, [(0, 1), (1, 2)])
    assert sum(1 for _ in en.orientations(path3)) == 3


def test_orientation_streams_are_isomorph_free_and_complete():
    # brute force: all labeled orientations, dedup by canonical form
    for graph in en.gen_connected_graphs(en.GenConstraints(order=4)):
        edges = sorted(graph.edges)
        seen = set()
        for bits in range(2 ** len(edges)):
            arcs = []
            for j, (u, v) in enumerate(edges):
                arcs.append((v, u) if bits >> j & 1 else (u, v))
            seen.add(en.canonical_digraph(from_arcs(4, arcs)))
        stream = list(en.orientations(graph))
        assert len(stream) == len(seen)
        assert {en.canonical_digraph(g) for g in stream} == seen


def test_orientation_totals_match_connected_oriented_sequence():
    for n, expect in CONNECTED_ORIENTED.items():
        if n < 3:
            continue
        total = 0
        for graph in en.gen_connected_graphs(en.GenConstraints(order=n)):
            total += sum(1 for _ in en.orientations(graph))
        assert total == expect, n


def test_bidirected_orientation_stream_vs_bruteforce():
    # every loop-free digraph arises: states ->, <-, <-> per edge
    for graph in en.gen_connected_graphs(en.GenConstraints(order=4)):
        edges = sorted(graph.edges)
        seen = set()
        for code in range(3 ** len(edges)):
            arcs = []
            c = code
            for (u, v) in edges:
                s = c % 3
                c //= 3
                if s != 1:
                    arcs.append((u, v))
                if s != 0:
                    arcs.append((v, u))
            seen.add(en.canonical_digraph(from_arcs(4, arcs)))
        stream = list(en.orientations(graph, allow_bidirected=True))
        assert len(stream) == len(seen)


def test_orientation_degree_prune():
    graph = circulant(6, {1, 2})
    pruned = list(en.orientations(graph, prune=True))
    assert len(pruned) == 4
    full = [g for g in en.orientations(graph)
            if all(len(g.out_adj[v]) >= 2 and len(g.in_adj[v]) >= 2
                   for v in range(6))]
    assert len(full) == 4


def test_dfs_and_numpy_streams_agree():
    # force the DFS path by a tiny numpy threshold
    graph = circulant(6, {1, 2})
    edges = sorted(graph.edges)
    auts = canon.automorphisms_graph(graph)
    actions = en._edge_actions(6, edges, auts)
    numpy_rows = [tuple(r) for d in en._numpy_orbit_stream(len(edges), 2, actions)
                  for r in d]
    dfs_rows = [tuple(r) for d in en._dfs_orbit_stream(len(edges), 2, actions)
                for r in d]
    assert len(numpy_rows) == len(dfs_rows)
    canon_a = {en.canonical_digraph(en._digits_to_digraph(r, edges, 6))
               for r in numpy_rows}
    canon_b = {en.canonical_digraph(en._digits_to_digraph(r, edges, 6))
               for r in dfs_rows}
    assert canon_a == canon_b


def test_automorphism_group_op():
    assert len(en.automorphism_group(complete_graph(4))) == 24
    assert len(en.automorphism_group(circulant(8, {1, 2}))) == 16
    with pytest.raises(CapExceeded):
        en.automorphism_group(complete_graph(13))


def test_canonical_digraph_op():
    from nutkernel.digraph import dicycle, reverse
    c3 = dicycle(3)
    assert en.canonical_digraph(c3) == en.canonical_digraph(reverse(c3))
    from nutkernel.families import m_family
    assert en.canonical_digraph(m_family(1, 6)) != en.canonical_digraph(m_family(2, 6))


def test_is_core_graph():
    assert en.is_core_graph(circulant(8, {1, 2}))
    assert en.is_nut_graph(circulant(8, {1, 2}))
    for n in range(2, 7):
        assert not en.is_core_graph(complete_graph(n))
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert en.is_core_graph(c4) and not en.is_nut_graph(c4)
    assert not en.is_core_graph(graph_from_edges(1, []))


def test_census_small_oriented():
    row = en.census(en.GenConstraints(order=5), workers=1)
    assert row.generated_underlying == 21
    assert row.generated_oriented == 535
    assert row.counts["dextro"] == 4
    assert row.counts["bi"] == 0
    assert row.counts["ambi"] == 0


def test_census_n6_table_row():
    row = en.census(en.GenConstraints(order=6), workers=2, collect=("ambi",))
    assert row.generated_underlying == 112
    assert row.generated_oriented == 20848
    assert row.counts["dextro"] == 153
    assert row.counts["bi"] == 2
    assert row.counts["ambi"] == 2
    from nutkernel.families import m_family
    ambi_ids = {c[0] for c in row.certificates["ambi"]}
    expected = {en.canonical_digraph(m_family(1, 6)).decode(),
                en.canonical_digraph(m_family(2, 6)).decode()}
    assert ambi_ids == expected


def test_census_tournaments_small():
    row = en.census(en.GenConstraints(order=4, tournament=True), workers=1)
    assert row.generated_oriented == 4
    assert row.counts["dextro"] == 1
    assert row.counts["bi"] == 0
    assert row.counts["ambi"] == 0
    row6 = en.census(en.GenConstraints(order=6, tournament=True), workers=1)
    assert row6.generated_oriented == 56
    assert row6.counts["dextro"] == 3


def test_census_quartic_n6():
    row = en.census(en.GenConstraints(order=6, regularity=4), workers=1)
    assert row.generated_underlying == 1
    assert row.generated_oriented == 112
    # inter = the two ambi-nuts plus the 4-regular nullity-2 inter-nut
    assert row.counts == {"dextro": 4, "bi": 2, "ambi": 2, "inter": 3}


def test_census_core_filtered_n6():
    row = en.census(en.GenConstraints(order=6, min_degree=4, core_filter=True,
                                      degree_bounds=True), workers=1)
    assert row.generated_underlying == 1
    assert row.generated_oriented == 4
    assert row.counts["ambi"] == 2
    assert row.good_cores == 1


def test_census_worker_counts_deterministic():
    rows = [en.census(en.GenConstraints(order=5), workers=w) for w in (1, 2)]
    assert rows[0].counts == rows[1].counts
    assert rows[0].generated_oriented == rows[1].generated_oriented


def test_connected_diregular_strongly_connected_up_to_8():
    checked = 0
    for n in range(5, 9):
        for graph in en.gen_connected_graphs(en.GenConstraints(order=n, regularity=4)):
            for g in en.orientations(graph, prune=True):
                if is_diregular(g, 2):
                    assert is_strongly_connected(g)
                    checked += 1
    assert checked > 50


def test_census_fixed_underlying():
    row = en.census(en.GenConstraints(order=6, underlying=circulant(6, {1, 2})),
                    workers=1)
    assert row.generated_underlying == 1
    assert row.generated_oriented == 112
    assert row.counts["ambi"] == 2
