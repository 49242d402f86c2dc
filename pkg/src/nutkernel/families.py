"""Parameterized digraph families and their underlying-graph oracles."""

from __future__ import annotations

from .digraph import (Digraph, UndirectedGraph, cartesian_product, dicycle,
                      from_arcs, graph_from_edges)
from .errors import BadConnectionSet, OddOrder, TooSmall


def m_family(k: int, n: int) -> Digraph:
    """Antiprism-skeleton digraphs on Z_n (n even, n >= 4).

    All three variants share the step-1 directed cycle; they differ in how
    the step-2 chords are oriented.  Indices are taken modulo n.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    if n % 2:
        raise OddOrder(f"order must be even, got {n}")
    if n < 4:
        raise TooSmall(f"order must be at least 4, got {n}")
    arcs = [(i, (i + 1) % n) for i in range(n)]
    if k == 1:
        arcs += [(i, (i + 2) % n) for i in range(n)]
    elif k == 2:
        arcs += [(i, (i + 2) % n) for i in range(0, n, 2)]
        arcs += [((i + 2) % n, i) for i in range(1, n, 2)]
    else:
        arcs += [((i + 2) % n, i) for i in range(n)]
    return from_arcs(n, arcs)


def d_family(k: int, n: int) -> Digraph:
    """Directed rose-window digraphs on 2n vertices (n >= 5).

    Rim vertices are 0..n-1, hub vertices are n..2n-1 (rim i pairs with
    hub n+i).  The rim carries a step-1 cycle, the hub a step-2 cycle.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    if n < 5:
        raise TooSmall(f"order parameter must be at least 5, got {n}")
    def v(i: int) -> int:
        return i % n
    def u(i: int) -> int:
        return n + (i % n)
    arcs: list[tuple[int, int]] = []
    for i in range(n):
        arcs.append((v(i), v(i + 1)))
        if k == 3:
            arcs.append((u(i + 2), u(i)))
        else:
            arcs.append((u(i), u(i + 2)))
        if k == 2:
            arcs.append((u(i), v(i)))
            arcs.append((v(i + 1), u(i)))
        else:
            arcs.append((v(i), u(i)))
            arcs.append((u(i), v(i + 1)))
    return from_arcs(2 * n, arcs)


def dicycle_product(n: int, m: int) -> Digraph:
    """Cartesian product of the directed n-cycle and the directed m-cycle."""
    if n < 3 or m < 3:
        raise TooSmall(f"both factors must be at least 3, got ({n}, {m})")
    return cartesian_product(dicycle(n), dicycle(m))


def circulant(n: int, connections) -> UndirectedGraph:
    """Undirected circulant on Z_n with the given connection set."""
    conn = set(connections)
    if not conn or any(not 1 <= s <= n // 2 for s in conn):
        raise BadConnectionSet(f"connection set must be within 1..{n // 2}")
    edges = []
    for s in conn:
        for i in range(n):
            edges.append((i, (i + s) % n))
    return graph_from_edges(n, edges)
