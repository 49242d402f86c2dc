"""Canonical labelings and automorphism groups via partition refinement.

Graphs and digraphs are handled by the same individualization-refinement
search; a digraph refines on out- and in-neighbour counts, a graph on one
symmetric direction.  The canonical certificate is the minimum, over all
refinement-consistent discrete labelings, of (refinement trace, relabeled
adjacency bits); it is deterministic and equal exactly for isomorphic
inputs.  Automorphisms are read off the set of minimum-certificate leaves.

Refinement is incremental: each individualization step only propagates the
newly introduced distinction through a splitter worklist.

Vertex sets are capped at 16 so adjacency rows fit in machine-int bitmasks.
"""

from __future__ import annotations

from .digraph import Digraph, UndirectedGraph
from .errors import CapExceeded

_HARD_CAP = 16


def graph_masks(graph: UndirectedGraph) -> tuple[tuple[int, ...]]:
    masks = [0] * graph.n
    for u, v in graph.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return (tuple(masks),)


def digraph_masks(g: Digraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    out = [0] * g.n
    inn = [0] * g.n
    for u, v in g.arcs:
        out[u] |= 1 << v
        inn[v] |= 1 << u
    return tuple(out), tuple(inn)


def _cell_mask(cell) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(dirs, cells, work, ref=None):
    """Propagate splitter masks until the partition is equitable.

    cells is modified in place.  Returns (trace, tight): the refinement
    trace and whether it still equals the reference prefix.  Returns None
    as soon as the trace exceeds the reference (the caller prunes).
    """
    trace = []
    single_dir = len(dirs) == 1
    d0 = dirs[0]
    tight = ref is not None
    while work:
        s = work.pop()
        event = None
        i = 0
        ncells = len(cells)
        while i < ncells:
            cell = cells[i]
            if len(cell) > 1:
                buckets: dict = {}
                if single_dir:
                    for v in cell:
                        key = (d0[v] & s).bit_count()
                        b = buckets.get(key)
                        if b is None:
                            buckets[key] = [v]
                        else:
                            b.append(v)
                else:
                    d1 = dirs[1]
                    for v in cell:
                        key = ((d0[v] & s).bit_count(), (d1[v] & s).bit_count())
                        b = buckets.get(key)
                        if b is None:
                            buckets[key] = [v]
                        else:
                            b.append(v)
                if len(buckets) > 1:
                    items = sorted(buckets.items())
                    cells[i:i + 1] = [vs for _, vs in items]
                    if event is None:
                        event = []
                    event.append((i, tuple((k, len(vs)) for k, vs in items)))
                    for _, vs in items:
                        work.append(_cell_mask(vs))
                    step = len(items)
                    i += step
                    ncells += step - 1
                    continue
            i += 1
        if event:
            event = tuple(event)
            if tight:
                k = len(trace)
                if k >= len(ref) or event > ref[k]:
                    return None
                if event < ref[k]:
                    tight = False
            trace.append(event)
    if tight and len(trace) < len(ref):
        # reference has more events: shorter trace compares smaller
        tight = False
    return tuple(trace), tight


class _Search:
    __slots__ = ("n", "dirs", "best_path", "best_cert", "best_leaves",
                 "directed", "first_only")

    def __init__(self, n, dirs, directed, first_only=False):
        self.n = n
        self.dirs = dirs
        self.directed = directed
        self.first_only = first_only
        self.best_path = None
        self.best_cert = None
        self.best_leaves = None

    def _leaf_cert(self, order):
        pos = [0] * self.n
        for p, v in enumerate(order):
            pos[v] = p
        bits = 0
        if self.directed:
            out = self.dirs[0]
            for v in order:
                row = 0
                m = out[v]
                while m:
                    low = m & -m
                    row |= 1 << pos[low.bit_length() - 1]
                    m ^= low
                bits = (bits << self.n) | row
        else:
            adj = self.dirs[0]
            for p, v in enumerate(order):
                row = 0
                m = adj[v]
                while m:
                    low = m & -m
                    w = low.bit_length() - 1
                    q = pos[w]
                    if q < p:
                        row |= 1 << q
                    m ^= low
                bits = (bits << p) | row
        return bits

    def _walk(self, cells, work, path, tight):
        depth = len(path)
        ref = None
        if tight and self.best_path is not None:
            if depth >= len(self.best_path):
                return  # equal prefix but deeper: strictly greater
            ref = self.best_path[depth]
        res = _refine(self.dirs, cells, work, ref)
        if res is None:
            return
        trace, still = res
        if ref is not None:
            tight = still
        path.append(trace)
        target_i = -1
        target_len = self.n + 1
        for i, cell in enumerate(cells):
            ln = len(cell)
            if 1 < ln < target_len:
                target_i = i
                target_len = ln
        if target_i < 0:
            order = [c[0] for c in cells]
            cert = self._leaf_cert(order)
            if self.best_path is None or (path, cert) < (self.best_path, self.best_cert):
                self.best_path = list(path)
                self.best_cert = cert
                self.best_leaves = [tuple(order)]
            elif not self.first_only and path == self.best_path and cert == self.best_cert:
                self.best_leaves.append(tuple(order))
            path.pop()
            return
        target = cells[target_i]
        for v in target:
            rest = [w for w in target if w != v]
            child = cells[:target_i] + [[v], rest] + cells[target_i + 1:]
            self._walk(child, [1 << v], path, tight)
        path.pop()

    def run(self, cells=None):
        n = self.n
        if cells is None:
            if len(self.dirs) == 1:
                key = lambda v: self.dirs[0][v].bit_count()
            else:
                key = lambda v: (self.dirs[0][v].bit_count(),
                                 self.dirs[1][v].bit_count())
            groups: dict = {}
            for v in range(n):
                groups.setdefault(key(v), []).append(v)
            cells = [groups[k] for k in sorted(groups)]
        else:
            cells = [list(c) for c in cells]
        self._walk(cells, [_cell_mask(c) for c in cells], [], True)
        return self.best_leaves


def _canonical_leaves(n, dirs, directed, first_only=False, cells=None):
    """Min-certificate leaf labelings; `cells` may pre-seed the partition
    with any isomorphism-invariant ordered colouring."""
    if n > _HARD_CAP:
        raise CapExceeded(f"canonical search capped at {_HARD_CAP} vertices")
    if n == 1:
        return [(0,)]
    return _Search(n, dirs, directed, first_only).run(cells)


def canonical_order_graph(graph: UndirectedGraph) -> tuple[int, ...]:
    """Map position -> vertex for the canonical labeling."""
    return _canonical_leaves(graph.n, graph_masks(graph), False, True)[0]


def canonical_order_digraph(g: Digraph) -> tuple[int, ...]:
    return _canonical_leaves(g.n, digraph_masks(g), True, True)[0]


def _auts_from_leaves(n, leaves):
    base = leaves[0]
    auts = set()
    for leaf in leaves:
        perm = [0] * n
        for p, v in enumerate(leaf):
            perm[base[p]] = v
        auts.add(tuple(perm))
    return sorted(auts)


def automorphisms_graph(graph: UndirectedGraph) -> list[tuple[int, ...]]:
    leaves = _canonical_leaves(graph.n, graph_masks(graph), False)
    return _auts_from_leaves(graph.n, leaves)


def automorphisms_digraph(g: Digraph) -> list[tuple[int, ...]]:
    leaves = _canonical_leaves(g.n, digraph_masks(g), True)
    return _auts_from_leaves(g.n, leaves)


def canonical_graph_bytes(graph: UndirectedGraph) -> bytes:
    """Compact canonical certificate: order byte plus packed triangle bits."""
    order = canonical_order_graph(graph)
    pos = [0] * graph.n
    for p, v in enumerate(order):
        pos[v] = p
    bits = 0
    for u, v in graph.edges:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        bits |= 1 << (b * (b - 1) // 2 + a)
    size = (graph.n * (graph.n - 1) // 2 + 7) // 8
    return bytes([graph.n]) + bits.to_bytes(size or 1, "little")


def canonical_digraph_bytes(g: Digraph) -> bytes:
    """Canonical certificate of a digraph: order byte plus packed n^2 bits."""
    order = canonical_order_digraph(g)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    bits = 0
    for u, v in g.arcs:
        bits |= 1 << (pos[u] * g.n + pos[v])
    size = (g.n * g.n + 7) // 8
    return bytes([g.n]) + bits.to_bytes(size, "little")


def graph_from_canonical_bytes(data: bytes) -> UndirectedGraph:
    from .digraph import graph_from_edges
    n = data[0]
    bits = int.from_bytes(data[1:], "little")
    edges = []
    for b in range(1, n):
        for a in range(b):
            if bits & 1 << (b * (b - 1) // 2 + a):
                edges.append((a, b))
    return graph_from_edges(n, edges)


def digraph_from_canonical_bytes(data: bytes) -> Digraph:
    from .digraph import from_arcs
    n = data[0]
    bits = int.from_bytes(data[1:], "little")
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and bits & 1 << (u * n + v):
                arcs.append((u, v))
    return from_arcs(n, arcs)
