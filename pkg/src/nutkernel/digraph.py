"""Core directed-graph model and purely combinatorial algorithms.

Vertices are dense zero-based integers.  A :class:`Digraph` is immutable
after construction; every function here is pure, so values can be shared
freely between threads or worker processes.

Loops are rejected by every constructor.  Pairs of opposite arcs (u, v)
and (v, u) are allowed; multi-arcs are not representable.
"""

from __future__ import annotations

from .errors import DuplicateArc, IndexOutOfRange, LastVertex, LoopRejected


class Digraph:
    """Immutable digraph with both-direction adjacency indexes."""

    __slots__ = ("n", "out_adj", "in_adj", "arcs")

    n: int
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]
    arcs: frozenset[tuple[int, int]]

    def __init__(self, n: int, arcs: frozenset[tuple[int, int]],
                 out_adj: tuple[tuple[int, ...], ...],
                 in_adj: tuple[tuple[int, ...], ...]) -> None:
        # Internal constructor; use from_arcs() which validates.
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "out_adj", out_adj)
        object.__setattr__(self, "in_adj", in_adj)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __eq__(self, other):
        return (isinstance(other, Digraph)
                and self.n == other.n and self.arcs == other.arcs)

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={len(self.arcs)})"

    @property
    def m(self) -> int:
        return len(self.arcs)


class UndirectedGraph:
    """Immutable simple graph (no loops, no multi-edges)."""

    __slots__ = ("n", "edges", "adj")

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges: frozenset[tuple[int, int]],
                 adj: tuple[tuple[int, ...], ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("UndirectedGraph is immutable")

    def __eq__(self, other):
        return (isinstance(other, UndirectedGraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])


def from_arcs(n: int, arcs) -> Digraph:
    """Build a digraph on n vertices from an iterable of ordered pairs."""
    if n < 1:
        raise IndexOutOfRange("vertex count must be at least 1")
    seen = set()
    outs: list[list[int]] = [[] for _ in range(n)]
    ins: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"arc endpoint out of range: ({u}, {v})")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        if (u, v) in seen:
            raise DuplicateArc(f"duplicate arc ({u}, {v})")
        seen.add((u, v))
        outs[u].append(v)
        ins[v].append(u)
    return Digraph(n, frozenset(seen),
                   tuple(tuple(sorted(o)) for o in outs),
                   tuple(tuple(sorted(i)) for i in ins))


def graph_from_edges(n: int, edges) -> UndirectedGraph:
    """Build a simple graph on n vertices from an iterable of pairs."""
    if n < 1:
        raise IndexOutOfRange("vertex count must be at least 1")
    norm = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        norm.add((min(u, v), max(u, v)))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in norm:
        adj[u].append(v)
        adj[v].append(u)
    return UndirectedGraph(n, frozenset(norm),
                           tuple(tuple(sorted(a)) for a in adj))


def reverse(g: Digraph) -> Digraph:
    """All arcs reversed; an involution."""
    return Digraph(g.n, frozenset((v, u) for u, v in g.arcs),
                   g.in_adj, g.out_adj)


def underlying(g: Digraph) -> UndirectedGraph:
    """Symmetric closure of the arc relation, as a simple graph."""
    return graph_from_edges(g.n, g.arcs)


def degrees(g: Digraph, v: int) -> tuple[int, int]:
    """(in_degree, out_degree) of v."""
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} out of range")
    return len(g.in_adj[v]), len(g.out_adj[v])


def is_connected(g: Digraph) -> bool:
    """True iff the underlying graph has one component."""
    seen = bytearray(g.n)
    stack = [0]
    seen[0] = 1
    count = 1
    while stack:
        v = stack.pop()
        for w in g.out_adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
        for w in g.in_adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def strongly_connected_components(g: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            recurse = False
            out = g.out_adj[v]
            while pi < len(out):
                w = out[pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
    return comps


def is_strongly_connected(g: Digraph) -> bool:
    return len(strongly_connected_components(g)) == 1


def is_bipartite(g: Digraph) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | None]:
    """2-colourability of the underlying graph, with a witness bipartition."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for w in g.out_adj[v] + g.in_adj[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False, None
    part0 = frozenset(v for v in range(g.n) if colour[v] == 0)
    part1 = frozenset(v for v in range(g.n) if colour[v] == 1)
    return True, (part0, part1)


def delete_vertex(g: Digraph, v: int) -> Digraph:
    """Remove v and its incident arcs; vertices above v shift down by one."""
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} out of range")
    if g.n < 2:
        raise LastVertex("cannot delete the only vertex")
    def ren(w: int) -> int:
        return w if w < v else w - 1
    return from_arcs(g.n - 1, [(ren(a), ren(b)) for a, b in g.arcs
                               if a != v and b != v])


def cartesian_product(g: Digraph, h: Digraph) -> Digraph:
    """Vertex (a, x) is index a*h.n + x; arcs move in one coordinate."""
    m = h.n
    arcs = []
    for a in range(g.n):
        for x in range(h.n):
            base = a * m + x
            for y in h.out_adj[x]:
                arcs.append((base, a * m + y))
            for b in g.out_adj[a]:
                arcs.append((base, b * m + x))
    return from_arcs(g.n * m, arcs)


def is_oriented(g: Digraph) -> bool:
    """No pair of opposite arcs (loops are unrepresentable)."""
    return all((v, u) not in g.arcs for u, v in g.arcs)


def is_diregular(g: Digraph, k: int) -> bool:
    """Every vertex has in- and out-degree exactly k."""
    return all(len(g.out_adj[v]) == k and len(g.in_adj[v]) == k
               for v in range(g.n))


def graph_is_connected(graph: UndirectedGraph) -> bool:
    seen = bytearray(graph.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in graph.adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == graph.n


def dicycle(n: int) -> Digraph:
    """Directed cycle 0 -> 1 -> ... -> n-1 -> 0."""
    return from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> UndirectedGraph:
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def as_symmetric_digraph(graph: UndirectedGraph) -> Digraph:
    """View a graph as the digraph with both arc directions on every edge."""
    arcs = []
    for u, v in graph.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return from_arcs(graph.n, arcs)
