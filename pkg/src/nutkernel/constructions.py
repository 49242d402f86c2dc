"""Construction schemes that grow nut digraphs, with checked postconditions.

Every constructor re-classifies its output where a guarantee applies and
raises TheoremViolation on mismatch, so the guarantees stay machine-checked
at fixture scale rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, UndirectedGraph, from_arcs, graph_from_edges
from .errors import (ArityMismatch, CompatibilityError, DemandMismatch,
                     IndexOutOfRange, NoSuchArc, NotAmbiNut, TheoremViolation,
                     UnequalKernelEntries)
from .linalg import (RatMatrix, eigenspace_basis, adjacency_matrix, is_full,
                     kernel_basis)
from .spectral import Gadget, as_gadget, classify, local_sums


@dataclass(frozen=True)
class BaseDigraph:
    """Digraph with an integer eigenvalue whose left and right eigenspaces
    are one-dimensional and spanned by the same full vector."""

    digraph: Digraph
    eigenvalue: int
    eigvec: tuple[int, ...]


@dataclass(frozen=True)
class UndirectedGadget:
    graph: UndirectedGraph
    root: int
    defining_vector: tuple[int, ...]
    demand: Fraction


def subdivide_arc(g: Digraph, u: int, v: int, verify: bool = True) -> Digraph:
    """Replace arc u->v by a 4-vertex widget preserving inter-nut status.

    New vertices are appended in the order u', u'', v', v''.  When the
    input is an inter-nut digraph the output is checked to be inter-nut
    and not ambi-nut, with the extension values of the witness vector.
    """
    if (u, v) not in g.arcs:
        raise NoSuchArc(f"no arc ({u}, {v})")
    n = g.n
    up, upp, vp, vpp = n, n + 1, n + 2, n + 3
    arcs = [a for a in g.arcs if a != (u, v)]
    arcs += [(u, vpp), (up, vpp), (up, vp), (upp, vp), (upp, v)]
    out = from_arcs(n + 4, arcs)
    if verify:
        rep_in = classify(g)
        if rep_in.is_inter_nut:
            rep = classify(out)
            if not rep.is_inter_nut or rep.is_ambi_nut:
                raise TheoremViolation("subdivision broke inter-nut status")
            x = rep_in.inter_witness
            ext = list(x) + [-x[u], x[u], -x[v], x[v]]
            for w in range(out.n):
                if local_sums(out, ext, w) != (0, 0):
                    raise TheoremViolation("extended witness fails local sums")
    return out


def _merge(g: Digraph, v: int, h: Digraph, u: int) -> Digraph:
    """Disjoint union with u identified into v (set semantics on arcs)."""
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} out of range")
    if not 0 <= u < h.n:
        raise IndexOutOfRange(f"vertex {u} out of range")

    def ren(w: int) -> int:
        if w == u:
            return v
        return g.n + w - (1 if w > u else 0)

    arcs = set(g.arcs)
    arcs.update((ren(a), ren(b)) for a, b in h.arcs)
    return from_arcs(g.n + h.n - 1, arcs)


def coalesce(g: Digraph, v: int, h: Digraph, u: int,
             verify: bool = True) -> Digraph:
    """Identify vertex u of h with vertex v of g.

    If both operands are bi-nut the result is checked bi-nut; if both are
    ambi-nut, ambi-nut.
    """
    out = _merge(g, v, h, u)
    if verify:
        rep_g = classify(g)
        rep_h = classify(h)
        if rep_g.is_bi_nut and rep_h.is_bi_nut:
            rep = classify(out)
            if not rep.is_bi_nut:
                raise TheoremViolation("coalescence of bi-nuts not bi-nut")
            if rep_g.is_ambi_nut and rep_h.is_ambi_nut and not rep.is_ambi_nut:
                raise TheoremViolation("coalescence of ambi-nuts not ambi-nut")
    return out


def crossover(g: Digraph, u: int, v: int, h: Digraph, s: int, t: int,
              require: str | None = None) -> Digraph:
    """Swap the heads of arcs u->v of g and s->t of h.

    require: None auto-detects (both operands ambi-nut: enforce witness
    compatibility and check the output); "ambi" insists on ambi operands;
    "bi" is the experimental bi-nut variant requiring kernel and cokernel
    compatibility; "raw" skips all checks.
    """
    if (u, v) not in g.arcs:
        raise NoSuchArc(f"no arc ({u}, {v}) in first operand")
    if (s, t) not in h.arcs:
        raise NoSuchArc(f"no arc ({s}, {t}) in second operand")
    off = g.n
    arcs = [a for a in g.arcs if a != (u, v)]
    arcs += [(a + off, b + off) for a, b in h.arcs if (a, b) != (s, t)]
    arcs += [(u, t + off), (s + off, v)]
    out = from_arcs(g.n + h.n, arcs)
    if require == "raw":
        return out
    rep_g = classify(g)
    rep_h = classify(h)
    if require == "ambi" and not (rep_g.is_ambi_nut and rep_h.is_ambi_nut):
        raise NotAmbiNut("crossover operands must be ambi-nut digraphs")
    if require == "bi" and not (rep_g.is_bi_nut and rep_h.is_bi_nut):
        raise NotAmbiNut("bi crossover operands must be bi-nut digraphs")
    if rep_g.is_ambi_nut and rep_h.is_ambi_nut:
        x, y = rep_g.ker_witness, rep_h.ker_witness
        mu = Fraction(x[u], y[s])
        if x[v] != mu * y[t]:
            raise CompatibilityError(
                f"kernel values ({x[u]}, {x[v]}) vs ({y[s]}, {y[t]})")
        rep = classify(out)
        if not rep.is_ambi_nut:
            raise TheoremViolation("compatible crossover not ambi-nut")
        z = [Fraction(c) for c in x] + [mu * c for c in y]
        for w in range(out.n):
            if local_sums(out, z, w) != (0, 0):
                raise TheoremViolation("concatenated witness fails local sums")
    elif require == "bi":
        xk, yk = rep_g.ker_witness, rep_h.ker_witness
        xc, yc = rep_g.coker_witness, rep_h.coker_witness
        mu = Fraction(xk[u], yk[s])
        nu = Fraction(xc[u], yc[s])
        if xk[v] != mu * yk[t] or xc[v] != nu * yc[t]:
            raise CompatibilityError("kernel/cokernel values incompatible")
        if not classify(out).is_bi_nut:
            raise TheoremViolation("compatible bi crossover not bi-nut")
    return out


def gadget_from_ambi(h: Digraph, u1: int, u2: int) -> Gadget:
    """Split an equal-kernel-entry arc of an ambi-nut through a new root.

    The new vertex u0 takes the place of the arc u1->u2; the resulting
    rooted digraph is a gadget of demand -1.
    """
    rep = classify(h)
    if not rep.is_ambi_nut:
        raise NotAmbiNut("operand must be an ambi-nut digraph")
    if (u1, u2) not in h.arcs:
        raise NoSuchArc(f"no arc ({u1}, {u2})")
    x = rep.ker_witness
    if x[u1] != x[u2]:
        raise UnequalKernelEntries(f"kernel entries {x[u1]} != {x[u2]}")
    u0 = h.n
    arcs = [a for a in h.arcs if a != (u1, u2)]
    arcs += [(u1, u0), (u0, u2)]
    gad = as_gadget(from_arcs(h.n + 1, arcs), u0)
    if gad is None or gad.demand != -1:
        raise TheoremViolation("arc split did not produce a demand -1 gadget")
    return gad


def equal_entry_arc(g: Digraph, x) -> tuple[int, int] | None:
    """First arc whose endpoints carry equal entries of x, if any."""
    for u, v in sorted(g.arcs):
        if x[u] == x[v]:
            return (u, v)
    return None


def coalesce_gadgets(gadgets) -> Gadget:
    """Root-coalescence; demands add exactly."""
    gadgets = list(gadgets)
    if not gadgets:
        raise ArityMismatch("need at least one gadget")
    acc = gadgets[0]
    for nxt in gadgets[1:]:
        merged = _merge(acc.digraph, acc.root, nxt.digraph, nxt.root)
        gad = as_gadget(merged, acc.root)
        if gad is None or gad.demand != acc.demand + nxt.demand:
            raise TheoremViolation("gadget coalescence demand mismatch")
        acc = gad
    return acc


def validate_base(g: Digraph, lam: int) -> BaseDigraph | None:
    """Accept g as a multiplier base for eigenvalue lam, or return None."""
    a = adjacency_matrix(g)
    b1 = eigenspace_basis(a, lam)
    if b1.dim != 1:
        return None
    b2 = eigenspace_basis(a.transpose(), lam)
    if b2.dim != 1 or b1 != b2:
        return None
    vec = b1.vectors[0]
    if not is_full(vec):
        return None
    return BaseDigraph(g, lam, vec)


def multiplier(base: BaseDigraph, gadgets) -> Digraph:
    """Glue one demand-lam gadget root onto every base vertex; ambi output."""
    gadgets = list(gadgets)
    g = base.digraph
    if len(gadgets) != g.n:
        raise ArityMismatch(f"need {g.n} gadgets, got {len(gadgets)}")
    for gad in gadgets:
        if gad.demand != base.eigenvalue:
            raise DemandMismatch(
                f"gadget demand {gad.demand} != eigenvalue {base.eigenvalue}")
    arcs = list(g.arcs)
    offset = g.n
    expected: list[Fraction] = [Fraction(c) for c in base.eigvec]
    for i, gad in enumerate(gadgets):
        mapping = {}
        for w in range(gad.digraph.n):
            if w == gad.root:
                mapping[w] = i
            else:
                mapping[w] = offset
                offset += 1
        scale = Fraction(base.eigvec[i], gad.defining_vector[gad.root])
        for w in range(gad.digraph.n):
            if w != gad.root:
                expected.append(scale * gad.defining_vector[w])
        arcs.extend((mapping[a], mapping[b]) for a, b in gad.digraph.arcs)
    out = from_arcs(offset, arcs)
    rep = classify(out)
    if not rep.is_ambi_nut:
        raise TheoremViolation("multiplier output not ambi-nut")
    for w in range(out.n):
        if local_sums(out, expected, w) != (0, 0):
            raise TheoremViolation("assembled witness fails local sums")
    return out


def _graph_matrix(graph: UndirectedGraph) -> RatMatrix:
    rows = []
    for i in range(graph.n):
        row = [0] * graph.n
        for j in graph.adj[i]:
            row[j] = 1
        rows.append(tuple(row))
    return RatMatrix(tuple(rows))


def undirected_gadget(graph: UndirectedGraph, r: int) -> UndirectedGadget | None:
    """Rooted graph whose root-row-deleted kernel is 1-dimensional and full."""
    if not 0 <= r < graph.n:
        raise IndexOutOfRange(f"vertex {r} out of range")
    a = _graph_matrix(graph)
    basis = kernel_basis(RatMatrix(a.rows[:r] + a.rows[r + 1:]))
    if basis.dim != 1:
        return None
    vec = basis.vectors[0]
    if not is_full(vec):
        return None
    if vec[r] < 0:
        vec = tuple(-x for x in vec)
    s = sum(vec[w] for w in graph.adj[r])
    return UndirectedGadget(graph, r, vec, Fraction(-s, vec[r]))


def undirected_multiplier(base_graph: UndirectedGraph, lam: int,
                          gadgets) -> UndirectedGraph:
    """Undirected analogue of the multiplier; the output is a nut graph."""
    gadgets = list(gadgets)
    n = base_graph.n
    if len(gadgets) != n:
        raise ArityMismatch(f"need {n} gadgets, got {len(gadgets)}")
    basis = eigenspace_basis(_graph_matrix(base_graph), lam)
    if basis.dim != 1 or not is_full(basis.vectors[0]):
        raise DemandMismatch(f"{lam} is not a simple full eigenvalue of the base")
    for gad in gadgets:
        if gad.demand != lam:
            raise DemandMismatch(f"gadget demand {gad.demand} != {lam}")
    edges = list(base_graph.edges)
    offset = n
    for i, gad in enumerate(gadgets):
        mapping = {}
        for w in range(gad.graph.n):
            if w == gad.root:
                mapping[w] = i
            else:
                mapping[w] = offset
                offset += 1
        edges.extend((mapping[a], mapping[b]) for a, b in gad.graph.edges)
    out = graph_from_edges(offset, edges)
    from .enumeration import is_nut_graph
    if not is_nut_graph(out):
        raise TheoremViolation("undirected multiplier output not a nut graph")
    return out


def is_cut_arc(g: Digraph, u: int, v: int) -> bool:
    """Does removing arc u->v disconnect the underlying graph?"""
    if (u, v) not in g.arcs:
        raise NoSuchArc(f"no arc ({u}, {v})")
    from .digraph import graph_is_connected, underlying
    rest = from_arcs(g.n, [a for a in g.arcs if a != (u, v)])
    return not graph_is_connected(underlying(rest))


def has_cut_arc(g: Digraph) -> bool:
    return any(is_cut_arc(g, u, v) for u, v in g.arcs)
