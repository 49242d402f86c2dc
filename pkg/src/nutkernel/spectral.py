"""Nut-class and core-vertex classification of digraphs.

The class flags follow the containment lattice: ambi implies bi implies
dextro and laevo; ambi implies inter; an inter digraph that is dextro
(or laevo) is automatically ambi.  The order-1 digraph is excluded from
every class and from the core flags, mirroring the undirected custom.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, UndirectedGraph, delete_vertex, is_bipartite, reverse
from .errors import (DegreeViolation, DimensionMismatch, IndexOutOfRange,
                     NotSingular, TheoremViolation)
from .linalg import (KernelBasis, RatMatrix, adjacency_matrix, full_vector_witness,
                     is_full, kernel_basis, stack)


@dataclass(frozen=True)
class NutReport:
    nullity: int
    is_dextro_nut: bool
    is_laevo_nut: bool
    is_bi_nut: bool
    is_ambi_nut: bool
    is_inter_nut: bool
    is_dextro_core: bool
    is_laevo_core: bool
    is_bi_core: bool
    is_ambi_core: bool
    is_inter_core: bool
    ker_witness: tuple[int, ...] | None
    coker_witness: tuple[int, ...] | None
    inter_witness: tuple[int, ...] | None


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    dextro_core: bool
    laevo_core: bool
    deletion_nullity: int | None = None
    stratum: str | None = None


@dataclass(frozen=True)
class Gadget:
    """Rooted digraph whose root-row-deleted kernels share one full vector."""

    digraph: Digraph
    root: int
    defining_vector: tuple[int, ...]
    demand: Fraction


def _check_zero_sums(adj, basis: KernelBasis) -> KernelBasis:
    # independent of the elimination: re-add each neighbourhood directly
    for vec in basis.vectors:
        for nbrs in adj:
            if sum(vec[u] for u in nbrs):
                raise TheoremViolation("kernel vector fails a local sum")
    return basis


def kernel(g: Digraph) -> KernelBasis:
    """Vectors whose out-neighbour sums vanish at every vertex."""
    basis = kernel_basis(adjacency_matrix(g))
    if __debug__:
        _check_zero_sums(g.out_adj, basis)
    return basis


def cokernel(g: Digraph) -> KernelBasis:
    """Vectors whose in-neighbour sums vanish at every vertex."""
    basis = kernel_basis(adjacency_matrix(reverse(g)))
    if __debug__:
        _check_zero_sums(g.in_adj, basis)
    return basis


def local_sums(g: Digraph, x, v: int) -> tuple[Fraction, Fraction]:
    """Out- and in-neighbourhood sums of x at v."""
    if len(x) != g.n:
        raise DimensionMismatch(f"vector length {len(x)} != order {g.n}")
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} out of range")
    s_plus = sum((x[u] for u in g.out_adj[v]), Fraction(0))
    s_minus = sum((x[u] for u in g.in_adj[v]), Fraction(0))
    return s_plus, s_minus


def _intersection_basis(a: RatMatrix, bk: KernelBasis, bc: KernelBasis) -> KernelBasis:
    if bk.dim == 0:
        return KernelBasis(bk.ambient_dim, (), ())
    if bk == bc:
        return bk
    if bk.dim == 1 and bc.dim == 1:
        # Distinct one-dimensional canonical subspaces meet trivially.
        return KernelBasis(bk.ambient_dim, (), ())
    return kernel_basis(stack(a, a.transpose()))


def classify(g: Digraph) -> NutReport:
    """Full nut/core classification with canonical witness vectors."""
    a = adjacency_matrix(g)
    bk = kernel_basis(a)
    bc = kernel_basis(a.transpose())
    if bk.dim != bc.dim:
        raise TheoremViolation("kernel and cokernel dimensions differ")
    nullity = bk.dim
    if g.n == 1:
        # The order-1 digraph is excluded from all nut and core classes.
        return NutReport(nullity, *([False] * 10), None, None, None)
    ker_wit = full_vector_witness(bk)
    coker_wit = full_vector_witness(bc)
    inter = _intersection_basis(a, bk, bc)
    inter_wit = full_vector_witness(inter)

    dextro = nullity == 1 and ker_wit is not None
    laevo = nullity == 1 and coker_wit is not None
    bi = dextro and laevo
    ambi = bi and bk == bc
    inter_nut = inter.dim == 1 and inter_wit is not None

    dextro_core = ker_wit is not None
    laevo_core = coker_wit is not None
    bi_core = dextro_core and laevo_core
    ambi_core = dextro_core and bk == bc
    inter_core = inter_wit is not None

    return NutReport(nullity, dextro, laevo, bi, ambi, inter_nut,
                     dextro_core, laevo_core, bi_core, ambi_core, inter_core,
                     ker_wit, coker_wit, inter_wit)


def core_vertices(g: Digraph) -> list[VertexProfile]:
    """Per-vertex dextro/laevo core status of a singular digraph."""
    bk = kernel(g)
    if bk.dim == 0:
        raise NotSingular("digraph is non-singular")
    bc = cokernel(g)
    ker_sup = bk.support()
    coker_sup = bc.support()
    return [VertexProfile(v, v in ker_sup, v in coker_sup)
            for v in range(g.n)]


def classify_deletion(g: Digraph, v: int) -> VertexProfile:
    """Delete v, measure the nullity change, and check it against the
    four-case table for core/forbidden vertex pairs.

    A TheoremViolation here signals an implementation bug, never data.
    """
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} out of range")
    if g.n < 2:
        raise NotSingular("need at least 2 vertices")
    bk = kernel(g)
    if bk.dim == 0:
        raise NotSingular("digraph is non-singular")
    bc = cokernel(g)
    eta = bk.dim
    dc = v in bk.support()
    lc = v in bc.support()
    eta_del = kernel(delete_vertex(g, v)).dim
    if dc and lc:
        if eta_del != eta - 1:
            raise TheoremViolation(f"core/core deletion: {eta} -> {eta_del}")
        stratum = "core-core"
    elif dc or lc:
        if eta_del != eta:
            raise TheoremViolation(f"mixed deletion: {eta} -> {eta_del}")
        stratum = "mixed"
    else:
        if eta_del == eta:
            stratum = "middle"
        elif eta_del == eta + 1:
            stratum = "upper"
        else:
            raise TheoremViolation(f"forbidden/forbidden deletion: {eta} -> {eta_del}")
        if is_bipartite(g)[0] and stratum != "upper":
            raise TheoremViolation("bipartite forbidden/forbidden vertex must be upper")
    return VertexProfile(v, dc, lc, eta_del, stratum)


def pm_one_kernel(g: Digraph):
    """Propagate the sign constraint of 2-out digraphs from vertex 0.

    Every vertex must have out-degree exactly 2; the two out-neighbours of
    any vertex are forced to carry opposite signs.  Returns the +-1 vector
    if the propagation labels all vertices consistently, else None.
    """
    n = g.n
    for v in range(n):
        if len(g.out_adj[v]) != 2:
            raise DegreeViolation(f"vertex {v} has out-degree {len(g.out_adj[v])}")
    label = [0] * n
    label[0] = 1
    changed = True
    while changed:
        changed = False
        for v in range(n):
            a, b = g.out_adj[v]
            if label[a] and not label[b]:
                label[b] = -label[a]
                changed = True
            elif label[b] and not label[a]:
                label[a] = -label[b]
                changed = True
    if not all(label):
        return None
    for v in range(n):
        a, b = g.out_adj[v]
        if label[a] + label[b] != 0:
            return None
    return tuple(label)


def pm_one_cokernel(g: Digraph):
    """Dual propagation over in-neighbourhoods (requires in-degree 2)."""
    return pm_one_kernel(reverse(g))


def _drop_row(m: RatMatrix, r: int) -> RatMatrix:
    return RatMatrix(m.rows[:r] + m.rows[r + 1:])


def as_gadget(g: Digraph, r: int) -> Gadget | None:
    """Recognize (g, r) as a gadget and compute its demand.

    Requires the kernels of the adjacency matrix and of its transpose,
    each with row r deleted, to be one-dimensional and spanned by a
    common full vector.  Absence of a result means "not a gadget".
    """
    if not 0 <= r < g.n:
        raise IndexOutOfRange(f"vertex {r} out of range")
    a = adjacency_matrix(g)
    b1 = kernel_basis(_drop_row(a, r))
    if b1.dim != 1:
        return None
    b2 = kernel_basis(_drop_row(a.transpose(), r))
    if b2.dim != 1 or b1 != b2:
        return None
    vec = b1.vectors[0]
    if not is_full(vec):
        return None
    if vec[r] < 0:
        vec = tuple(-x for x in vec)
    s_plus, s_minus = local_sums(g, vec, r)
    if s_plus != s_minus:
        raise TheoremViolation("gadget out- and in-sums differ at the root")
    return Gadget(g, r, vec, Fraction(-s_plus, vec[r]))


def graph_kernel(graph: UndirectedGraph) -> KernelBasis:
    """Kernel of the symmetric adjacency matrix of a simple graph."""
    rows = []
    for i in range(graph.n):
        row = [0] * graph.n
        for j in graph.adj[i]:
            row[j] = 1
        rows.append(tuple(row))
    return kernel_basis(RatMatrix(tuple(rows)))
