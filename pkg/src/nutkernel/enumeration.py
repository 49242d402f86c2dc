"""Isomorph-free exhaustive generation and nut-class censuses.

Underlying graphs grow one vertex at a time with canonical-form dedup per
level; only non-empty attachment neighbourhoods are used, which keeps
every intermediate connected and still reaches every connected graph
(delete a non-cut vertex to find a parent).  Orientations are counted one
representative per orbit of the automorphism group acting on edge-state
strings: a vectorized scan keeps the numeric minimum of each orbit, and a
DFS with incremental orbit-comparison frontiers covers the highly
symmetric cases.  Classification is batched through the rigorous modular
filter; ambi candidates are confirmed with exact rational arithmetic.

Edge states: 0 = arc from the smaller endpoint, 1 = arc from the larger,
2 = both arcs (only in the bidirected mode).
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from multiprocessing import get_context

import numpy as np

from . import canon, modclass
from .digraph import Digraph, UndirectedGraph, from_arcs
from .errors import CapExceeded
from .formats import emit_digraph6
from .spectral import classify, graph_kernel

_GENERAL_ORDER_CAP = 12
_REGULAR_ORDER_CAP = 16
_EDGE_CAP = 40
_NUMPY_SPACE_CAP = 1 << 24
_NUMPY_AUT_CAP = 64
_CHUNK = 1 << 16


@dataclass(frozen=True)
class GenConstraints:
    order: int
    connected: bool = True
    regularity: int | None = None
    min_degree: int | None = None
    tournament: bool = False
    degree_bounds: bool = False
    oriented_only: bool = True
    core_filter: bool = False
    underlying: UndirectedGraph | None = None  # census over one fixed graph


@dataclass
class CensusRow:
    n: int
    counts: dict[str, int]
    elapsed: float
    generated_underlying: int
    generated_oriented: int
    good_cores: int
    certificates: dict[str, list] = field(default_factory=dict)


def automorphism_group(graph: UndirectedGraph) -> list[tuple[int, ...]]:
    """All automorphisms of a graph on at most 12 vertices."""
    if graph.n > _GENERAL_ORDER_CAP:
        raise CapExceeded(f"automorphism listing capped at {_GENERAL_ORDER_CAP}")
    return canon.automorphisms_graph(graph)


def canonical_digraph(g: Digraph) -> bytes:
    """digraph6 encoding of the canonically labeled digraph."""
    if g.n > _GENERAL_ORDER_CAP:
        raise CapExceeded(f"canonical form capped at {_GENERAL_ORDER_CAP}")
    return _canonical_digraph6(g)


def _canonical_digraph6(g: Digraph) -> bytes:
    order = canon.canonical_order_digraph(g)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    return emit_digraph6(from_arcs(g.n, [(pos[u], pos[v]) for u, v in g.arcs])).encode()


def is_core_graph(graph: UndirectedGraph) -> bool:
    """Singular graph whose kernel supports every vertex (order 1 excluded)."""
    if graph.n < 2:
        return False
    basis = graph_kernel(graph)
    return basis.dim >= 1 and len(basis.support()) == graph.n


def is_nut_graph(graph: UndirectedGraph) -> bool:
    if graph.n < 2:
        return False
    basis = graph_kernel(graph)
    return basis.dim == 1 and len(basis.support()) == graph.n


def _core_filter(graphs: list[UndirectedGraph]) -> list[UndirectedGraph]:
    """Core graphs only; a batched singularity filter feeds the exact test."""
    if not graphs:
        return []
    out = []
    n = graphs[0].n
    for start in range(0, len(graphs), _CHUNK):
        chunk = graphs[start:start + _CHUNK]
        mats = np.zeros((len(chunk), n, n), dtype=np.uint8)
        for i, g in enumerate(chunk):
            for u, v in g.edges:
                mats[i, u, v] = 1
                mats[i, v, u] = 1
        nullity = modclass.nullity_mod(mats)
        out.extend(g for i, g in enumerate(chunk)
                   if nullity[i] >= 1 and is_core_graph(g))
    return out


# --------------------------------------------------------------------------
# underlying-graph generation
# --------------------------------------------------------------------------

def _expand_parent(data: bytes, target_n: int, regular, min_degree):
    """All canonical children of one parent (may repeat across parents)."""
    parent = canon.graph_from_canonical_bytes(data)
    k = parent.n
    future = target_n - (k + 1)
    need = regular if regular is not None else (min_degree or 0)
    cap = regular if regular is not None else target_n - 1
    deg = [parent.degree(v) for v in range(k)]
    forced = [v for v in range(k) if deg[v] < need - future]
    if any(deg[v] >= cap for v in forced):
        return []
    optional = [v for v in range(k) if deg[v] < cap and v not in forced]
    lo = max(1, need - future, len(forced))
    hi = min(cap, k)
    if lo > hi:
        return []
    auts = canon.automorphisms_graph(parent)
    nontrivial = [p for p in auts if p != tuple(range(k))]
    forced_mask = 0
    for v in forced:
        forced_mask |= 1 << v
    out = []
    from itertools import combinations
    for extra in range(0, hi - len(forced) + 1):
        size = len(forced) + extra
        if size < lo or size > hi:
            continue
        for combo in combinations(optional, extra):
            mask = forced_mask
            for v in combo:
                mask |= 1 << v
            if nontrivial:
                image_min = mask
                skip = False
                for perm in nontrivial:
                    img = 0
                    mm = mask
                    while mm:
                        low = mm & -mm
                        img |= 1 << perm[low.bit_length() - 1]
                        mm ^= low
                    if img < mask:
                        skip = True
                        break
                if skip:
                    continue
            if regular is not None:
                d_child = deg[:]
                mm = mask
                while mm:
                    low = mm & -mm
                    d_child[low.bit_length() - 1] += 1
                    mm ^= low
                deficiency = sum(regular - d for d in d_child) + (regular - size)
                f2 = future
                if deficiency > regular * f2 or deficiency < regular * f2 - f2 * (f2 - 1):
                    continue
            child_edges = list(parent.edges)
            mm = mask
            while mm:
                low = mm & -mm
                child_edges.append((low.bit_length() - 1, k))
                mm ^= low
            from .digraph import graph_from_edges
            child = graph_from_edges(k + 1, child_edges)
            out.append(canon.canonical_graph_bytes(child))
    return out


def _expand_chunk(args):
    chunk, target_n, regular, min_degree = args
    seen = set()
    for data in chunk:
        seen.update(_expand_parent(data, target_n, regular, min_degree))
    return seen


def _grow_levels(n: int, regular=None, min_degree=None, pool=None):
    from .digraph import graph_from_edges
    level = {canon.canonical_graph_bytes(graph_from_edges(1, []))}
    for k in range(1, n):
        parents = sorted(level)
        if pool is not None and len(parents) > 256:
            nw = getattr(pool, "_processes", 2)
            chunks = [parents[i::nw * 4] for i in range(nw * 4)]
            tasks = [(c, n, regular, min_degree) for c in chunks if c]
            level = set()
            for part in pool.imap_unordered(_expand_chunk, tasks):
                level |= part
        else:
            level = _expand_chunk((parents, n, regular, min_degree))
    return sorted(level)


def _grow_levels_filtered(constraints: GenConstraints, pool=None):
    """Reference generator: level-by-level canonical dedup (cross-check)."""
    n = constraints.order
    for data in _grow_levels(n, constraints.regularity, constraints.min_degree,
                             pool=pool):
        graph = canon.graph_from_canonical_bytes(data)
        if constraints.regularity is not None and \
                any(graph.degree(v) != constraints.regularity for v in range(n)):
            continue
        if constraints.min_degree is not None and \
                any(graph.degree(v) < constraints.min_degree for v in range(n)):
            continue
        yield graph


# -- canonical-augmentation DFS ---------------------------------------------

def _stable_colors(masks: list[int], j: int) -> list[int]:
    """Iso-invariant colour index per vertex.

    Seeded with (degree, edge count inside the neighbourhood) so that most
    regular graphs split, then refined by neighbour-colour multisets until
    stable.  Class indices follow the sorted signature order, so equal
    colours across isomorphic graphs correspond.
    """
    seeds = []
    for v in range(j):
        mv = masks[v]
        tri = 0
        mm = mv
        while mm:
            low = mm & -mm
            tri += (masks[low.bit_length() - 1] & mv).bit_count()
            mm ^= low
        seeds.append((mv.bit_count(), tri))
    rank = {s: i for i, s in enumerate(sorted(set(seeds)))}
    colors = [rank[s] for s in seeds]
    nclasses = len(rank)
    if nclasses == j:
        return colors
    while True:
        sigs = []
        for v in range(j):
            mm = masks[v]
            sig = []
            while mm:
                low = mm & -mm
                sig.append(colors[low.bit_length() - 1])
                mm ^= low
            sig.sort()
            sigs.append((colors[v], tuple(sig)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(rank) == nclasses:
            return colors
        nclasses = len(rank)
        colors = [rank[s] for s in sigs]
        if nclasses == j:
            return colors


def _mask_connected_without(masks, j, skip) -> bool:
    full = (1 << j) - 1 & ~(1 << skip)
    if full == 0:
        return True
    start = (full & -full).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        mm = frontier
        while mm:
            low = mm & -mm
            nxt |= masks[low.bit_length() - 1]
            mm ^= low
        nxt &= full & ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen == full


def _feasible_state(degcounts, j, n, need, regular) -> bool:
    future = n - j
    for d in degcounts:
        if need - d > future:
            return False
    if regular is not None:
        deficiency = regular * j - sum(degcounts)
        if deficiency > regular * future or \
                deficiency < regular * future - future * (future - 1):
            return False
    return True


def _candidate_sets(masks, degs, j, n, need, cap, regular):
    """Neighbourhood bitmasks for a new vertex, before orbit reduction."""
    future_after = n - (j + 1)
    forced = 0
    optional = []
    for v in range(j):
        if degs[v] >= cap:
            continue  # saturated vertices take no further edges
        if need - degs[v] > future_after:
            forced |= 1 << v
        else:
            optional.append(v)
    nforced = forced.bit_count()
    lo = max(1, need - future_after, nforced)
    hi = min(cap, j)
    if lo > hi:
        return
    from itertools import combinations
    for extra in range(0, hi - nforced + 1):
        size = nforced + extra
        if size < lo or size > hi:
            continue
        for combo in combinations(optional, extra):
            mask = forced
            for v in combo:
                mask |= 1 << v
            yield mask


def _accept_child(masks, degs, j1, n, need, regular):
    """Is the newest vertex (index j1-1) the canonical construction choice?

    The canonical deletion vertex is drawn from the non-cut vertices of
    minimum degree whose removal leaves a feasible state; ties are broken
    by refinement colour and then by canonical position.  All criteria are
    isomorphism-invariant, and for completable states every non-cut vertex
    leaves a feasible remainder, so the choice set is never empty.
    """
    new = j1 - 1
    dnew = degs[new]

    def deletable(v):
        dc = [degs[w] - ((masks[v] >> w) & 1) for w in range(j1) if w != v]
        return (_feasible_state(dc, j1 - 1, n, need, regular)
                and _mask_connected_without(masks, j1, v))

    # any deletable vertex of smaller degree preempts the new vertex;
    # scan the smallest degrees first (degree-1 vertices are never cut)
    smaller = sorted((v for v in range(j1 - 1) if degs[v] < dnew),
                     key=lambda v: degs[v])
    for v in smaller:
        if deletable(v):
            return False
    eligible = [v for v in range(j1 - 1) if degs[v] == dnew and deletable(v)]
    if not eligible:
        return True  # the new vertex is the unique choice
    eligible.append(new)
    colors = _stable_colors(masks, j1)
    best = min(colors[v] for v in eligible)
    if colors[new] != best:
        return False
    chosen = [v for v in eligible if colors[v] == best]
    if len(chosen) == 1:
        return True
    # colour ties: break by canonical position, which is iso-invariant;
    # seed the search with the colour classes it must respect anyway
    ncolors = max(colors) + 1
    cells = [[] for _ in range(ncolors)]
    for v in range(j1):
        cells[colors[v]].append(v)
    leaves = canon._canonical_leaves(j1, (tuple(masks),), False, cells=cells)
    pos = [0] * j1
    for p, v in enumerate(leaves[0]):
        pos[v] = p
    target = min(chosen, key=lambda v: pos[v])
    orbit_of_new = {leaf[pos[new]] for leaf in leaves}
    return target in orbit_of_new


def _mckay_children(masks, degs, n, need, cap, regular):
    j = len(masks)
    cands = list(_candidate_sets(masks, degs, j, n, need, cap, regular))
    if not cands:
        return
    colors = _stable_colors(masks, j) if j > 1 else [0]
    if len(set(colors)) != j:
        from .digraph import graph_from_edges
        edges = [(u, v) for u in range(j) for v in range(u + 1, j)
                 if masks[u] >> v & 1]
        auts = canon.automorphisms_graph(graph_from_edges(j, edges))
        nontrivial = [p for p in auts if p != tuple(range(j))]
        if nontrivial:
            keep = []
            for mask in cands:
                minimal = True
                for perm in nontrivial:
                    img = 0
                    mm = mask
                    while mm:
                        low = mm & -mm
                        img |= 1 << perm[low.bit_length() - 1]
                        mm ^= low
                    if img < mask:
                        minimal = False
                        break
                if minimal:
                    keep.append(mask)
            cands = keep
    for mask in cands:
        cmasks = [m | ((mask >> v & 1) << j) for v, m in enumerate(masks)]
        cmasks.append(mask)
        cdegs = [d + (mask >> v & 1) for v, d in enumerate(degs)]
        cdegs.append(mask.bit_count())
        if not _feasible_state(cdegs, j + 1, n, need, regular):
            continue
        if _accept_child(cmasks, cdegs, j + 1, n, need, regular):
            yield cmasks, cdegs


def _mckay_walk(masks, degs, n, need, cap, regular, split_level, out):
    j = len(masks)
    if j == n:
        out.append(tuple(masks))
        return
    if split_level is not None and j == split_level:
        out.append(tuple(masks))
        return
    for cmasks, cdegs in _mckay_children(masks, degs, n, need, cap, regular):
        _mckay_walk(cmasks, cdegs, n, need, cap, regular, split_level, out)


def _mckay_subtree_task(args):
    masks, n, need, cap, regular, final_check = args
    out: list[tuple[int, ...]] = []
    degs = [m.bit_count() for m in masks]
    _mckay_walk(list(masks), degs, n, need, cap, regular, None, out)
    if final_check is not None:
        out = [m for m in out if final_check(m)]
    return out


def _mckay_connected_graphs(n, regular=None, min_degree=None, pool=None,
                            split_level=None):
    """Canonical-augmentation generation of connected graphs."""
    need = regular if regular is not None else (min_degree or 0)
    cap = regular if regular is not None else n - 1
    if n == 1:
        yield [0]
        return
    roots: list[tuple[int, ...]] = []
    if split_level is None and pool is not None and n >= 10:
        split_level = max(8, n - 6)
    _mckay_walk([0], [0], n, need, cap, regular,
                split_level if split_level and split_level < n else None, roots)
    if split_level and split_level < n:
        # dispatch sparse roots first: they own the largest subtrees
        roots.sort(key=lambda masks: sum(m.bit_count() for m in masks))
        tasks = [(masks, n, need, cap, regular, None) for masks in roots]
        results = (pool.imap_unordered(_mckay_subtree_task, tasks)
                   if pool is not None else map(_mckay_subtree_task, tasks))
        for part in results:
            yield from (list(m) for m in part)
    else:
        yield from (list(m) for m in roots)


def gen_connected_graphs(constraints: GenConstraints, pool=None):
    """One representative per isomorphism class of connected graphs."""
    n = constraints.order
    cap = _REGULAR_ORDER_CAP if constraints.regularity is not None else _GENERAL_ORDER_CAP
    if n > cap:
        raise CapExceeded(f"graph generation capped at {cap} vertices")
    if n < 1:
        raise CapExceeded("order must be positive")
    from .digraph import graph_from_edges
    for masks in _mckay_connected_graphs(n, constraints.regularity,
                                         constraints.min_degree, pool=pool):
        degs = [m.bit_count() for m in masks]
        if constraints.regularity is not None and \
                any(d != constraints.regularity for d in degs):
            continue
        if constraints.min_degree is not None and \
                any(d < constraints.min_degree for d in degs):
            continue
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if masks[u] >> v & 1]
        yield graph_from_edges(n, edges)


# --------------------------------------------------------------------------
# orientation enumeration
# --------------------------------------------------------------------------

def _edge_actions(n, edges, auts):
    """Signed edge permutations (inverse map, flip mask) per automorphism."""
    index = {e: i for i, e in enumerate(edges)}
    actions = []
    identity = tuple(range(n))
    for perm in auts:
        if perm == identity:
            continue
        m = len(edges)
        inv = [0] * m
        flip = [0] * m
        for j, (u, v) in enumerate(edges):
            a, b = perm[u], perm[v]
            if a < b:
                k = index[(a, b)]
                f = 0
            else:
                k = index[(b, a)]
                f = 1
            inv[k] = j
            flip[k] = f
        actions.append((tuple(inv), tuple(flip)))
    return actions


def _numpy_orbit_stream(m, arity, actions, chunk=_CHUNK):
    """Yield (B, m) int8 digit arrays, one row per orbit representative."""
    total = arity ** m
    weights = (arity ** np.arange(m, dtype=np.int64))
    acts = [(np.array(inv, dtype=np.int64), np.array(flip, dtype=np.int8))
            for inv, flip in actions]
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        masks = np.arange(start, stop, dtype=np.int64)
        digits = ((masks[:, None] // weights[None, :]) % arity).astype(np.int8)
        if acts:
            keep = np.ones(stop - start, dtype=bool)
            for inv, flip in acts:
                img = digits[:, inv]
                if arity == 2:
                    img = img ^ flip[None, :]
                else:
                    fb = flip[None, :].astype(bool)
                    img = np.where(fb & (img != 2), img ^ 1, img)
                vals = img.astype(np.int64) @ weights
                keep &= masks <= vals
            digits = digits[keep]
        if digits.shape[0]:
            yield digits


def _dfs_orbit_stream(m, arity, actions, degree_ctx=None, chunk=_CHUNK):
    """DFS over edge-state strings keeping orbit minima.

    Each live automorphism action carries a comparison frontier d: positions
    below d compare equal; a position becomes comparable once both it and
    its preimage are decided.  A smaller image kills the branch, a larger
    one retires the action.
    """
    digits = [0] * m
    batch: list[list[int]] = []
    if degree_ctx is not None:
        incid, need, edge_ends = degree_ctx
        n = len(incid)
        out_cnt = [0] * n
        in_cnt = [0] * n
        undecided = [len(x) for x in incid]
    else:
        edge_ends = None
        out_cnt = in_cnt = undecided = need = None

    def feasible(w):
        return (out_cnt[w] + undecided[w] >= need
                and in_cnt[w] + undecided[w] >= need)

    def rec(pos, live):
        if pos == m:
            batch.append(digits[:])
            return
        for g in range(arity):
            digits[pos] = g
            if degree_ctx is not None:
                u, v = edge_ends[pos]
                undecided[u] -= 1
                undecided[v] -= 1
                if g == 0:
                    out_cnt[u] += 1
                    in_cnt[v] += 1
                elif g == 1:
                    out_cnt[v] += 1
                    in_cnt[u] += 1
                else:
                    out_cnt[u] += 1
                    in_cnt[u] += 1
                    out_cnt[v] += 1
                    in_cnt[v] += 1
                ok = feasible(u) and feasible(v)
            else:
                ok = True
            if ok:
                nxt = []
                pruned = False
                for inv, flip, d in live:
                    while d <= pos and inv[d] <= pos:
                        a = digits[inv[d]]
                        if flip[d] and a != 2:
                            a ^= 1
                        b = digits[d]
                        if a < b:
                            pruned = True
                            break
                        if a > b:
                            d = -1
                            break
                        d += 1
                    if pruned:
                        break
                    if d >= 0:
                        nxt.append((inv, flip, d))
                if not pruned:
                    rec(pos + 1, nxt)
            if degree_ctx is not None:
                u, v = edge_ends[pos]
                undecided[u] += 1
                undecided[v] += 1
                if g == 0:
                    out_cnt[u] -= 1
                    in_cnt[v] -= 1
                elif g == 1:
                    out_cnt[v] -= 1
                    in_cnt[u] -= 1
                else:
                    out_cnt[u] -= 1
                    in_cnt[u] -= 1
                    out_cnt[v] -= 1
                    in_cnt[v] -= 1

    rec(0, [(inv, flip, 0) for inv, flip in actions])
    for start in range(0, len(batch), chunk):
        yield np.array(batch[start:start + chunk], dtype=np.int8)


def _degree_arrays(digits, edges, n):
    m = len(edges)
    u_hot = np.zeros((m, n), dtype=np.int16)
    v_hot = np.zeros((m, n), dtype=np.int16)
    for j, (u, v) in enumerate(edges):
        u_hot[j, u] = 1
        v_hot[j, v] = 1
    a0 = (digits == 0).astype(np.int16)
    a1 = (digits == 1).astype(np.int16)
    a2 = (digits == 2).astype(np.int16)
    out = (a0 + a2) @ u_hot + (a1 + a2) @ v_hot
    inn = (a1 + a2) @ u_hot + (a0 + a2) @ v_hot
    return out, inn


def _adjacency_batch(digits, edges, n):
    b = digits.shape[0]
    mats = np.zeros((b, n, n), dtype=np.uint8)
    for j, (u, v) in enumerate(edges):
        col = digits[:, j]
        mats[:, u, v] = col != 1
        mats[:, v, u] = col != 0
    return mats


def _digits_to_digraph(row, edges, n) -> Digraph:
    arcs = []
    for j, (u, v) in enumerate(edges):
        g = row[j]
        if g != 1:
            arcs.append((u, v))
        if g != 0:
            arcs.append((v, u))
    return from_arcs(n, arcs)


def orientations(graph: UndirectedGraph, prune: bool = False,
                 allow_bidirected: bool = False):
    """One digraph per orbit of edge-state assignments of the graph.

    With prune=True only digraphs with minimum in- and out-degree at least
    2 are produced (the degree bound satisfied by every bi-nut digraph).
    """
    edges = sorted(graph.edges)
    if len(edges) > _EDGE_CAP:
        raise CapExceeded(f"orientation search capped at {_EDGE_CAP} edges")
    arity = 3 if allow_bidirected else 2
    for digits in _orientation_digit_stream(graph, edges, arity, prune):
        for row in digits:
            yield _digits_to_digraph(row, edges, graph.n)


def _orientation_digit_stream(graph, edges, arity, prune):
    n = graph.n
    m = len(edges)
    auts = canon.automorphisms_graph(graph)
    actions = _edge_actions(n, edges, auts)
    if arity ** m <= _NUMPY_SPACE_CAP and len(actions) < _NUMPY_AUT_CAP:
        stream = _numpy_orbit_stream(m, arity, actions)
        for digits in stream:
            if prune:
                out, inn = _degree_arrays(digits, edges, n)
                keep = (out >= 2).all(axis=1) & (inn >= 2).all(axis=1)
                digits = digits[keep]
            if digits.shape[0]:
                yield digits
    else:
        degree_ctx = None
        if prune:
            incid = [[] for _ in range(n)]
            for j, (u, v) in enumerate(edges):
                incid[u].append(j)
                incid[v].append(j)
            degree_ctx = (incid, 2, edges)
        yield from _dfs_orbit_stream(m, arity, actions, degree_ctx)


# --------------------------------------------------------------------------
# census
# --------------------------------------------------------------------------

_CLASS_KEYS = ("dextro", "bi", "ambi", "inter")


def _classify_digit_batch(digits, edges, n, want_inter, collect):
    """Counts plus certificates for one batch of edge-state rows."""
    counts = dict.fromkeys(_CLASS_KEYS, 0)
    certs: dict[str, list] = {}
    mats = _adjacency_batch(digits, edges, n)
    res = modclass.classify_batch(mats, want_inter=want_inter)
    counts["dextro"] = int(res["dextro"].sum())
    counts["bi"] = int(res["bi"].sum())
    ambi_found = []
    for idx in np.nonzero(res["ambi_candidate"])[0]:
        g = _digits_to_digraph(digits[idx], edges, n)
        rep = classify(g)
        if rep.is_ambi_nut:
            ambi_found.append((g, rep))
    counts["ambi"] = len(ambi_found)
    if want_inter:
        counts["inter"] = int(res["inter"].sum())
    for cls in collect or ():
        bucket = certs.setdefault(cls, [])
        if cls == "ambi":
            for g, rep in ambi_found:
                bucket.append((_canonical_digraph6(g).decode(), rep.ker_witness))
        else:
            flag = res[cls if cls != "inter" else "inter"]
            for idx in np.nonzero(flag)[0]:
                g = _digits_to_digraph(digits[idx], edges, n)
                rep = classify(g)
                bucket.append((_canonical_digraph6(g).decode(),
                               rep.ker_witness or rep.inter_witness))
    return counts, certs, digits.shape[0]


def _census_graph_task(args):
    data, arity, prune, want_inter, collect = args
    graph = canon.graph_from_canonical_bytes(data)
    edges = sorted(graph.edges)
    counts = dict.fromkeys(_CLASS_KEYS, 0)
    certs: dict[str, list] = {}
    oriented = 0
    for digits in _orientation_digit_stream(graph, edges, arity, prune):
        c, ce, num = _classify_digit_batch(digits, edges, graph.n,
                                           want_inter, collect)
        oriented += num
        for k, v in c.items():
            counts[k] += v
        for k, v in ce.items():
            certs.setdefault(k, []).extend(v)
    return data, oriented, counts, certs


def _worker_count(workers):
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("NUTKERNEL_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _tournament_level_task(args):
    chunk, k = args
    from .formats import parse_digraph6
    seen = set()
    for data in chunk:
        parent = parse_digraph6(data.decode())
        for mask in range(1 << k):
            arcs = list(parent.arcs)
            for i in range(k):
                arcs.append((k, i) if mask >> i & 1 else (i, k))
            seen.add(_canonical_digraph6(from_arcs(k + 1, arcs)))
    return seen


def _census_tournaments(n, workers, collect):
    nw = _worker_count(workers)
    ctx = get_context("fork")
    pool = ctx.Pool(nw) if nw > 1 else None
    try:
        level = [canonical_digraph(from_arcs(1, []))]
        for k in range(1, n):
            if pool is not None and len(level) > 64:
                chunks = [level[i::nw * 4] for i in range(nw * 4)]
                tasks = [(c, k) for c in chunks if c]
                seen = set()
                for part in pool.imap_unordered(_tournament_level_task, tasks):
                    seen |= part
            else:
                seen = _tournament_level_task((level, k))
            level = sorted(seen)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    from .formats import parse_digraph6
    counts = dict.fromkeys(_CLASS_KEYS, 0)
    certs: dict[str, list] = {}
    mats = np.zeros((len(level), n, n), dtype=np.uint8)
    digraphs = []
    for i, data in enumerate(level):
        g = parse_digraph6(data.decode())
        digraphs.append(g)
        for u, v in g.arcs:
            mats[i, u, v] = 1
    res = modclass.classify_batch(mats, want_inter=True)
    counts["dextro"] = int(res["dextro"].sum())
    counts["bi"] = int(res["bi"].sum())
    counts["inter"] = int(res["inter"].sum())
    for idx in np.nonzero(res["ambi_candidate"])[0]:
        rep = classify(digraphs[idx])
        if rep.is_ambi_nut:
            counts["ambi"] += 1
            if collect and "ambi" in collect:
                certs.setdefault("ambi", []).append(
                    (level[idx].decode(), rep.ker_witness))
    return level, counts, certs


def census(constraints: GenConstraints, classes=_CLASS_KEYS, workers=None,
           collect=()) -> CensusRow:
    """Stream generation -> orientation -> classification, aggregating counts.

    counts keys: dextro, bi, ambi, and inter when requested via classes.
    The laevo total equals the dextro total (reversal is a bijection), so
    it is not tabulated separately.
    """
    start = time.perf_counter()
    n = constraints.order
    want_inter = "inter" in classes
    if constraints.tournament:
        level, counts, certs = _census_tournaments(n, workers, collect)
        if not want_inter:
            counts.pop("inter", None)
        return CensusRow(n, counts, time.perf_counter() - start, 1,
                         len(level), 0, certs)

    nw = _worker_count(workers)
    ctx = get_context("fork")
    pool = ctx.Pool(nw) if nw > 1 else None
    try:
        if constraints.underlying is not None:
            stream = iter([constraints.underlying])
        else:
            stream = gen_connected_graphs(constraints, pool=pool)
        if constraints.core_filter:
            graphs = []
            buf: list[UndirectedGraph] = []
            for g in stream:
                buf.append(g)
                if len(buf) >= 4096:
                    graphs.extend(_core_filter(buf))
                    buf.clear()
            graphs.extend(_core_filter(buf))
        else:
            graphs = list(stream)
        arity = 2 if constraints.oriented_only else 3
        tasks = [(canon.canonical_graph_bytes(g), arity,
                  constraints.degree_bounds, want_inter, tuple(collect))
                 for g in graphs]
        counts = dict.fromkeys(_CLASS_KEYS, 0)
        certs: dict[str, list] = {}
        oriented = 0
        good = 0
        if pool is not None and len(tasks) > 1:
            results = pool.imap_unordered(_census_graph_task, tasks)
        else:
            results = map(_census_graph_task, tasks)
        for _, num, c, ce in results:
            oriented += num
            for k, v in c.items():
                counts[k] += v
            if c["ambi"]:
                good += 1
            for k, v in ce.items():
                certs.setdefault(k, []).extend(v)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    if not want_inter:
        counts.pop("inter", None)
    for v in certs.values():
        v.sort()
    return CensusRow(n, counts, time.perf_counter() - start, len(graphs),
                     oriented, good, certs)
