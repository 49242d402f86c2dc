"""Bit-exact graph6/digraph6 codecs, an edge-list reader and JSON reports.

digraph6: '&', then the size field N(n), then the n*n adjacency bits in
row-major order packed into 6-bit groups offset by 63.  graph6 packs the
upper triangle column by column.  Sizes up to 258047 use the '~' escape.
"""

from __future__ import annotations

import json

from .digraph import Digraph, UndirectedGraph, from_arcs, graph_from_edges
from .errors import IndexOutOfRange, MalformedHeader, TruncatedPayload
from .spectral import NutReport

_SCHEMA = "nutkernel-report-v1"


def _encode_size(n: int) -> str:
    if n < 0:
        raise IndexOutOfRange("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise IndexOutOfRange(f"order {n} beyond digraph6 small-size range")


def _decode_size(s: str) -> tuple[int, int]:
    """Returns (n, characters consumed)."""
    if not s:
        raise TruncatedPayload("empty size field")
    c = ord(s[0]) - 63
    if c < 0 or c > 63:
        raise MalformedHeader(f"bad size byte {s[0]!r}")
    if c != 63:
        return c, 1
    if len(s) < 4:
        raise TruncatedPayload("truncated multi-byte size")
    n = 0
    for ch in s[1:4]:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise MalformedHeader(f"bad size byte {ch!r}")
        n = (n << 6) | v
    return n, 4


def _encode_bits(bits: list[int]) -> str:
    while len(bits) % 6:
        bits.append(0)
    out = []
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def _decode_bits(s: str, count: int) -> list[int]:
    need = (count + 5) // 6
    if len(s) < need:
        raise TruncatedPayload(f"need {need} payload bytes, got {len(s)}")
    if len(s) > need:
        raise MalformedHeader("trailing bytes after payload")
    bits = []
    for ch in s:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise MalformedHeader(f"bad payload byte {ch!r}")
        bits.extend((v >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    if any(bits[count:]):
        raise MalformedHeader("nonzero padding bits")
    return bits[:count]


def emit_digraph6(g: Digraph) -> str:
    bits = [0] * (g.n * g.n)
    for u, v in g.arcs:
        bits[u * g.n + v] = 1
    return "&" + _encode_size(g.n) + _encode_bits(bits)


def parse_digraph6(s: str) -> Digraph:
    s = s.strip()
    if s.startswith(">>digraph6<<"):
        s = s[len(">>digraph6<<"):]
    if not s.startswith("&"):
        raise MalformedHeader("digraph6 strings start with '&'")
    n, used = _decode_size(s[1:])
    bits = _decode_bits(s[1 + used:], n * n)
    arcs = [(i // n, i % n) for i, b in enumerate(bits) if b]
    return from_arcs(n, arcs)


def emit_graph6(graph: UndirectedGraph) -> str:
    n = graph.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in graph.edges else 0)
    return _encode_size(n) + _encode_bits(bits)


def parse_graph6(s: str) -> UndirectedGraph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if s.startswith("&") or s.startswith(":"):
        raise MalformedHeader("not a graph6 string")
    n, used = _decode_size(s)
    bits = _decode_bits(s[used:], n * (n - 1) // 2)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return graph_from_edges(n, edges)


def parse_edge_list(text: str) -> Digraph:
    """'n m' header then m lines 'u v'; '#' starts a comment."""
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.split())
    if len(tokens) < 2:
        raise MalformedHeader("edge list needs an 'n m' header")
    try:
        n, m = int(tokens[0]), int(tokens[1])
        rest = [int(t) for t in tokens[2:]]
    except ValueError as exc:
        raise MalformedHeader(f"non-integer token: {exc}") from exc
    if len(rest) != 2 * m:
        raise TruncatedPayload(f"expected {2 * m} endpoints, got {len(rest)}")
    return from_arcs(n, list(zip(rest[0::2], rest[1::2])))


def emit_edge_list(g: Digraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.arcs))
    return "\n".join(lines) + "\n"


def report_record(g: Digraph, report: NutReport, digraph_id: str,
                  provenance: str) -> dict:
    rec = {
        "schema": _SCHEMA,
        "id": digraph_id,
        "n": g.n,
        "arcs": g.m,
        "provenance": provenance,
        "nullity": report.nullity,
    }
    for flag in ("is_dextro_nut", "is_laevo_nut", "is_bi_nut", "is_ambi_nut",
                 "is_inter_nut", "is_dextro_core", "is_laevo_core",
                 "is_bi_core", "is_ambi_core", "is_inter_core"):
        rec[flag] = getattr(report, flag)
    for key, wit in (("ker_witness", report.ker_witness),
                     ("coker_witness", report.coker_witness),
                     ("inter_witness", report.inter_witness)):
        rec[key] = list(wit) if wit is not None else None
    return rec


def emit_report(g: Digraph, report: NutReport, digraph_id: str,
                provenance: str = "input") -> str:
    return json.dumps(report_record(g, report, digraph_id, provenance),
                      sort_keys=True)
