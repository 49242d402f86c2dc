"""Command-line surface: classify, enumerate, family, construct, gadget,
verify-tables.

Data goes to stdout (JSON by default), diagnostics to stderr.  Exit codes:
0 success, 1 malformed input, 2 cap exceeded without --stress, 3 checked
postcondition violated (a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from . import constructions, tables
from .digraph import Digraph
from .enumeration import (GenConstraints, canonical_digraph, census)
from .errors import (CapExceeded, MalformedHeader, TheoremViolation,
                     TruncatedPayload)
from .families import circulant, d_family, dicycle_product, m_family
from .formats import (emit_digraph6, emit_graph6, emit_report,
                      parse_digraph6, parse_edge_list)
from .spectral import as_gadget, classify


def _read_digraphs(args_inputs, edge_list=False):
    texts = []
    if not args_inputs:
        texts.append(("stdin", sys.stdin.read()))
    else:
        for item in args_inputs:
            if item.startswith("&"):
                texts.append(("inline", item))
            else:
                with open(item, encoding="utf-8") as fh:
                    texts.append((item, fh.read()))
    out = []
    for name, text in texts:
        if edge_list:
            out.append((name, parse_edge_list(text)))
            continue
        for line in text.splitlines():
            line = line.strip()
            if line:
                out.append((name, parse_digraph6(line)))
    return out


def _digraph_id(g: Digraph) -> str:
    try:
        return canonical_digraph(g).decode()
    except CapExceeded:
        return emit_digraph6(g)


def _cmd_classify(args) -> int:
    for name, g in _read_digraphs(args.inputs, args.edge_list):
        rep = classify(g)
        if args.format == "table":
            flags = [k for k in ("is_dextro_nut", "is_laevo_nut", "is_bi_nut",
                                 "is_ambi_nut", "is_inter_nut")
                     if getattr(rep, k)]
            print(f"{_digraph_id(g)}\tnullity={rep.nullity}\t"
                  f"{','.join(flags) or 'none'}")
        else:
            print(emit_report(g, rep, _digraph_id(g), name))
    return 0


def _cmd_enumerate(args) -> int:
    constraints = GenConstraints(
        order=args.order,
        regularity=args.regular,
        min_degree=args.min_degree,
        tournament=args.tournament,
        degree_bounds=args.degree_bounds or args.core_filter,
        oriented_only=not args.allow_bidirected,
        core_filter=args.core_filter,
    )
    classes = tuple(args.cls) if args.cls else ("dextro", "bi", "ambi")
    collect = ("ambi",) if args.certificates else ()
    row = census(constraints, classes=classes, workers=args.workers,
                 collect=collect)
    if args.certificates:
        with open(args.certificates, "w", encoding="utf-8") as fh:
            for d6, witness in row.certificates.get("ambi", []):
                fh.write(json.dumps({"id": d6, "ker_witness": list(witness)}))
                fh.write("\n")
    payload = {
        "n": row.n,
        "underlying": row.generated_underlying,
        "oriented": row.generated_oriented,
        "counts": row.counts,
        "good_cores": row.good_cores,
    }
    print(f"census n={row.n} took {row.elapsed:.2f}s", file=sys.stderr)
    if args.format == "table":
        cols = "\t".join(f"{k}={v}" for k, v in sorted(row.counts.items()))
        print(f"n={row.n}\tunderlying={row.generated_underlying}\t"
              f"oriented={row.generated_oriented}\t{cols}")
    else:
        print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_family(args) -> int:
    params = [int(p) for p in args.params.replace(",", " ").split()]
    kind = args.kind.upper()
    if kind in ("M1", "M2", "M3"):
        g = m_family(int(kind[1]), params[0])
    elif kind in ("D1", "D2", "D3"):
        g = d_family(int(kind[1]), params[0])
    elif kind == "DICYCLE":
        g = dicycle_product(params[0], params[1])
    elif kind == "CIRCULANT":
        graph = circulant(params[0], set(params[1:]))
        print(emit_graph6(graph))
        return 0
    else:
        raise MalformedHeader(f"unknown family kind {args.kind!r}")
    print(emit_digraph6(g))
    if args.classify:
        print(emit_report(g, classify(g), _digraph_id(g), f"family:{args.kind}"))
    return 0


def _parse_pair(text: str) -> tuple[int, int]:
    a, b = text.replace(",", " ").split()
    return int(a), int(b)


def _cmd_construct(args) -> int:
    a = parse_digraph6(args.input)
    if args.op == "subdivide":
        u, v = _parse_pair(args.arc)
        out = constructions.subdivide_arc(a, u, v)
    elif args.op == "coalesce":
        b = parse_digraph6(args.with_)
        out = constructions.coalesce(a, args.at, b, args.at2)
    elif args.op == "crossover":
        b = parse_digraph6(args.with_)
        u, v = _parse_pair(args.arc)
        s, t = _parse_pair(args.arc2)
        out = constructions.crossover(a, u, v, b, s, t, require=args.require)
    elif args.op == "multiplier":
        base = constructions.validate_base(a, args.eigenvalue)
        if base is None:
            raise MalformedHeader("input is not a valid base digraph")
        gadgets = []
        for item in args.gadget or []:
            d6, root = item.rsplit("@", 1)
            gad = as_gadget(parse_digraph6(d6), int(root))
            if gad is None:
                raise MalformedHeader(f"{item!r} is not a gadget")
            gadgets.append(gad)
        out = constructions.multiplier(base, gadgets)
    else:
        raise MalformedHeader(f"unknown construction {args.op!r}")
    print(emit_digraph6(out))
    if args.classify:
        print(emit_report(out, classify(out), _digraph_id(out),
                          f"construct:{args.op}"))
    return 0


def _cmd_gadget(args) -> int:
    items = _read_digraphs(args.inputs, args.edge_list)
    for _, g in items:
        gad = as_gadget(g, args.root)
        if gad is None:
            print("not a gadget")
        else:
            d = gad.demand
            print(f"{d.numerator}/{d.denominator}" if d.denominator != 1
                  else str(d.numerator))
    return 0


def _cmd_verify_tables(args) -> int:
    failed = 0
    for label, expected, actual in tables.verify_tables(
            args.max_order, workers=args.workers, stress=args.stress):
        ok = expected == actual
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {label}: expected {expected}, "
              f"got {actual}")
    print(f"{'ALL PASS' if not failed else f'{failed} FAILURES'}")
    return 0 if not failed else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nutkernel",
        description="Exact nut-digraph classification, constructions and censuses")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify digraph6 inputs")
    p.add_argument("inputs", nargs="*",
                   help="files of digraph6 lines or inline '&...' strings; "
                        "stdin when empty")
    p.add_argument("--edge-list", action="store_true",
                   help="inputs are edge-list files ('n m' header)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="isomorph-free census")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--regular", type=int, default=None)
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--tournament", action="store_true")
    p.add_argument("--core-filter", action="store_true")
    p.add_argument("--degree-bounds", action="store_true")
    p.add_argument("--allow-bidirected", action="store_true")
    p.add_argument("--class", dest="cls", action="append",
                   choices=("dextro", "bi", "ambi", "inter"))
    p.add_argument("--certificates", metavar="PATH",
                   help="write ambi-nut certificates (digraph6 + witness)")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--stress", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("family", help="emit a parameterized family member")
    p.add_argument("--kind", required=True,
                   help="M1|M2|M3|D1|D2|D3|dicycle|circulant")
    p.add_argument("--params", required=True,
                   help="e.g. '6' for M1, '3,4' for dicycle, '8,1,2' for circulant")
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("construct", help="run a construction scheme")
    p.add_argument("--op", required=True,
                   choices=("subdivide", "coalesce", "crossover", "multiplier"))
    p.add_argument("--input", required=True, help="digraph6 of the first operand")
    p.add_argument("--with", dest="with_", help="digraph6 of the second operand")
    p.add_argument("--arc", help="'u,v' arc of the first operand")
    p.add_argument("--arc2", help="'s,t' arc of the second operand")
    p.add_argument("--at", type=int, help="vertex of the first operand")
    p.add_argument("--at2", type=int, help="vertex of the second operand")
    p.add_argument("--require", choices=("ambi", "bi", "raw"), default=None)
    p.add_argument("--eigenvalue", type=int, help="base eigenvalue (multiplier)")
    p.add_argument("--gadget", action="append", metavar="D6@ROOT")
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("gadget", help="demand of a rooted digraph")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--edge-list", action="store_true")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("verify-tables", help="re-derive the published censuses")
    p.add_argument("--max-order", type=int, default=7)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--stress", action="store_true")
    p.set_defaults(func=_cmd_verify_tables)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc} (see --stress)", file=sys.stderr)
        return 2
    except TheoremViolation as exc:
        print(f"postcondition violated (bug): {exc}", file=sys.stderr)
        return 3
    except (MalformedHeader, TruncatedPayload, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
