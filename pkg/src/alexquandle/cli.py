"""Command line entry point: ``alexquandle {alexander,classify,color,count,table}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .braid import BraidWord, closure_components, format_braid, parse_braid
from .coloring import (
    FiniteQuandle,
    Verdict,
    classify,
    coloring_space_summary,
    construct_coloring,
    count_colorings_finite,
    count_colorings_kernel,
    kernel_basis_zero_delta,
)
from .errors import AlexQuandleError, DatasetError, NotADivisor, ParseError, UnitModulus, ZeroModulus
from .laurent import format_poly, parse_poly
from .table import builtin_records, load_records, run_table

EXIT_OK = 0
EXIT_CHECK = 1
EXIT_USAGE = 2


def _braid(args) -> BraidWord:
    return parse_braid(args.braid, args.strands)


def _emit(args, payload: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def cmd_alexander(args) -> int:
    w = _braid(args)
    cl = classify(w)
    delta = format_poly(cl.delta)
    _emit(args, {"braid": format_braid(w), "strands": w.strands, "delta": delta}, [delta])
    return EXIT_OK


def cmd_classify(args) -> int:
    w = _braid(args)
    cl = classify(w)
    payload = {
        "braid": format_braid(w),
        "strands": w.strands,
        "components": closure_components(w),
        "delta": format_poly(cl.delta),
        "verdict": str(cl.verdict),
    }
    lines = [f"delta: {payload['delta']}", f"verdict: {cl.verdict}"]
    if cl.verdict is Verdict.ZERO_DELTA:
        basis = kernel_basis_zero_delta(w)
        payload["kernel_vectors"] = [[format_poly(x) for x in v] for v in basis]
        lines.append("colors every non-trivial Alexander quandle; kernel vectors over Lambda:")
        lines += ["  (" + ", ".join(v) + ")" for v in payload["kernel_vectors"]]
    elif cl.verdict is Verdict.UNIT_DELTA:
        payload["certificate"] = "trivial only"
        lines.append("trivial only")
    else:
        col = construct_coloring(w, cl.delta)
        payload["coloring"] = [format_poly(x) for x in col.values]
        payload["modulus"] = format_poly(col.ring.modulus)
        lines.append(f"non-trivial coloring over Lambda/({payload['modulus']}):")
        lines.append("  (" + ", ".join(payload["coloring"]) + ")")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_color(args) -> int:
    w = _braid(args)
    f = parse_poly(args.mod)
    try:
        col = construct_coloring(w, f)
    except (NotADivisor, UnitModulus, ZeroModulus) as exc:
        msg = f"error: {type(exc).__name__}: {exc}"
        if args.json:
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        else:
            print(msg, file=sys.stderr)
        return EXIT_CHECK
    summary = coloring_space_summary(w, col.ring.modulus, args.multiplicity)
    payload = {
        "braid": format_braid(w),
        "modulus": format_poly(col.ring.modulus),
        "coloring": [format_poly(x) for x in col.values],
        "verified": True,
        "rank_mod_f": summary.rank_mod_f,
        "generated_by_one": summary.generated_by_one,
        "multiplicity_bounds_ok": summary.multiplicity_bounds_ok,
    }
    lines = [
        "(" + ", ".join(payload["coloring"]) + ")",
        f"rank of phi(w) - I over Lambda/({payload['modulus']}): {summary.rank_mod_f}",
    ]
    if summary.generated_by_one:
        lines.append("every coloring is a combination of this one and (1,...,1)")
    if summary.multiplicity_bounds_ok is not None:
        lines.append(f"multiplicity bounds hold: {summary.multiplicity_bounds_ok}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_count(args) -> int:
    w = _braid(args)
    q = FiniteQuandle(args.m, args.t)
    enum_count = count_colorings_finite(w, q, args.budget)
    kern_count = count_colorings_kernel(w, q)
    payload = {
        "braid": format_braid(w),
        "m": q.m,
        "t": q.a,
        "count": enum_count,
        "kernel_count": kern_count,
        "agree": enum_count == kern_count,
    }
    lines = [str(enum_count)]
    if enum_count != kern_count:
        lines.append(f"kernel count disagrees: {kern_count}")
    _emit(args, payload, lines)
    return EXIT_OK if enum_count == kern_count else EXIT_CHECK


def cmd_table(args) -> int:
    records = load_records(args.file, mirror=args.mirror) if args.file else builtin_records()
    reports = run_table(records)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"passed": ok, "rows": [r.as_json() for r in reports]}, indent=2))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            failed = [k for k, v in r.checks.items() if not v]
            detail = f" ({', '.join(failed)})" if failed else ""
            print(f"{status} {r.name} {r.braid} delta={r.delta} {r.verdict}{detail}")
            for m in r.messages:
                print(f"     {m}")
        print(json.dumps({"rows": len(reports), "passed": sum(r.passed for r in reports), "ok": ok}))
    return EXIT_OK if ok else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alexquandle",
        description="Alexander polynomials and Alexander-quandle colorings of braid closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def braid_cmd(name: str, help: str):
        p = sub.add_parser(name, help=help)
        p.add_argument("braid", help='braid word, e.g. "{1,1,-2}" or "s1^2 s2^-1"')
        p.add_argument("--strands", type=int, default=None, help="strand count (default: 1 + max index)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    braid_cmd("alexander", "print the reduced Alexander polynomial").set_defaults(func=cmd_alexander)
    braid_cmd("classify", "classify colorability and print a certificate").set_defaults(func=cmd_classify)
    p = braid_cmd("color", "construct a non-trivial coloring over Lambda/(f)")
    p.add_argument("--mod", required=True, help="modulus f, a divisor of the Alexander polynomial")
    p.add_argument("--multiplicity", type=int, default=None, help="multiplicity of f as an irreducible factor")
    p.set_defaults(func=cmd_color)
    p = braid_cmd("count", "count colorings by Z/m with t acting as multiplication")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=10**7, help="maximum number of enumerated tuples")
    p.set_defaults(func=cmd_count)
    p = sub.add_parser("table", help="verify a dataset of braids and colorings")
    p.add_argument("--file", default=None, help="JSON-lines dataset (default: bundled examples)")
    p.add_argument("--mirror", action="store_true", help="flip all generator signs when loading")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DatasetError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AlexQuandleError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
