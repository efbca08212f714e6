"""Command-line front end: ``granula measures | approx | verify | lattice | ops``.

Exit status is 0 on success, 1 when a must-pass claim fails under ``verify``
and 2 on bad input or any library error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .core import (
    Universe,
    compare,
    format_granule,
    format_set,
    granule_of,
    is_granule_text,
    join_relation,
    meet,
    parse_granule,
    parse_set,
    quotient_join,
)
from .errors import CapExceededError, GranulaError, NoBoundError
from .hasse import export_hasse
from .measures import (
    EntropyValue,
    MeasureKind,
    are_independent,
    conditional_fineness,
    conditional_fineness_entropy,
    conditional_granularity,
    conditional_granularity_entropy,
    is_quotient_complement,
    mass,
)
from .oracle import MAX_N, Subject, run_verify
from .rough import (
    InformationSystem,
    Mode,
    approximate_set,
    base_granule,
    complete_shortcut,
    lower_granule,
    micro_space,
    pawlak_approximation,
    upper_granule,
)
from .tableio import ingest

CAP_HINT = "reduce the universe or the number of blocks of P, or raise the cap in library code"


def number(x: Fraction) -> dict:
    return {"fraction": str(x), "decimal": float(x)}


def show_number(x: Fraction) -> str:
    return f"{x} ({float(x):.6g})"


def entropy_json(e: EntropyValue) -> dict:
    return {"value": e.value, "clamped": e.clamped}


def show_entropy(e: EntropyValue) -> str:
    return f"{e.value:.6g}" + (" [clamped]" if e.clamped else "")


def emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- argument plumbing -----------------------------------------------------------


def add_universe_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--table", help="CSV or JSON information table")
    src.add_argument("--n", type=int, help="universe {1..n}")
    src.add_argument("--universe", help="comma separated element names")
    p.add_argument("--format", choices=["csv", "json"], help="table format (default: file extension)")


def add_system_args(p: argparse.ArgumentParser) -> None:
    add_universe_args(p)
    p.add_argument("--attr", action="append", default=[], metavar="GRANULE",
                   help="attribute granule such as '{{1,2},{3,4}}' (repeatable; used without --table)")


def load_universe(args) -> Universe:
    if args.table:
        return ingest(args.table, args.format).universe
    if args.n is not None:
        return Universe.of_size(args.n)
    if args.universe:
        return Universe(tuple(s.strip() for s in args.universe.split(",")))
    raise ValueError("give --table, --n or --universe")


def load_system(args) -> InformationSystem:
    if args.table:
        if args.attr:
            raise ValueError("--attr cannot be combined with --table")
        return ingest(args.table, args.format)
    u = load_universe(args)
    if not args.attr:
        raise ValueError("give --table or at least one --attr")
    return InformationSystem.from_granules([parse_granule(a, u) for a in args.attr])


def parse_kinds(values: list[str] | None) -> list[MeasureKind]:
    if not values:
        return list(MeasureKind)
    return [MeasureKind.parse(part) for v in values for part in v.split(",") if part.strip()]


# -- commands ----------------------------------------------------------------------


def cmd_measures(args) -> int:
    u = load_universe(args)
    a, b = parse_granule(args.a, u), parse_granule(args.b, u)
    rows = []
    for k in parse_kinds(args.kind):
        rows.append({
            "kind": str(k),
            "G": conditional_granularity(k, b, a),
            "F": conditional_fineness(k, b, a),
            "H": conditional_granularity_entropy(k, b, a, base=args.log_base),
            "H'": conditional_fineness_entropy(k, b, a, base=args.log_base),
        })
    report = {
        "A": format_granule(a),
        "B": format_granule(b),
        "mass": mass(a, b),
        "independent": are_independent(a, b),
        "quotient_complement": is_quotient_complement(b, a),
        "log_base": args.log_base,
    }
    if args.json:
        out = {**report, "mass": number(report["mass"]), "measures": [
            {"kind": r["kind"], "G": number(r["G"]), "F": number(r["F"]),
             "H": entropy_json(r["H"]), "H'": entropy_json(r["H'"])}
            for r in rows
        ]}
        emit(json.dumps(out, indent=2) + "\n", args.output)
        return 0
    lines = [
        f"A = {report['A']}",
        f"B = {report['B']}",
        f"m/n = {show_number(report['mass'])}",
        f"independent: {report['independent']}   quotient complement: {report['quotient_complement']}",
        f"{'kind':5s} {'G(B|A)':22s} {'F(B|A)':22s} {'H(B|A)':18s} H'(B|A)",
    ]
    for r in rows:
        co = show_entropy(r["H'"])
        lines.append(f"{r['kind']:5s} {show_number(r['G']):22s} {show_number(r['F']):22s} "
                     f"{show_entropy(r['H']):18s} {co}")
    emit("\n".join(lines) + "\n", args.output)
    return 0


def _bound(fn, a, system):
    try:
        return format_granule(fn(a, system))
    except NoBoundError:
        return None


def cmd_approx(args) -> int:
    system = load_system(args)
    u = system.universe
    mode = Mode(args.mode) if args.mode else Mode.default_for(system)
    out: dict = {"mode": mode.value, "complete": system.complete}
    if is_granule_text(args.target):
        a = parse_granule(args.target, u)
        out.update({
            "target": format_granule(a),
            "kind": "granule",
            "lower": _bound(lower_granule, a, system),
            "upper": _bound(upper_granule, a, system),
        })
        if system.complete:
            short = complete_shortcut(a, system)
            out["shortcut"] = {"lower": format_granule(short.lower), "upper": format_granule(short.upper)}
            out["shortcut_agreement"] = out["shortcut"] == {"lower": out["lower"], "upper": out["upper"]}
        else:
            out["shortcut"] = None
            out["shortcut_agreement"] = None
    else:
        target = parse_set(args.target, u)
        result = approximate_set(target, micro_space(system, mode))
        out.update({"kind": "set", **result.to_dict(u)})
        if system.complete:
            lower, upper = pawlak_approximation(target, base_granule(system))
            out["shortcut"] = {"lower": format_set(lower, u), "upper": format_set(upper, u)}
            out["shortcut_agreement"] = (lower, upper) == (result.lower, result.upper)
        else:
            out["shortcut"] = None
            out["shortcut_agreement"] = None
    if args.json:
        emit(json.dumps(out, indent=2) + "\n", args.output)
    else:
        emit("".join(f"{k}: {'-' if v is None else v}\n" for k, v in out.items()), args.output)
    return 0


def cmd_verify(args) -> int:
    selected = [c.strip() for v in args.claims or [] for c in v.split(",") if c.strip()]
    reports = run_verify(args.n, selected or None, Subject(args.scope), parse_kinds(args.kind))
    failed = [r for r in reports if r.must_pass and not r.ok]
    if args.json:
        doc = {
            "n": args.n,
            "scope": args.scope,
            "must_pass_failures": len(failed),
            "reports": [r.to_dict() for r in reports],
        }
        emit(json.dumps(doc, indent=2) + "\n", args.output)
    else:
        lines = [r.line() for r in reports]
        lines.append(f"{len(reports)} claims, {len(failed)} must-pass failures")
        emit("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


def cmd_lattice(args) -> int:
    if args.table or args.attr:
        system = load_system(args)
    else:
        u = load_universe(args)
        # discrete system: every subset definable, P = all singletons
        system = InformationSystem.from_granules([parse_granule(
            "{" + ",".join("{" + e + "}" for e in u.elements) + "}", u)])
    if args.macro:
        dot = export_hasse(system)
    else:
        mode = Mode(args.mode) if args.mode else Mode.default_for(system)
        dot = export_hasse(micro_space(system, mode))
    emit(dot, args.output)
    return 0


def cmd_ops(args) -> int:
    u = load_universe(args)
    a, b = parse_granule(args.a, u), parse_granule(args.b, u)
    out: dict = {"op": args.op, "A": format_granule(a), "B": format_granule(b)}
    if args.op == "meet":
        out["result"] = format_granule(meet(a, b))
    elif args.op == "quotient-join":
        out["result"] = format_granule(quotient_join(a, b))
    elif args.op == "join":
        r = join_relation(a, b)
        out["pairs"] = sorted(f"({u.elements[x]},{u.elements[y]})" for x, y in r.pairs if x != y)
        out["is_equivalence"] = r.is_equivalence()
        out["result"] = format_granule(granule_of(r)) if out["is_equivalence"] else None
    else:
        out["result"] = compare(a, b).name.lower()
    if args.json:
        emit(json.dumps(out, indent=2) + "\n", args.output)
    else:
        emit("".join(f"{k}: {'-' if v is None else v}\n" for k, v in out.items()), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="granula", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = sub.add_parser("measures", help="conditional granularity, fineness and entropies of B given A")
    add_universe_args(p)
    p.add_argument("--a", required=True, help="granule A, e.g. '{{1,2},{3,4}}'")
    p.add_argument("--b", required=True, help="granule B")
    p.add_argument("--kind", action="append", help="sh1..sh5 (repeatable or comma separated; default all)")
    p.add_argument("--log-base", type=float, default=2.0)
    common(p)
    p.set_defaults(func=cmd_measures)

    p = sub.add_parser("approx", help="approximate a set '{..}' or a granule '{{..}}'")
    add_system_args(p)
    p.add_argument("--target", required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode])
    common(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("verify", help="exhaustive claim verification on a small universe")
    p.add_argument("--n", type=int, default=3, choices=range(1, MAX_N + 1), metavar="N")
    p.add_argument("--scope", default=Subject.GRANULES.value,
                   choices=[Subject.GRANULES.value, Subject.QUOTIENT.value])
    p.add_argument("--claims", action="append", help="claim ids or prefixes ending in ':' (comma separated)")
    p.add_argument("--kind", action="append", help="restrict axiom claims to these kinds")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", help="Hasse diagram of the micro or macro space as DOT")
    add_system_args(p)
    side = p.add_mutually_exclusive_group()
    side.add_argument("--micro", action="store_true", help="Boolean lattice with definable sets marked (default)")
    side.add_argument("--macro", action="store_true", help="P and its coarsenings")
    p.add_argument("--mode", choices=[m.value for m in Mode])
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("ops", help="meet, join, quotient-join or compare two granules")
    p.add_argument("op", choices=["meet", "join", "quotient-join", "compare"])
    add_universe_args(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    common(p)
    p.set_defaults(func=cmd_ops)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"granula: {exc}; {CAP_HINT}", file=sys.stderr)
    except (GranulaError, ValueError, KeyError, OSError) as exc:
        print(f"granula: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
