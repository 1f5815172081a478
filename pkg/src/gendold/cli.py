"""gendold command line: analyze, sw, sw-number, cobordism, clifford, table."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import __version__
from .clifford import algebra_dimension, build_generators, verify_relations
from .dold import (
    DoldDescriptor,
    Unsupported,
    euler_char_P,
    is_orientable_P,
    is_spin_P,
    spin_by_congruence,
    sw_number_P,
    sw_total_P,
)
from .flags import FlagDescriptor, partitions
from .numeric import DomainError
from .verdicts import cobordism_verdict, parallelizable, span_bounds, stably_parallelizable

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 2, 3

CSV_HEADER = ["m", "parts", "dim", "orientable", "spin", "chi",
              "stable_par", "parallel", "cobordism", "rule_ids"]

SPIN_NOTE = (
    "spin read off the total Stiefel-Whitney class (w_1 = w_2 = 0) differs from the "
    "congruence form m + 1 = d mod 4; the total-class answer is reported"
)


class InputError(Exception):
    pass


def dump_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _descriptor(m: int, parts: str) -> DoldDescriptor:
    return DoldDescriptor(m, FlagDescriptor.parse(parts))


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise InputError(f"expected A..B, got {text!r}") from None
    if a < 1 or b < a:
        raise InputError(f"bad range {text!r}")
    return range(a, b + 1)


def analysis_report(P: DoldDescriptor, max_degree: int | None = None) -> dict[str, Any]:
    X = P.X
    top = P.dim if max_degree is None else max_degree
    if top < 0 or top > P.dim:
        raise InputError(f"--max-degree must lie in 0..{P.dim}")
    series = sw_total_P(P, top)
    spin = is_spin_P(P)
    two_blocks = X.r >= 2
    return {
        "m": P.m,
        "parts": list(X.parts),
        "d": P.d,
        "dim": P.dim,
        "orientable": is_orientable_P(P),
        "spin": spin,
        "spin_note": SPIN_NOTE if spin != spin_by_congruence(P) else None,
        "chi": euler_char_P(P),
        "sw_classes": [{"degree": k, "class": c.to_text()} for k, c in enumerate(series)],
        "verdicts": {
            "stable_parallelizable": stably_parallelizable(P.m, X).to_json() if two_blocks else None,
            "parallelizable": parallelizable(P.m, X).to_json() if two_blocks else None,
            "cobordism": cobordism_verdict(P.m, X).to_json(),
        },
        "span_bounds": span_bounds(P.m, X).to_json(),
    }


def _verdict_line(label: str, v: dict[str, Any] | None) -> str:
    if v is None:
        return f"{label}: n/a (needs at least two blocks)"
    wit = f" witness={json.dumps(v['witness'], sort_keys=True)}" if v["witness"] else ""
    return f"{label}: {v['state']} [{v['rule']}]{wit}\n  {v['citation']}"


def render_report(rep: dict[str, Any]) -> str:
    lines = [
        f"P({rep['m']}; {','.join(map(str, rep['parts']))}): d = {rep['d']}, dim = {rep['dim']}",
        f"orientable: {str(rep['orientable']).lower()}",
        f"spin: {str(rep['spin']).lower()}",
    ]
    if rep["spin_note"]:
        lines.append(f"  note: {rep['spin_note']}")
    lines.append(f"chi: {rep['chi']}")
    for item in rep["sw_classes"]:
        lines.append(f"w_{item['degree']} = {item['class']}")
    v = rep["verdicts"]
    lines.append(_verdict_line("stably parallelizable", v["stable_parallelizable"]))
    lines.append(_verdict_line("parallelizable", v["parallelizable"]))
    lines.append(_verdict_line("cobordism (nonzero class)", v["cobordism"]))
    sb = rep["span_bounds"]
    lines.append(f"span bounds: lower {sb['lower']}, upper {sb['upper']}")
    return "\n".join(lines)


def cmd_analyze(args: argparse.Namespace) -> int:
    rep = analysis_report(_descriptor(args.m, args.parts), args.max_degree)
    print(dump_json(rep) if args.json else render_report(rep))
    return EXIT_OK


def cmd_sw(args: argparse.Namespace) -> int:
    P = _descriptor(args.m, args.parts)
    top = P.dim if args.degree is None else args.degree
    if top < 0:
        raise InputError("--degree must be >= 0")
    series = sw_total_P(P, top, formal=args.formal)
    for k in range(1, top + 1):
        print(f"w_{k} = {series[k].to_text()}")
    return EXIT_OK


def cmd_sw_number(args: argparse.Namespace) -> int:
    P = _descriptor(args.m, args.parts)
    if (args.I is None) == (args.J is None):
        raise InputError("give exactly one of --I or --J")
    if args.I is not None:
        J = [1] * P.m + [2 * i for i in _int_list(args.I)]
    else:
        J = _int_list(args.J)
    try:
        value = sw_number_P(P, J)
    except Unsupported as exc:
        print(f"unsupported-per-paper: {exc}\n  {Unsupported.citation}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    print(value)
    return EXIT_OK


def cmd_cobordism(args: argparse.Namespace) -> int:
    P = _descriptor(args.m, args.parts)
    v = cobordism_verdict(P.m, P.X).to_json()
    print(dump_json(v) if args.json else _verdict_line(f"[{P}] != 0", v))
    return EXIT_OK


def cmd_clifford(args: argparse.Namespace) -> int:
    rep = build_generators(args.r)
    report = verify_relations(rep)
    dim = algebra_dimension(rep)
    expected = 4**rep.p
    rel = "ok" if report.ok else "FAILED"
    dim_ok = "ok" if dim == expected else "FAILED"
    print(f"relations: {rel}; algebra dim {dim} = 4^{rep.p}: {dim_ok}")
    for v in report.violations:
        print(f"  {v}")
    if args.dump:
        print(dump_json(rep.to_json()))
    return EXIT_OK if report.ok and dim == expected else 1


def table_parts(n_max: int) -> list[tuple[int, ...]]:
    """Block sizes with at least two blocks, one per unordered shape (verdicts
    do not depend on block order)."""
    out = []
    for n in range(2, n_max + 1):
        out.extend(tuple(sorted(p)) for p in partitions(n) if len(p) >= 2)
    return sorted(out)


def table_row(m: int, parts: tuple[int, ...], what: str) -> dict[str, Any]:
    X = FlagDescriptor(parts)
    P = DoldDescriptor(m, X)
    row: dict[str, Any] = {
        "m": m, "parts": X.label(), "dim": P.dim,
        "orientable": is_orientable_P(P), "spin": is_spin_P(P), "chi": euler_char_P(P),
        "stable_par": None, "parallel": None, "cobordism": None,
    }
    rules = []
    if what in ("stable", "all"):
        v = stably_parallelizable(m, X)
        row["stable_par"] = v.state.value
        rules.append(v.rule)
    if what in ("parallel", "all"):
        v = parallelizable(m, X)
        row["parallel"] = v.state.value
        rules.append(v.rule)
    if what in ("cobordism", "all"):
        v = cobordism_verdict(m, X)
        row["cobordism"] = v.state.value
        rules.append(v.rule)
    row["rule_ids"] = ";".join(rules)
    return row


def table_rows(ms: range, n_max: int, what: str) -> list[dict[str, Any]]:
    cells = [(m, parts) for m in ms for parts in table_parts(n_max)]
    rows = [table_row(m, parts, what) for m, parts in cells]
    rows.sort(key=lambda r: (r["m"], tuple(map(int, r["parts"].split(",")))))
    return rows


def _csv_value(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def render_table(rows: list[dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return dump_json(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([_csv_value(row[k]) for k in CSV_HEADER])
    return buf.getvalue().rstrip("\n")


def cmd_table(args: argparse.Namespace) -> int:
    if args.n_max < 2:
        raise InputError("--n-max must be >= 2")
    rows = table_rows(_range(args.m_range), args.n_max, args.what)
    print(render_table(rows, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gendold",
        description="Invariants of generalized Dold manifolds P(m, X) over complex flag manifolds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def dold_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--m", type=int, required=True, help="sphere dimension, m >= 1")
        p.add_argument("--parts", required=True, help="block sizes n1,n2,... of CG(n1,...,nr)")

    p = sub.add_parser("analyze", help="full report for P(m, X)")
    dold_args(p)
    p.add_argument("--json", action="store_true", help="emit key-sorted JSON")
    p.add_argument("--max-degree", type=int, default=None, help="last w_k to print (default dim P)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sw", help="Stiefel-Whitney classes w_1..w_K")
    dold_args(p)
    p.add_argument("--degree", type=int, default=None, help="K (default dim P)")
    p.add_argument("--formal", action="store_true", help="allow K > dim P (formal series)")
    p.set_defaults(func=cmd_sw)

    p = sub.add_parser("sw-number", help="w_J[P] with J = 1^m.2I (or an explicit --J)")
    dold_args(p)
    p.add_argument("--I", default=None, help="partition i1,i2,... of d")
    p.add_argument("--J", default=None, help="explicit J = j1,j2,... summing to dim P")
    p.set_defaults(func=cmd_sw_number)

    p = sub.add_parser("cobordism", help="is [P(m, X)] nonzero in unoriented bordism")
    dold_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cobordism)

    p = sub.add_parser("clifford", help="build and check the real Clifford generators")
    p.add_argument("--r", type=int, required=True, help="even r, 2 <= r <= 16")
    p.add_argument("--dump", action="store_true", help="print the matrices as JSON")
    p.set_defaults(func=cmd_clifford)

    p = sub.add_parser("table", help="verdict sweep over m and block shapes")
    p.add_argument("--m-range", required=True, help="A..B")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--what", choices=["stable", "parallel", "cobordism", "all"], default="all")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"gendold {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
