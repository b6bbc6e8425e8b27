"""Command-line front end.

Exit codes: 0 success, 1 domain failure (invalid quandle, failed theorem
row), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidParseError, act, act_evaluated, parse_braid
from .presentation import PresentationError, count_colorings, load_presentation
from .quandle import AxiomError, FiniteQuandle, QuandleError, load_quandle, make_q_n, parse_table, validate
from .terms import render
from .theorem import chart_from_token, theorem_rows


class UsageError(Exception):
    pass


def resolve_quandle(token: str) -> FiniteQuandle:
    kind, _, arg = token.partition(":")
    if kind == "qN":
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"bad quandle order in {token!r}") from None
        try:
            return make_q_n(n)
        except QuandleError as exc:
            raise UsageError(str(exc)) from None
    if kind == "file" and arg:
        return load_quandle(arg)
    raise UsageError(f"unknown quandle {token!r} (use qN:<N> or file:<path>)")


def resolve_chart(token: str):
    if token.startswith("file:"):
        return load_presentation(token[5:])
    try:
        return chart_from_token(token)
    except ValueError as exc:
        raise UsageError(f"{exc} (use t0, t:<k>, tstar:<k> or file:<path>)") from None


def _emit(args, payload: dict, text_lines) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_verify_quandle(args) -> int:
    kind, _, arg = args.quandle.partition(":")
    if kind == "qN":
        table = resolve_quandle(args.quandle).op_table
    elif kind == "file" and arg:
        with open(arg) as fh:
            table = parse_table(fh.read())
    else:
        raise UsageError(f"unknown quandle {args.quandle!r}")
    try:
        q = validate(table)
    except AxiomError as exc:
        _emit(args, {"quandle": args.quandle, "valid": False, "error": type(exc).__name__,
                     "witness": list(exc.witness), "message": str(exc)},
              [f"invalid: {exc}"])
        return 1
    rows = [" ".join(str(v) for v in row) for row in q.op_table]
    _emit(args, {"quandle": args.quandle, "valid": True, "order": q.order,
                 "table": q.op_table.tolist()}, [*rows, "valid"])
    return 0


def cmd_act(args) -> int:
    w = parse_braid(args.word, args.rank)
    if args.assign is not None:
        if args.quandle is None:
            raise UsageError("--assign needs --quandle")
        q = resolve_quandle(args.quandle)
        try:
            values = [int(v) for v in args.assign.split(",")]
        except ValueError:
            raise UsageError(f"bad assignment {args.assign!r}") from None
        if len(values) != args.rank or not all(1 <= v <= q.order for v in values):
            raise UsageError(f"--assign needs {args.rank} values in 1..{q.order}")
        out = act_evaluated(w, values, q)
    else:
        out = tuple(render(t) for t in act(w).terms)
    _emit(args, {"rank": args.rank, "word": args.word, "images": list(out)},
          [f"x{j} -> {v}" for j, v in enumerate(out, 1)])
    return 0


def cmd_count(args) -> int:
    p = resolve_chart(args.chart)
    q = resolve_quandle(args.quandle)
    report = count_colorings(p, q, workers=args.workers)
    payload = {"chart": args.chart, "quandle": args.quandle, "count": report.count,
               "trivial_count": report.trivial_count}
    if args.list:
        payload["colorings"] = [list(c) for c in report.colorings]
    lines = [str(report.count)]
    if args.list:
        lines += [",".join(map(str, c)) for c in report.colorings]
    _emit(args, payload, lines)
    return 0


def cmd_theorem_check(args) -> int:
    rows = theorem_rows(args.max_k, args.max_n, workers=args.workers)
    ok = all(r.passed for r in rows)
    lines = [f"{'PASS' if r.passed else 'FAIL'} ({r.case}) {r.chart} over {r.quandle}: "
             f"expected {r.expected}, computed {r.computed}" for r in rows]
    lines.append(f"{sum(r.passed for r in rows)}/{len(rows)} rows passed")
    _emit(args, {"rows": [r.as_dict() for r in rows], "all_pass": ok}, lines)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quandlecolor",
                                     description="Quandle colorings of chart surface braids.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("verify-quandle", parents=[common], help="check the quandle axioms")
    p.add_argument("--quandle", required=True, help="qN:<N> or file:<path>")
    p.set_defaults(func=cmd_verify_quandle)

    p = sub.add_parser("act", parents=[common], help="braid action on free-quandle generators")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word", required=True, help='e.g. "s2^-2 s1"')
    p.add_argument("--assign", help="comma-separated generator values")
    p.add_argument("--quandle", help="qN:<N> or file:<path>")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("count", parents=[common], help="count quandle colorings")
    p.add_argument("--chart", required=True, help="t0, t:<k>, tstar:<k> or file:<path>")
    p.add_argument("--quandle", required=True, help="qN:<N> or file:<path>")
    p.add_argument("--list", action="store_true", help="list every coloring")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("theorem-check", parents=[common], help="reproduce the closed-form counts")
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--max-N", dest="max_n", type=int, default=6)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_theorem_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except AxiomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, BraidParseError, PresentationError, QuandleError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
