"""Command-line front end: ``fullproj {count,sequence,identity,board,scan}``.

Exit codes: 0 success, 1 oracle cross-check mismatch, 2 invalid input,
3 size limit exceeded, 4 conjecture violation found by ``scan``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .boardio import load_board, parse_skew
from .boards import (
    DEFAULT_IE_LIMIT,
    board_from_skew,
    check_fulmek_range,
    check_log_concavity,
    dual_polynomial_at_minus_one,
    dual_rook_numbers,
    rook_numbers,
)
from .errors import DomainError, LimitExceededError
from .multiindex import BoxShape
from .oracle import DEFAULT_ORACLE_LIMIT, oracle_count
from .projection import check_identity, count_fully_projected, count_sequence
from .scan import CHECKS, scan_skew_boards

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_LIMIT = 3
EXIT_VIOLATION = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _dims(text: str) -> BoxShape:
    try:
        return BoxShape(tuple(int(p) for p in text.split(",")))
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"invalid dims {text!r}: {exc}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--oracle", action="store_true",
                        help="cross-check the formula against brute-force enumeration")
    common.add_argument("--oracle-limit", type=_positive, default=DEFAULT_ORACLE_LIMIT,
                        help="largest cell count the brute-force oracle accepts")
    common.add_argument("--ie-limit", type=_positive, default=DEFAULT_IE_LIMIT,
                        help="largest occupied rows + columns for dual rook inclusion-exclusion")

    parser = _Parser(prog="fullproj", description="Exact counts of fully-projected subsets and dual rook numbers.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common], help="t_k for one box and one k")
    p.add_argument("--dims", type=_dims, required=True, help="comma-separated box dimensions")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("sequence", parents=[common], help="t_1 ... t_N for one box")
    p.add_argument("--dims", type=_dims, required=True)

    p = sub.add_parser("identity", parents=[common], help="alternating sum of t_k and its sign")
    p.add_argument("--dims", type=_dims, required=True)

    p = sub.add_parser("board", parents=[common], help="rook data of one board")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="ASCII grid or JSON board file")
    src.add_argument("--skew", help='skew shape "outer/inner", e.g. "3,2,1/1,1"')
    p.add_argument("action", choices=("rook", "dual", "eval", "fulmek", "logconcave"))

    p = sub.add_parser("scan", parents=[common], help="check every skew board up to a size")
    p.add_argument("--max-cells", type=_positive, required=True)
    p.add_argument("--check", choices=CHECKS, action="append",
                   help="check to run; repeatable, default all")
    return parser


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _table(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k:<{width}}  {_fmt(v)}" for k, v in pairs)


def _sequence_out(fmt: str, label: str, values, start: int) -> str:
    rows = [(k, v) for k, v in enumerate(values, start=start)]
    if fmt == "csv":
        return _csv([("k", label)] + rows)
    return _table([("k", label)] + [(str(k), v) for k, v in rows])


def _mapping_out(fmt: str, mapping: dict) -> str:
    items = [(k, json.dumps(v) if isinstance(v, (list, dict)) else _fmt(v)) for k, v in mapping.items()]
    if fmt == "csv":
        return _csv([[k for k, _ in items], [v for _, v in items]])
    return _table(items)


def _params(args) -> dict:
    params = {}
    for key, value in sorted(vars(args).items()):
        if key in ("command", "format"):
            continue
        if isinstance(value, BoxShape):
            value = list(value.dims)
        params[key] = value
    return params


def render_record(command: str, params: dict, result, elapsed_ms: float) -> str:
    record = {
        "command": command,
        "params": params,
        "result": result,
        "version": __version__,
        "elapsed_ms": round(elapsed_ms, 3),
    }
    return json.dumps(record, sort_keys=True, indent=2)


def _run_count(args):
    k = args.k
    value = count_fully_projected(args.dims, k)
    result = {"k": k, "value": value}
    code = EXIT_OK
    if args.oracle:
        oracle = oracle_count(args.dims, k, args.oracle_limit)
        result.update(oracle=oracle, match=oracle == value)
        code = EXIT_OK if oracle == value else EXIT_MISMATCH
    return result, code, lambda fmt: _mapping_out(fmt, result)


def _run_sequence(args):
    values = count_sequence(args.dims).as_list()
    code = EXIT_OK
    if args.oracle:
        for k, value in enumerate(values, start=1):
            if oracle_count(args.dims, k, args.oracle_limit) != value:
                code = EXIT_MISMATCH
    return values, code, lambda fmt: _sequence_out(fmt, "t_k", values, 1)


def _run_identity(args):
    result = check_identity(args.dims).as_dict()
    return result, EXIT_OK, lambda fmt: _mapping_out(fmt, result)


def _run_board(args):
    board = load_board(args.file) if args.file else _skew_board(args.skew)
    action = args.action
    if action == "rook":
        values = rook_numbers(board).as_list()
        return values, EXIT_OK, lambda fmt: _sequence_out(fmt, "R_k", values, 0)
    if action == "dual":
        values = dual_rook_numbers(board, args.ie_limit).as_list()
        return values, EXIT_OK, lambda fmt: _sequence_out(fmt, "dual_R_k", values, 0)
    if action == "eval":
        value = dual_polynomial_at_minus_one(board, args.ie_limit)
        return value, EXIT_OK, lambda fmt: _mapping_out(fmt, {"value": value})
    if action == "fulmek":
        result = {
            "value": dual_polynomial_at_minus_one(board, args.ie_limit),
            "in_range": check_fulmek_range(board, args.ie_limit),
        }
        return result, EXIT_OK, lambda fmt: _mapping_out(fmt, result)
    result = check_log_concavity(dual_rook_numbers(board, args.ie_limit)).as_dict()
    return result, EXIT_OK, lambda fmt: _mapping_out(fmt, result)


def _skew_board(spec: str):
    return board_from_skew(parse_skew(spec))


def _run_scan(args):
    summary = scan_skew_boards(args.max_cells, args.check or CHECKS, ie_limit=args.ie_limit)
    result = summary.as_dict()
    code = EXIT_VIOLATION if summary.violations else EXIT_OK

    def text(fmt):
        if fmt == "csv":
            rows = [("shape", "check", "detail")]
            rows += [(v["shape"], v["check"], v.get("value", v.get("index"))) for v in summary.violations]
            return _csv(rows)
        lines = [
            _table([
                ("max_cells", summary.max_cells),
                ("checks", ",".join(summary.checks)),
                ("boards_scanned", summary.boards_scanned),
                ("violations", len(summary.violations)),
            ])
        ]
        lines += [f"  {v['shape']}  {v['check']}  {v.get('value', v.get('index'))}" for v in summary.violations]
        return "\n".join(lines)

    return result, code, text


_COMMANDS = {
    "count": _run_count,
    "sequence": _run_sequence,
    "identity": _run_identity,
    "board": _run_board,
    "scan": _run_scan,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        result, code, text = _COMMANDS[args.command](args)
    except LimitExceededError as exc:
        print(f"fullproj: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DomainError, OSError) as exc:
        print(f"fullproj: {exc}", file=sys.stderr)
        return EXIT_INVALID
    elapsed = (time.perf_counter() - start) * 1000
    if args.format == "json":
        print(render_record(args.command, _params(args), result, elapsed))
    else:
        print(text(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
