"""Command-line front end.

    weylcount gf total --d 2 --order 4
    weylcount count matchings --n 3 --bilateral
    weylcount verify cor22-four-way --max-d 2 --max-n 4 --format json

Counts are always printed and serialized as decimal strings.  ``verify``
exits 0 when every grid point matches, 1 on any mismatch and 2 on usage
errors.  ``--expect FILE`` compares the result values with a golden file
and exits 1 if they differ.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from . import identities, objects, walks
from .walks import Partition, WeylPoint

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _weyl_point(text: str) -> WeylPoint:
    try:
        return WeylPoint(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a strictly decreasing list of positive integers"
        ) from None


def _partition(text: str) -> Partition:
    try:
        return Partition(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a weakly decreasing list of positive integers"
        ) from None


def _values(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a list of integers") from None


def _vec(p: Sequence[int] | None) -> str | None:
    return None if p is None else ",".join(str(x) for x in p)


def _table(n_values: Sequence[tuple[int, int]]) -> list[dict[str, Any]]:
    return [{"n": n, "value": str(v)} for n, v in n_values]


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_gf(args: argparse.Namespace) -> dict[str, Any]:
    kind, order = args.kind, args.order
    params: dict[str, Any] = {"kind": kind, "order": order}
    if kind == "walks":
        if args.src is None or args.dst is None:
            raise UsageError("gf walks needs --from and --to")
        d = _dimension(args, args.src, args.dst)
        params.update({"d": d, "from": _vec(args.src), "to": _vec(args.dst)})
        counts = identities.egf_counts(identities.gm_walk_gf(args.src, args.dst, order))
        results = list(enumerate(counts))
    elif kind in ("total", "gessel"):
        if args.d is None:
            raise UsageError(f"gf {kind} needs --d")
        params["d"] = args.d
        if kind == "total":
            results = list(enumerate(identities.egf_counts(identities.total_walk_gf(args.d, order))))
        else:
            results = list(enumerate(identities.gessel_counts(identities.gessel_gf(args.d, order))))
    elif kind == "gengessel":
        if args.lam is None or args.nu is None:
            raise UsageError("gf gengessel needs --lambda and --nu")
        d = _dimension(args, args.lam, args.nu)
        gap = args.lam.size - args.nu.size
        if gap < 0:
            raise UsageError("gf gengessel needs |lambda| >= |nu|")
        params.update({"d": d, "lambda": _vec(args.lam), "nu": _vec(args.nu)})
        s = identities.generalized_gessel_gf(args.lam, args.nu, order)
        results = list(enumerate(identities.generalized_gessel_counts(s, gap)))
    elif kind == "bsm":
        results = list(enumerate(identities.egf_counts(identities.bsm_egf(order))))
    else:
        results = list(enumerate(identities.egf_counts(identities.involution_egf(order))))
    return {"command": f"gf {kind}", "params": params, "results": _table(results)}


def _dimension(args: argparse.Namespace, *points: WeylPoint) -> int:
    dims = {len(p) for p in points}
    if args.d is not None:
        dims.add(args.d)
    if len(dims) != 1:
        raise UsageError("all points must have the same dimension (and match --d if given)")
    return dims.pop()


def cmd_count(args: argparse.Namespace) -> dict[str, Any]:
    kind = args.kind
    params: dict[str, Any] = {"kind": kind}
    if kind == "matchings":
        n = _need(args.n, "--n")
        params.update(
            {"n": n, "max_crossing": args.max_crossing, "bilateral": args.bilateral, "use_nesting": args.use_nesting}
        )
        value = objects.count_matchings(n, args.max_crossing, args.bilateral, args.use_nesting)
    elif kind == "tableaux":
        n = _need(args.n, "--n")
        params.update({"n": n, "height": args.height, "shape": _vec(args.shape), "palindromic": args.palindromic})
        if args.palindromic and args.shape:
            raise UsageError("--palindromic applies only to tableaux ending at the empty shape")
        shape = () if args.palindromic else args.shape
        value = objects.count_oscillating_tableaux(n, args.height, shape, args.palindromic)
    elif kind == "walks":
        src = _need(args.src, "--from")
        params.update({"from": _vec(src), "to": _vec(args.dst), "ballot": args.ballot})
        if args.dst is not None and len(args.dst) != len(src):
            raise UsageError("--from and --to must have the same dimension")
        if args.ballot:
            dst = _need(args.dst, "--to")
            n = dst.size - src.size
            value = walks.ballot_walk_count(src, dst)
        else:
            n = _need(args.n, "--n")
            if args.dst is None:
                value = walks.total_oscillating_walk_count(src, n)
            else:
                value = walks.oscillating_walk_count(src, args.dst, n)
        params["n"] = n
    elif kind == "syt":
        shape = _need(args.shape, "--shape")
        n = shape.size
        params["shape"] = _vec(shape)
        value = sum(1 for _ in objects.enumerate_syt(shape))
    else:
        n = _need(args.n, "--n")
        d = _need(args.d, "--d")
        params.update({"n": n, "d": d})
        value = objects.count_lis_bounded(n, d)
    return {"command": f"count {kind}", "params": params, "results": _table([(n, value)])}


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required here")
    return value


def cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    key = args.identity
    if args.values is not None:
        if key != "bsm3-recurrence":
            raise UsageError("--values applies only to bsm3-recurrence")
        if len(args.values) < 3:
            raise UsageError("--values needs at least 3 entries")
        report = identities.check_bsm3_recurrence(args.values)
    else:
        report = identities.verify_identity(key, args.max_d, args.max_n)
    results = []
    for rec in report.records:
        row: dict[str, Any] = {"n": rec.point.get("n")}
        row.update({k: v for k, v in rec.point.items() if k != "n"})
        row.update(
            {"label": rec.label, "value": str(rec.formula), "oracle": str(rec.oracle), "match": rec.match}
        )
        results.append(row)
    return {
        "command": f"verify {key}",
        "params": {
            "identity": key,
            "max_d": args.max_d,
            "max_n": args.max_n,
            "values": None if args.values is None else [str(v) for v in args.values],
            "checked_range": report.checked_range,
        },
        "results": results,
        "pass": report.passed,
    }


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------


def _columns(results: list[dict[str, Any]]) -> list[str]:
    cols: list[str] = []
    for row in results:
        for k in row:
            if k not in cols:
                cols.append(k)
    return cols


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(record: dict[str, Any], fmt: str) -> str:
    results = record["results"]
    if fmt == "json":
        return json.dumps(record, indent=2)
    cols = _columns(results)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for row in results:
            writer.writerow([_cell(row.get(c)) for c in cols])
        return buf.getvalue().rstrip("\n")
    rows = [[_cell(row.get(c)) for c in cols] for row in results]
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(cols)]
    lines = [f"# {record['command']}"]
    lines.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
    lines += ["  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in rows]
    if "pass" in record:
        lines.append(f"# overall: {'PASS' if record['pass'] else 'FAIL'}")
    return "\n".join(lines)


def load_expected(path: Path) -> list[str]:
    """Golden values: a JSON list, or an object with ``values`` or ``results[*].value``."""
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        if "results" in data:
            data = [r["value"] for r in data["results"]]
        else:
            data = data["values"]
    return [str(v) for v in data]


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylcount",
        description="Exact determinant generating functions for Weyl-chamber walks, "
        "oscillating tableaux and matchings, with brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--expect", type=Path, help="golden file of expected values")

    gf = sub.add_parser("gf", parents=[common], help="count table from a generating function")
    gf.add_argument("kind", choices=("walks", "total", "gessel", "gengessel", "bsm", "involution"))
    gf.add_argument("--order", type=int, required=True, help="truncation degree in t")
    gf.add_argument("--d", type=int)
    gf.add_argument("--from", dest="src", type=_weyl_point)
    gf.add_argument("--to", dest="dst", type=_weyl_point)
    gf.add_argument("--lambda", dest="lam", type=_weyl_point)
    gf.add_argument("--nu", type=_weyl_point)
    gf.set_defaults(func=cmd_gf)

    count = sub.add_parser("count", parents=[common], help="brute-force or DP count")
    count.add_argument("kind", choices=("matchings", "tableaux", "walks", "syt", "lis"))
    count.add_argument("--n", type=int)
    count.add_argument("--d", type=int)
    count.add_argument("--max-crossing", type=int)
    count.add_argument("--use-nesting", action="store_true")
    count.add_argument("--bilateral", action="store_true")
    count.add_argument("--height", type=int)
    count.add_argument("--shape", type=_partition)
    count.add_argument("--palindromic", action="store_true")
    count.add_argument("--from", dest="src", type=_weyl_point)
    count.add_argument("--to", dest="dst", type=_weyl_point)
    count.add_argument("--ballot", action="store_true", help="positive steps only")
    count.set_defaults(func=cmd_count)

    verify = sub.add_parser("verify", parents=[common], help="check an identity on a grid")
    verify.add_argument("identity", choices=sorted(identities.IDENTITIES))
    verify.add_argument("--max-d", type=int)
    verify.add_argument("--max-n", type=int)
    verify.add_argument("--values", type=_values, help="explicit sequence for bsm3-recurrence")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("order", "n", "d", "max_n", "max_d", "height", "max_crossing"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be nonnegative")

    start = time.perf_counter()
    try:
        record = args.func(args)
    except (UsageError, objects.EnumerationCapError, ValueError) as exc:
        parser.error(str(exc))
    status = EXIT_OK
    if "pass" in record and not record["pass"]:
        status = EXIT_MISMATCH
    if args.expect is not None:
        try:
            expected = load_expected(args.expect)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            parser.error(f"cannot read golden file {args.expect}: {exc}")
        got = [r["value"] for r in record["results"]]
        record["expected_match"] = got == expected
        if got != expected:
            status = EXIT_MISMATCH
    record["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    print(render(record, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
