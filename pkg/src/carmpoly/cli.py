"""Command-line interface.

Exit codes: 0 ok, 1 domain error (or failed membership/verify), 2 usage
error, 3 resource limit.  Domain/range/resource failures print a JSON error
object to stderr.  All data output is deterministic: no timestamps, no
randomness.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import berndenom, numbersets, polygon, scan, verify
from .config import OUTPUT_FORMATS, RunConfig, load_run_config
from .errors import DomainError, RangeError, ResourceError

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit_rows(rows: list[dict], fmt: str, out=None) -> None:
    out = out if out is not None else sys.stdout
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt == "jsonl":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
    else:  # table
        if not rows:
            return
        keys = list(rows[0])
        widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
        out.write("  ".join(k.ljust(widths[k]) for k in keys).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(r[k]).rjust(widths[k]) for k in keys) + "\n")


def _parse_set_tag(tag: str) -> tuple[str, int | None]:
    """Parse S | C | Cprime | SF | Sd=<d> | Kd=<d>."""
    if tag in ("S", "C", "Cprime", "SF"):
        return tag, None
    for prefix in ("Sd=", "Kd="):
        if tag.startswith(prefix):
            try:
                d = int(tag[len(prefix) :])
            except ValueError:
                raise DomainError(f"bad set index in {tag!r}") from None
            if d < 1:
                raise DomainError(f"set index must be >= 1 in {tag!r}")
            return prefix[:2], d
    raise DomainError(f"unknown set tag {tag!r}")


def cmd_check(args, cfg: RunConfig) -> int:
    report = numbersets.membership_report(args.m)
    if args.set is None:
        json.dump(report.to_json_dict(), sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_OK
    kind, d = _parse_set_tag(args.set)
    if kind == "SF":
        member = report.in_SF
    elif kind == "S":
        member = report.in_S
    elif kind == "C":
        member = report.in_C
    elif kind == "Cprime":
        member = report.in_Cprime
    elif kind == "Sd":
        member = numbersets.in_S_d(args.m, d)
    else:
        member = numbersets.is_knodel(args.m, d).in_K
    json.dump({"m": args.m, "set": args.set, "member": member}, sys.stdout)
    sys.stdout.write("\n")
    return EXIT_OK if member else EXIT_DOMAIN


def _denom_row(n: int) -> dict:
    parts = berndenom.denominator_parts(n)
    return {
        "n": n,
        "number_denom": berndenom.denom_bernoulli_number(n),
        "no_const_denom": parts.poly_no_const,
        "poly_denom": berndenom.denom_poly(n),
        "dividing": parts.dividing,
        "non_dividing": parts.non_dividing,
        "complementary": parts.complementary,
    }


def cmd_denom(args, cfg: RunConfig) -> int:
    if args.upto is not None:
        rows = [_denom_row(n) for n in range(1, args.upto + 1)]
    elif args.n is None:
        _error("usage", "denom needs an index or --upto")
        return EXIT_USAGE
    else:
        rows = [_denom_row(args.n)]
    _emit_rows(rows, cfg.output_format)
    return EXIT_OK


def cmd_polygonal(args, cfg: RunConfig) -> int:
    form = polygon.polygonal_decomposition(args.m)
    json.dump(form.to_json_dict() if form else None, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_enumerate(args, cfg: RunConfig) -> int:
    kind, d = _parse_set_tag(args.set)
    if kind in ("SF", "Kd"):
        raise DomainError(f"enumerate supports S, C, Cprime, Sd=<d>; got {args.set!r}")
    fmt = "csv" if args.csv else ("jsonl" if args.jsonl else cfg.output_format)
    if fmt == "json":
        fmt = "jsonl"
    rows = []
    for report in scan.stream_S(
        args.limit,
        segment_size=cfg.segment_size,
        threads=cfg.threads,
        max_limit=cfg.max_limit,
    ):
        if kind == "C" and not report.in_C:
            continue
        if kind == "Cprime" and not report.in_Cprime:
            continue
        if kind == "Sd" and not numbersets.in_S_d(report.m, d):
            continue
        row = report.to_json_dict()
        if fmt in ("csv", "table"):
            row["per_prime"] = ";".join(f"{p}:{s}:{r}" for p, s, r in report.per_prime)
        if fmt == "jsonl":
            sys.stdout.write(json.dumps(row) + "\n")
        else:
            rows.append(row)
    if fmt != "jsonl":
        _emit_rows(rows, fmt)
    return EXIT_OK


def cmd_count(args, cfg: RunConfig) -> int:
    max_limit = cfg.max_limit
    if args.extended:
        max_limit = max(max_limit, args.limit)
    rows = scan.count_sets(
        args.limit,
        segment_size=cfg.segment_size,
        threads=cfg.threads,
        max_limit=max_limit,
        checkpoint=args.checkpoint,
    )
    _emit_rows(
        [
            {
                "x": r.x,
                "c_prime_count": r.c_prime_count,
                "carmichael_count": r.carmichael_count,
                "s_count": r.s_count,
            }
            for r in rows
        ],
        cfg.output_format,
    )
    return EXIT_OK


def cmd_first(args, cfg: RunConfig) -> int:
    m = scan.first_occurrence(args.shape, args.set, args.bound)
    json.dump({"shape": args.shape, "set": args.set, "bound": args.bound, "m": m}, sys.stdout)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_alpha(args, cfg: RunConfig) -> int:
    max_limit = max(cfg.max_limit, args.bound) if args.extended else cfg.max_limit
    report = polygon.sharp_alpha(
        args.set,
        args.bound,
        segment_size=cfg.segment_size,
        threads=cfg.threads,
        max_limit=max_limit,
    )
    json.dump(report.to_json_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    result = verify.run_profile(args.profile, cfg)
    if result.failed:
        _error("verify", f"first failing check: {result.failed[0]}")
        return EXIT_DOMAIN
    return EXIT_OK


def _error(kind: str, message: str) -> None:
    json.dump({"error": {"type": kind, "message": message}}, sys.stderr)
    sys.stderr.write("\n")


def build_parser() -> argparse.ArgumentParser:
    # shared options accepted both before and after the subcommand; SUPPRESS
    # keeps a post-command occurrence from clobbering a pre-command one
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="path to a JSON config file")
    common.add_argument(
        "--format", choices=OUTPUT_FORMATS, dest="output_format", default=argparse.SUPPRESS
    )
    common.add_argument("--segment-size", type=int, dest="segment_size", default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--max-limit", type=int, dest="max_limit", default=argparse.SUPPRESS)
    common.add_argument("--oracle-bound", type=int, dest="oracle_bound", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="carmpoly",
        description="Digit-sum set scans, Bernoulli denominators, and polygonal forms.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="membership report for one number")
    p.add_argument("m", type=int)
    p.add_argument("--set", help="S | C | Cprime | SF | Sd=<d> | Kd=<d>: exit 0/1")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("denom", parents=[common], help="denominator rows")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--upto", type=int, help="emit rows for 1..N")
    p.set_defaults(fn=cmd_denom)

    p = sub.add_parser("polygonal", parents=[common], help="polygonal form of a base-set member")
    p.add_argument("m", type=int)
    p.set_defaults(fn=cmd_polygonal)

    p = sub.add_parser("enumerate", parents=[common], help="stream set members")
    p.add_argument("--set", default="S")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--jsonl", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="set counts at powers of 10")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--checkpoint", help="resumable state file for long runs")
    p.add_argument("--extended", action="store_true", help="allow limits above max_limit")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("first", parents=[common], help="first shaped member of a set")
    p.add_argument("--shape", choices=scan.SHAPES, required=True)
    p.add_argument("--set", choices=scan.SET_TAGS, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(fn=cmd_first)

    p = sub.add_parser("alpha", parents=[common], help="sharp prime-size constant of a set")
    p.add_argument("--set", choices=polygon.ALPHA_SET_TAGS, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--extended", action="store_true", help="allow bounds above max_limit")
    p.set_defaults(fn=cmd_alpha)

    p = sub.add_parser("verify", parents=[common], help="run the reproduction checks")
    p.add_argument(
        "profile", nargs="?", default="quick", choices=verify.PROFILES
    )
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_run_config(
            config_path=getattr(args, "config", None),
            overrides={
                name: getattr(args, name, None)
                for name in (
                    "output_format",
                    "segment_size",
                    "threads",
                    "max_limit",
                    "oracle_bound",
                )
            },
        )
    except (ValueError, OSError) as exc:
        _error("usage", str(exc))
        return EXIT_USAGE
    try:
        return args.fn(args, cfg)
    except ResourceError as exc:
        _error("resource", str(exc))
        return EXIT_RESOURCE
    except RangeError as exc:
        _error("range", str(exc))
        return EXIT_DOMAIN
    except DomainError as exc:
        _error("domain", str(exc))
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
