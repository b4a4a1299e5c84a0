"""Command-line front end.

Exit codes: 0 success, 1 verification failure or input outside the map's
class, 2 usage error (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bijections import BijectionError, MapId, forward, inverse
from .catalog import ALIASES, CATALOG, IdentityId, resolve_identity
from .classes import ClassId, count_class, enumerate_class
from .core import PartitionParseError, parse_partition, parse_signed
from .harness import verify_all, verify_identity
from .qseries import ProductNotStated, TruncatedSeries, product_side, sum_side


def _identity_arg(text: str) -> IdentityId:
    try:
        return resolve_identity(text)
    except KeyError as exc:
        raise argparse.ArgumentTypeError(exc.args[0])


def _enum_arg(enum_cls, kind: str):
    def parse(text: str):
        try:
            return enum_cls(text.strip().upper())
        except ValueError:
            valid = ", ".join(e.value for e in enum_cls)
            raise argparse.ArgumentTypeError(f"unknown {kind} {text!r}; valid: {valid}")
    return parse


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-partitions",
        description="Check signed-partition forms of Rogers-Ramanujan type identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="coefficient table of one side of an identity")
    p.add_argument("--identity", required=True, type=_identity_arg)
    p.add_argument("--side", default="sum",
                   choices=["sum", "product", "ordinary-count", "signed-count"])
    p.add_argument("--max", dest="max_n", type=_nonnegative, default=200)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("enumerate", help="list the members of a class at one weight")
    p.add_argument("--class", dest="class_id", required=True, type=_enum_arg(ClassId, "class"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["lines", "json"], default="lines")

    p = sub.add_parser("biject", help="apply a bijection or its inverse")
    p.add_argument("--map", dest="map_id", required=True, type=_enum_arg(MapId, "map"))
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--input", required=True, help='comma-separated parts, e.g. "6,2" or "4,4,-1"')

    p = sub.add_parser("verify", help="run the cross-checks")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--identity", type=_identity_arg)
    which.add_argument("--all", action="store_true")
    p.add_argument("--max-n", type=_nonnegative, default=40)
    p.add_argument("--series-max", type=_nonnegative, default=60)
    p.add_argument("--bijection-max", type=_nonnegative, default=35)
    p.add_argument("--no-bijections", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")

    sub.add_parser("catalog", help="list the identities")
    return parser


def _coeffs(args, out) -> int:
    desc = CATALOG[args.identity]
    if args.side == "sum":
        series = sum_side(desc.identity_id, args.max_n)
    elif args.side == "product":
        series = product_side(desc.identity_id, args.max_n)
    elif args.side == "ordinary-count":
        series = TruncatedSeries(count_class(desc.ordinary, n) for n in range(args.max_n + 1))
    else:
        # aligned to the ordinary weight, so the offset identity lines up too
        signed = desc.signed[0]
        series = TruncatedSeries(count_class(signed, n + desc.index_offset)
                                 for n in range(args.max_n + 1))
    if args.format == "csv":
        out.write(series.to_csv())
    else:
        out.write(series.to_json() + "\n")
    return 0


def _enumerate(args, out) -> int:
    members = enumerate_class(args.class_id, args.n)
    if args.format == "json":
        out.write(json.dumps([str(m) for m in members]) + "\n")
    else:
        for m in members:
            out.write(f"{m}\n")
    return 0


def _biject(args, out, err) -> int:
    try:
        if args.inverse:
            result = inverse(args.map_id, parse_signed(args.input))
        else:
            result = forward(args.map_id, parse_partition(args.input))
    except PartitionParseError as exc:
        err.write(f"error: malformed input: {exc}\n")
        return 2
    except BijectionError as exc:
        err.write(f"error: {exc}\n")
        return 1
    out.write(f"{result}\n")
    return 0


def _verify(args, out) -> int:
    bij = None if args.no_bijections else args.bijection_max
    if args.identity is not None:
        reports = verify_identity(args.identity, args.max_n, args.series_max, bij)
    else:
        reports = verify_all(args.max_n, args.series_max, bij)
    if args.format == "json":
        out.write(json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n")
    else:
        for r in reports:
            out.write(r.summary() + "\n")
        failed = sum(not r.passed for r in reports)
        out.write(f"{len(reports) - failed}/{len(reports)} checks passed\n")
    return 0 if all(r.passed for r in reports) else 1


def _catalog(out) -> int:
    aliases = {}
    for short, ident in ALIASES.items():
        aliases.setdefault(ident, []).append(short)
    for desc in CATALOG.values():
        signed = ", ".join(c.value for c in desc.signed)
        maps = ", ".join(m.value for m in desc.maps) or "-"
        product = "-"
        if desc.product is not None:
            modulus, residues = desc.product
            product = f"parts {','.join(map(str, residues))} mod {modulus}"
        names = desc.identity_id.value
        if desc.identity_id in aliases:
            names += f" ({', '.join(aliases[desc.identity_id])})"
        out.write(f"{names}\n  {desc.label}\n  {desc.statement}\n"
                  f"  ordinary: {desc.ordinary.value}; signed: {signed}; maps: {maps}; "
                  f"product: {product}\n")
    return 0


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "coeffs":
        try:
            return _coeffs(args, out)
        except ProductNotStated as exc:
            err.write(f"error: {exc}\n")
            return 2
    if args.command == "enumerate":
        return _enumerate(args, out)
    if args.command == "biject":
        return _biject(args, out, err)
    if args.command == "verify":
        return _verify(args, out)
    return _catalog(out)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
