"""Command-line frontend.

Subcommands expose the library computations with text, json, or csv output;
``verify`` runs the self-check suites.  Exit codes: 0 success, 1 usage or
input error, 2 verification failure.  Results go to stdout, warnings to
stderr.  Exact rationals cross the boundary as "P/Q" strings on input and as
{"num", "den", "approx"} objects in json.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Optional

from . import bounds, checks, jets
from .chow import TotalClass, WeightedSummand, segre_of_weighted_sum

SCHEMA = "wsegre/1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational P/Q: {text!r}")


def _rational_json(value: Fraction) -> dict:
    return {
        "num": str(value.numerator),
        "den": str(value.denominator),
        "approx": float(value),
    }


def _rational_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value} (~ {float(value):.12g})"


def _print_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _print_csv(header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _emit_scalar(args, command: str, inputs: dict, value: Fraction, warnings=()):
    for note in warnings:
        print(f"warning: {note}", file=sys.stderr)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": command,
            "inputs": inputs,
            "result": _rational_json(value),
            "warnings": list(warnings),
        }
        _print_json(payload)
    elif args.format == "csv":
        _print_csv(
            ("n", "k", "m", "num", "den", "approx"),
            [(
                inputs.get("n", ""),
                inputs.get("k", ""),
                inputs.get("m", ""),
                value.numerator,
                value.denominator,
                float(value),
            )],
        )
    else:
        print(_rational_text(value))
    return 0


def _json_inputs(inputs: dict) -> dict:
    out = {}
    for key, val in inputs.items():
        out[key] = _rational_json(val) if isinstance(val, Fraction) else val
    return out


# ------------------------------------------------------------ geometry input


def _read_geometry_file(path: str) -> dict:
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected 'key = value'")
                key, _, val = line.partition("=")
                values[key.strip()] = val.strip()
    except OSError as exc:
        raise UsageError(f"cannot read geometry file: {exc}")
    return values


def _resolve_geometry(args) -> bounds.GeometryInput:
    raw = {}
    if getattr(args, "geometry", None):
        raw = _read_geometry_file(args.geometry)
    def pick(flag, key, convert):
        val = getattr(args, flag, None)
        if val is not None:
            return val
        if key in raw:
            try:
                return convert(raw[key])
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad value for {key!r} in geometry file")
        raise UsageError(f"missing required input {key!r} (flag or geometry file)")
    n = pick("n", "n", int)
    kd_n = pick("kd_n", "kd_n", Fraction)
    neg_dn = pick("neg_dn", "neg_dn", Fraction)
    components = getattr(args, "components", None)
    if components is None:
        try:
            components = int(raw.get("components", 1))
        except ValueError:
            raise UsageError("bad value for 'components' in geometry file")
    try:
        return bounds.GeometryInput(n=n, kd_n=kd_n, neg_dn=neg_dn, components=components)
    except ValueError as exc:
        raise UsageError(str(exc))


# ---------------------------------------------------------------- subcommands


def _parse_summand(spec: str, dim: int) -> WeightedSummand:
    fields: dict = {}
    tail: Optional[list] = None
    for token in spec.split(","):
        if "=" in token:
            key, _, val = token.partition("=")
            key = key.strip()
            if key in ("segre", "chern"):
                fields[key] = [val]
                tail = fields[key]
            elif key in ("rank", "weight"):
                fields[key] = val
                tail = None
            else:
                raise UsageError(f"unknown summand field {key!r}")
        else:
            if tail is None:
                raise UsageError(f"stray token {token!r} in summand {spec!r}")
            tail.append(token)
    if ("segre" in fields) == ("chern" in fields):
        raise UsageError("each summand needs exactly one of segre=... or chern=...")
    try:
        rank = int(fields.get("rank", 1))
        weight = int(fields.get("weight", 1))
        key = "segre" if "segre" in fields else "chern"
        coeffs = [Fraction(c) for c in fields[key]]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed summand {spec!r}")
    cls = TotalClass(dim, coeffs)
    try:
        if key == "chern":
            return WeightedSummand.from_chern(cls, rank, weight)
        return WeightedSummand(cls, rank, weight)
    except ValueError as exc:
        raise UsageError(f"summand {spec!r}: {exc}")


def _cmd_segre(args) -> int:
    summands = [_parse_summand(spec, args.dim) for spec in args.summand]
    result = segre_of_weighted_sum(summands)
    if args.format == "json":
        _print_json({
            "schema": SCHEMA,
            "command": "segre",
            "inputs": {
                "dim": args.dim,
                "summands": [
                    {
                        "rank": s.rank,
                        "weight": s.weight,
                        "segre": [_rational_json(c) for c in s.segre.coeffs],
                    }
                    for s in summands
                ],
            },
            "result": {"coeffs": [_rational_json(c) for c in result.coeffs]},
            "warnings": [],
        })
    elif args.format == "csv":
        _print_csv(
            ("degree", "num", "den", "approx"),
            [
                (d, c.numerator, c.denominator, float(c))
                for d, c in enumerate(result.coeffs)
            ],
        )
    else:
        print(str(result))
    return 0


def _cmd_volume(args) -> int:
    if getattr(args, "geometry", None) and (args.kd_n is None or args.n is None):
        raw = _read_geometry_file(args.geometry)
        try:
            if args.kd_n is None and "kd_n" in raw:
                args.kd_n = Fraction(raw["kd_n"])
            if args.n is None and "n" in raw:
                args.n = int(raw["n"])
        except (ValueError, ZeroDivisionError):
            raise UsageError("bad value in geometry file")
    if args.n is None or args.kd_n is None:
        raise UsageError("volume needs --n and --kd-n (or a geometry file)")
    value = bounds.logarithmic_volume(args.n, args.k, args.kd_n)
    inputs = _json_inputs({"n": args.n, "k": args.k, "kd_n": args.kd_n})
    return _emit_scalar(args, "volume", inputs, value)


def _cmd_bound(args) -> int:
    geometry = _resolve_geometry(args)
    value = bounds.volume_lower_bound(geometry, args.k)
    inputs = _json_inputs({
        "n": geometry.n,
        "k": args.k,
        "kd_n": geometry.kd_n,
        "neg_dn": geometry.neg_dn,
        "components": geometry.components,
        "canonical_volume": geometry.canonical_volume,
    })
    return _emit_scalar(args, "bound", inputs, value, geometry.warnings)


def _cmd_threshold(args) -> int:
    if args.n <= 3:
        raise UsageError("thresholds start at n = 4 (below that no bound is claimed)")
    if args.n in (4, 5) and args.neg_dn is None:
        raise UsageError(f"n = {args.n} needs --neg-dn (the signed value (-D)^n)")
    try:
        value = bounds.threshold_logk(args.n, args.neg_dn)
    except ValueError as exc:
        raise UsageError(str(exc))
    try:
        min_k: Optional[int] = math.ceil(math.exp(value))
    except OverflowError:
        min_k = None
    min_k_text = str(min_k) if min_k is not None else "astronomically large (exp overflows)"
    if args.format == "json":
        inputs = {"n": args.n}
        if args.neg_dn is not None:
            inputs["neg_dn"] = _rational_json(args.neg_dn)
        _print_json({
            "schema": SCHEMA,
            "command": "threshold",
            "inputs": inputs,
            "result": {
                "logk": value,
                "rounded": round(value),
                "min_integer_k": min_k,
            },
            "warnings": [],
        })
    elif args.format == "csv":
        _print_csv(("n", "logk", "rounded", "min_integer_k"),
                   [(args.n, repr(value), round(value), min_k_text)])
    else:
        print(f"threshold log k: {value!r}")
        print(f"rounded: {round(value)}")
        print(f"min integer k: {min_k_text}")
    return 0


def _cmd_table1(args) -> int:
    rows = bounds.threshold_table()
    if args.format == "json":
        _print_json({
            "schema": SCHEMA,
            "command": "table1",
            "inputs": {},
            "result": {
                "rows": [
                    {
                        "n": row.n,
                        "coefficient": row.coefficient,
                        "logk": row.logk,
                        "text": row.text,
                        "footnotes": list(row.footnotes),
                    }
                    for row in rows
                ],
            },
            "warnings": [],
        })
    elif args.format == "csv":
        _print_csv(
            ("n", "coefficient", "logk", "text"),
            [
                (row.n, row.coefficient if row.coefficient is not None else "",
                 repr(row.logk) if row.logk is not None else "", row.text)
                for row in rows
            ],
        )
    else:
        print("n    threshold on log k")
        notes = []
        for row in rows:
            print(f"{row.n:<4} {row.text}")
            for note in row.footnotes:
                if note not in notes:
                    notes.append(note)
        for i, note in enumerate(notes, start=1):
            print(f"note {i}: {note}")
    return 0


def _cmd_ranks(args) -> int:
    value = jets.jet_rank(args.n, args.k, args.m)
    inputs = {"n": args.n, "k": args.k, "m": args.m}
    return _emit_scalar(args, "ranks", inputs, Fraction(value))


def _cmd_boundary(args) -> int:
    if args.neg_dn >= 0:
        raise UsageError("boundary data needs a negative signed value (-D)^n")
    boundary = jets.BoundaryData(
        n=args.n,
        neg_dn_abs=-args.neg_dn,
        components=args.components if args.components is not None else 1,
    )
    value = jets.boundary_jet_sections(args.k, args.m, boundary)
    inputs = _json_inputs({
        "n": args.n,
        "k": args.k,
        "m": args.m,
        "neg_dn": args.neg_dn,
        "components": boundary.components,
    })
    return _emit_scalar(args, "boundary", inputs, value)


def _cmd_minorder(args) -> int:
    geometry = _resolve_geometry(args)
    found = bounds.find_min_k(geometry, args.k_max)
    for note in geometry.warnings:
        print(f"warning: {note}", file=sys.stderr)
    if args.format == "json":
        _print_json({
            "schema": SCHEMA,
            "command": "minorder",
            "inputs": _json_inputs({
                "n": geometry.n,
                "kd_n": geometry.kd_n,
                "neg_dn": geometry.neg_dn,
                "components": geometry.components,
                "k_max": args.k_max,
            }),
            "result": {"min_k": found},
            "warnings": list(geometry.warnings),
        })
    elif args.format == "csv":
        _print_csv(("n", "k_max", "min_k"),
                   [(geometry.n, args.k_max, found if found is not None else "")])
    else:
        print("none" if found is None else str(found))
    return 0


def _cmd_verify(args) -> int:
    reports = checks.run_suite(args.suite, fast=args.fast)
    failed = [r for r in reports if not r.passed]
    if args.format == "json":
        _print_json({
            "schema": SCHEMA,
            "command": "verify",
            "inputs": {"suite": args.suite, "fast": args.fast},
            "result": {
                "passed": not failed,
                "checks": [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "lhs": r.lhs,
                        "rhs": r.rhs,
                        "detail": r.detail,
                    }
                    for r in reports
                ],
            },
            "warnings": [],
        })
    elif args.format == "csv":
        _print_csv(
            ("name", "passed", "lhs", "rhs", "detail"),
            [(r.name, r.passed, r.lhs, r.rhs, r.detail) for r in reports],
        )
    else:
        for r in reports:
            tag = "PASS" if r.passed else "FAIL"
            line = f"[{tag}] {r.name}: {r.lhs} vs {r.rhs}"
            if r.detail:
                line += f" ({r.detail})"
            print(line)
        print(f"{len(reports) - len(failed)} passed, {len(failed)} failed "
              f"(suite: {args.suite}{', fast' if args.fast else ''})")
        if failed:
            print("first failures: " + "; ".join(r.name for r in failed[:3]))
    return 2 if failed else 0


# --------------------------------------------------------------------- wiring


def build_parser() -> _Parser:
    parser = _Parser(prog="wsegre", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("segre", _cmd_segre, "Segre class of a weighted direct sum")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--summand", action="append", required=True,
                   metavar="rank=R,weight=A,segre=1,s1,...",
                   help="repeatable; accepts segre=... or chern=...")

    p = add("volume", _cmd_volume, "exact volume of the logarithmic jet algebra")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kd-n", dest="kd_n", type=_fraction)
    p.add_argument("--geometry")

    p = add("bound", _cmd_bound, "exact volume lower bound with boundary term")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kd-n", dest="kd_n", type=_fraction)
    p.add_argument("--neg-dn", dest="neg_dn", type=_fraction)
    p.add_argument("--components", type=int)
    p.add_argument("--geometry")

    p = add("threshold", _cmd_threshold, "log k threshold for bigness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--neg-dn", dest="neg_dn", type=_fraction)

    add("table1", _cmd_table1, "threshold summary table for n = 4..8")

    p = add("ranks", _cmd_ranks, "rank of a graded jet piece")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("boundary", _cmd_boundary, "exact boundary section count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--neg-dn", dest="neg_dn", type=_fraction, required=True)
    p.add_argument("--components", type=int)

    p = add("minorder", _cmd_minorder, "smallest order with a positive bound")
    p.add_argument("--n", type=int)
    p.add_argument("--kd-n", dest="kd_n", type=_fraction)
    p.add_argument("--neg-dn", dest="neg_dn", type=_fraction)
    p.add_argument("--components", type=int)
    p.add_argument("--geometry")
    p.add_argument("--k-max", dest="k_max", type=int, default=50)

    p = add("verify", _cmd_verify, "run the self-check suites")
    p.add_argument("--suite", choices=("identities", "oracles", "inequalities", "all"),
                   default="all")
    p.add_argument("--fast", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
