"""Command-line front end: ``detmult {dim,length,support,multiplicity,integral}``.

Exit codes: 0 success, 1 cross-check mismatch, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .ext import cohomological_support
from .length import CrossCheckError, total_length
from .report import fraction_str, multiplicity_report
from .selberg import simplex_integral_exact, simplex_integral_mc
from .weights import InvalidWeight, ProblemSpec, Weight, schur_dim

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
        return
    for key, val in obj.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            out.write(f"{key}:\n")
            cols = list(val[0])
            out.write("  " + "\t".join(cols) + "\n")
            for row in val:
                out.write("  " + "\t".join(str(row[c]) for c in cols) + "\n")
        else:
            out.write(f"{key}: {val}\n")


def _spec(args) -> ProblemSpec:
    try:
        return ProblemSpec(args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _threads(args) -> int:
    if args.threads is not None:
        k = args.threads
    else:
        try:
            k = int(os.environ.get("DETMULT_THREADS", "1") or 1)
        except ValueError as exc:
            raise UsageError("DETMULT_THREADS must be an integer") from exc
    if k < 1:
        raise UsageError("thread count must be positive")
    return k


def cmd_dim(args, out) -> int:
    try:
        entries = [int(x) for x in args.lam.split(",") if x.strip()]
        lam = Weight(entries)
    except ValueError as exc:
        # InvalidWeight is a ValueError
        raise UsageError(str(exc) if isinstance(exc, InvalidWeight) else f"bad weight {args.lam!r}") from exc
    N = args.n if args.n is not None else len(lam)
    if N != len(lam):
        raise UsageError(f"weight has {len(lam)} entries but --n is {N}")
    _emit({"lambda": list(lam), "N": N, "dim": str(schur_dim(lam, N))}, args.format, out)
    return EXIT_OK


def cmd_length(args, out) -> int:
    spec = _spec(args)
    if args.power < 1:
        raise UsageError("power must be positive")
    k = _threads(args)
    reports = {}
    if args.method in ("enum", "both"):
        reports["enumeration"] = total_length(spec, args.power, "enumeration", workers=k)
    if args.method in ("symbolic", "both"):
        reports["symbolic"] = total_length(spec, args.power, "symbolic")
    obj = {"m": spec.m, "n": spec.n, "D": args.power, "j": spec.top_index}
    for name, rep in reports.items():
        obj[f"total_{name}"] = str(rep.total)
    first = next(iter(reports.values()))
    obj["per_layer"] = [{"d": d, "length": str(v)} for d, v in first.per_layer]
    match = len({r.total for r in reports.values()}) == 1
    if args.method == "both":
        obj["match"] = match
    obj["total"] = str(first.total)
    _emit(obj, args.format, out)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_support(args, out) -> int:
    spec = _spec(args)
    if args.power < 1:
        raise UsageError("power must be positive")
    rows = [e.to_json_obj() for e in cohomological_support(spec, args.power)]
    _emit({"m": spec.m, "n": spec.n, "d": args.power, "support": rows}, args.format, out)
    return EXIT_OK


def cmd_multiplicity(args, out) -> int:
    spec = _spec(args)
    rep = multiplicity_report(spec, args.method)
    obj = rep.to_json_obj()
    if args.format == "table":
        obj.pop("length_poly")
        if rep.length_poly is not None:
            obj["length_poly"] = str(rep.length_poly)
        obj = {k: v for k, v in obj.items() if v is not None}
    _emit(obj, args.format, out)
    return EXIT_OK if rep.agree else EXIT_MISMATCH


def cmd_integral(args, out) -> int:
    spec = _spec(args)
    k = _threads(args)
    try:
        res = simplex_integral_mc(spec, args.samples, args.seed, workers=k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    exact = simplex_integral_exact(spec)
    z = abs(res.estimate - float(exact)) / res.standard_error if res.standard_error else 0.0
    obj = {"m": spec.m, "n": spec.n, "exact": fraction_str(exact), "exact_float": repr(float(exact))}
    obj.update(res.to_json_obj())
    obj["z_score"] = f"{z:.4f}"
    _emit(obj, args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="detmult", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mn_required=True):
        p.add_argument("--format", choices=("table", "json"), default="table")
        if mn_required:
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("dim", help="dimension of a Schur module")
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated weight, e.g. 3,2,1")
    p.add_argument("--n", type=int, default=None, help="GL_N rank (defaults to the weight length)")
    common(p, mn_required=False)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("length", help="length of the top Ext module of S/I^D")
    common(p)
    p.add_argument("--power", type=int, required=True)
    p.add_argument("--method", choices=("enum", "symbolic", "both"), default="both")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("support", help="nonvanishing Ext indices of S/I^d")
    common(p)
    p.add_argument("--power", type=int, required=True)
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("multiplicity", help="generalized j-multiplicity for j = n^2-1")
    common(p)
    p.add_argument("--method", choices=("closed", "selberg", "polynomial", "all"), default="all")
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("integral", help="Monte Carlo estimate of the simplex integral")
    common(p, mn_required=False)
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_integral)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"detmult: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CrossCheckError as exc:
        print(f"detmult: cross-check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
