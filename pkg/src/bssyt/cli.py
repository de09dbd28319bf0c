"""Command-line verification harness.

One command per invocation, flags only, machine-readable output.  Exit
codes: 0 every checked identity holds, 1 a checked identity fails, 2
invalid input (including balanced-only claims on unbalanced shapes), 3 a
run refused up front by --limit.
"""

import argparse
import csv
import json
import sys
import time
from fractions import Fraction

from . import bijections, hecke, jaggedness
from .shapes import Partition, is_balanced
from .tableaux import count_bssyt, count_rpp, count_ssyt

CLAIMS = (
    "conjecture11",
    "theorem31",
    "theorem21",
    "theorem22",
    "doublesums",
    "fk14",
    "fk36",
    "fk37",
    "togglesym",
    "roundtrip",
)

_COUNTERS = {"ssyt": count_ssyt, "bssyt": count_bssyt, "rpp": count_rpp}


class LimitExceeded(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bssyt",
        description=(
            "Exact enumeration and identity checking for barely set-valued "
            "tableaux, reverse plane partitions, and 0-Hecke word polynomials."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="text",
            help="output format (default: text)",
        )
        p.add_argument(
            "--threads", type=int, default=1,
            help="worker count for the streaming accumulators and the word DP",
        )
        p.add_argument(
            "--limit", type=int, default=None,
            help="refuse runs whose size heuristic (k + rows) * cells exceeds this",
        )

    p_count = sub.add_parser("count", help="count one tableau family exactly")
    p_count.add_argument("kind", choices=sorted(_COUNTERS))
    p_count.add_argument("--shape", required=True, help='comma-separated parts, "" for empty')
    p_count.add_argument("--k", type=int, required=True)
    add_common(p_count)

    p_verify = sub.add_parser(
        "verify",
        help="check one identity and report lhs/rhs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "claims:\n"
            "  conjecture11  staircase count factor: bssyt = (k*a*b*(d-1)/(a+b)) * ssyt"
            "  (--a --b --d --k)\n"
            "  theorem31     balanced count factor: bssyt = (k*r*c/(r+c)) * ssyt"
            "  (--shape --k; balanced only)\n"
            "  theorem21     expected jaggedness equals 2rc/(r+c), summed pair by pair"
            "  (balanced only)\n"
            "  theorem22     same expectation aggregated by subshape, with a"
            " normalization check (balanced only)\n"
            "  doublesums    corner and outside-corner ensemble sums both equal the"
            " bssyt count (any shape)\n"
            "  togglesym     per-cell toggle-in/out sums agree across the pair"
            " ensemble (any shape)\n"
            "  roundtrip     both corner representations invert on every bssyt\n"
            "  fk14          longest-permutation word polynomial against both"
            " product-formula variants (--n)\n"
            "  fk36          word-polynomial ratio identity for a balanced dominant"
            " code (--shape, optional --k)\n"
            "  fk37          word-polynomial ratio at x=k against the two tableau"
            " counts (--shape --k)\n"
        ),
    )
    p_verify.add_argument("claim", choices=CLAIMS)
    p_verify.add_argument("--shape")
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--a", type=int)
    p_verify.add_argument("--b", type=int)
    p_verify.add_argument("--d", type=int)
    p_verify.add_argument("--n", type=int)
    add_common(p_verify)

    p_exp = sub.add_parser(
        "expected-jaggedness", help="exact expected jaggedness under the weak distribution"
    )
    p_exp.add_argument("--shape", required=True)
    p_exp.add_argument("--k", type=int, required=True)
    add_common(p_exp)

    return parser


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"claim {args.claim} requires --{name}")


def _check_limit(shape, k, limit):
    if limit is None:
        return
    cost = (k + shape.rows) * shape.ncells
    if cost > limit:
        raise LimitExceeded(
            f"size heuristic ({k} + {shape.rows}) * {shape.ncells} = {cost} "
            f"exceeds --limit {limit}"
        )


def _fraction_text(value):
    return f"{value.numerator}/{value.denominator}"


def _run_verify(args):
    """Build the single report document for the requested claim."""
    claim = args.claim
    threads = args.threads
    if claim == "conjecture11":
        _need(args, "a", "b", "d", "k")
        from .shapes import rect_staircase

        _check_limit(rect_staircase(args.a, args.b, args.d), args.k, args.limit)
        return jaggedness.verify_conjecture_rect(args.a, args.b, args.d, args.k).as_dict()
    if claim == "fk14":
        _need(args, "n")
        return hecke.verify_fk_longest(args.n, threads).as_dict()

    _need(args, "shape")
    shape = Partition.from_text(args.shape)
    if claim == "fk36":
        k_values = [args.k] if args.k is not None else [1, 2, 3]
        _check_limit(shape, max(k_values), args.limit)
        return hecke.verify_fk_ratio(shape, k_values, threads).as_dict()

    _need(args, "k")
    _check_limit(shape, args.k, args.limit)
    if claim == "theorem31":
        return jaggedness.verify_count_identity(shape, args.k).as_dict()
    if claim == "theorem21":
        return jaggedness.verify_balanced_expectation(shape, args.k, threads).as_dict()
    if claim == "theorem22":
        return jaggedness.verify_weak_expectation_by_subshape(shape, args.k, threads).as_dict()
    if claim == "doublesums":
        return jaggedness.verify_double_sums(shape, args.k, threads).as_dict()
    if claim == "fk37":
        return hecke.verify_fk_bssyt_relation(shape, args.k, threads).as_dict()
    if claim == "roundtrip":
        return bijections.verify_roundtrip(shape, args.k).as_dict()
    if claim == "togglesym":
        reports = jaggedness.check_toggle_symmetric(shape, args.k, threads)
        return {
            "claim": "toggle_symmetry",
            "params": {"shape": shape.to_text(), "k": args.k, "cells": len(reports)},
            "lhs": {f"{r.params['cell'].row},{r.params['cell'].col}": r.lhs for r in reports},
            "rhs": {f"{r.params['cell'].row},{r.params['cell'].col}": r.rhs for r in reports},
            "equal": all(r.equal for r in reports),
        }
    raise ValueError(f"unknown claim {claim}")


def _emit(doc, fmt, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(doc.keys())
        writer.writerow(
            json.dumps(v) if isinstance(v, (dict, list)) else v for v in doc.values()
        )
    else:
        for key, value in doc.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value)
            out.write(f"{key}: {value}\n")


def _elapsed_ms(start):
    return int((time.perf_counter() - start) * 1000)


def _dispatch(args, out):
    start = time.perf_counter()
    if args.command == "count":
        shape = Partition.from_text(args.shape)
        _check_limit(shape, args.k, args.limit)
        value = _COUNTERS[args.kind](shape, args.k)
        if args.format == "text":
            out.write(f"{value}\n")
        else:
            _emit(
                {
                    "command": "count",
                    "kind": args.kind,
                    "shape": shape.to_text(),
                    "k": args.k,
                    "count": value,
                },
                args.format,
                out,
            )
        return 0

    if args.command == "expected-jaggedness":
        shape = Partition.from_text(args.shape)
        _check_limit(shape, args.k, args.limit)
        value = jaggedness.expected_jaggedness_weak(shape, args.k, args.threads)
        balanced = bool(shape.parts) and is_balanced(shape)
        closed = (
            Fraction(2 * shape.rows * shape.cols, shape.rows + shape.cols)
            if balanced
            else None
        )
        if args.format == "text":
            if not shape.parts:
                note = " (empty shape)"
            elif balanced:
                note = f" (balanced; closed form 2rc/(r+c) = {_fraction_text(closed)})"
            else:
                note = " (unbalanced)"
            out.write(f"{_fraction_text(value)}{note}\n")
        else:
            _emit(
                {
                    "command": "expected_jaggedness",
                    "shape": shape.to_text(),
                    "k": args.k,
                    "value": _fraction_text(value),
                    "balanced": balanced,
                    "closed_form": _fraction_text(closed) if closed is not None else None,
                },
                args.format,
                out,
            )
        return 0

    doc = _run_verify(args)
    doc["elapsed_ms"] = _elapsed_ms(start)
    if args.format == "text":
        verdict = "PASS" if doc["equal"] else "FAIL"
        out.write(
            f"{verdict} {doc['claim']} lhs={json.dumps(doc['lhs'])} "
            f"rhs={json.dumps(doc['rhs'])} params={json.dumps(doc['params'])}\n"
        )
    else:
        _emit(doc, args.format, out)
    return 0 if doc["equal"] else 1


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return _dispatch(args, sys.stdout)
    except LimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
