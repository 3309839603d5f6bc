"""Command line front end.

Exit status: 0 success, 1 verification failure, 2 invalid configuration,
3 budget exceeded. Tables go to stdout, diagnostics to stderr, and JSON
artifacts to ``--out``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from .certfile import build_instance, dumps, emit_certificate, verify_certificate
from .criterion import InternalInconsistency, reach_set
from .graphs import GraphError, RadiusExceeded, graph_from_spec, validate_section
from .lab import DEFAULT_BUDGET, BudgetExceeded, truncated_exponential_row
from .operators import OperatorError, verify_hopping
from .scalars import ScalarError, format_scalar, parse_scalar

EXIT_OK, EXIT_VERIFY, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3


class ConfigError(Exception):
    pass


def _load_json_arg(text, what):
    """Inline JSON, a path to a JSON file, or a bare name."""
    if text.lstrip().startswith(("{", "[", '"')):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{what}: bad inline JSON: {exc}") from None
    if os.path.exists(text):
        try:
            with open(text, encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"{what}: cannot read {text}: {exc}") from None
    return text


def _int_range(text):
    """``"1..8"``, ``"3"`` or ``"1,2,5"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"range {text!r} must contain positive integers")
    return values


def _instance(args):
    graph = _load_json_arg(args.graph, "--graph")
    weights = _load_json_arg(args.weights, "--weights")
    if args.command in ("certify",) and parse_scalar(args.beta, args.field) == 0:
        raise ConfigError("beta must be nonzero")
    return build_instance(graph, weights, args.alpha, args.beta, args.field)


def _write_out(args, doc):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(doc))


def cmd_certify(args):
    g, pair = _instance(args)
    doc = emit_certificate(g, pair, args.m)
    print(f"{'m':>4} {'l':>4} {'k':>4}  value")
    for row in doc["rows"]:
        print(f"{row['m']:>4} {row['l']:>4} {row['k']:>4}  {row['value']}")
    print(f"verified against dense section N={doc['oracle_section']}")
    _write_out(args, doc)
    return EXIT_OK


def cmd_verify(args):
    try:
        with open(args.certificate, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read certificate: {exc}") from None
    except json.JSONDecodeError as exc:
        print(f"certificate is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    problems = verify_certificate(doc)
    for p in problems:
        print(f"mismatch: {p}", file=sys.stderr)
    if problems:
        return EXIT_VERIFY
    print(f"ok: {len(doc['rows'])} rows verified")
    return EXIT_OK


def cmd_scan(args):
    _, pair = _instance(args)
    table = []
    print(f"{'k_max':>6} {'|reach|':>8} {'max l':>6}")
    for k_max in args.k_max:
        reached = reach_set(pair, args.n, k_max)
        table.append({"k_max": k_max, "size": len(reached), "max": max(reached),
                      "reach": sorted(reached)})
        print(f"{k_max:>6} {len(reached):>8} {max(reached):>6}")
    _write_out(args, {"n": args.n, "table": table})
    return EXIT_OK


def cmd_check_hopping(args):
    _, pair = _instance(args)
    report = verify_hopping(pair, args.n, args.N)
    for v, col in report:
        print(f"row {v}: column {col} outside U_{args.n}(v_{v})")
    print(f"{len(report)} violations in the first {args.N} rows")
    _write_out(args, {"n": args.n, "N": args.N, "violations": [list(p) for p in report]})
    return EXIT_OK


def cmd_exp(args):
    _, pair = _instance(args)
    try:
        t = parse_scalar(args.t)
    except ScalarError as exc:
        raise ConfigError(f"--t: {exc}") from None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = truncated_exponential_row(pair, args.N, t, args.terms, args.budget)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    for j, v in enumerate(report.row1, start=1):
        print(f"{j:>4}  {format_scalar(v)}")
    print(f"nonzero entries: {report.nonzero_count} of {report.N}")
    _write_out(args, report.to_json())
    return EXIT_OK


def cmd_validate(args):
    g = graph_from_spec(_load_json_arg(args.graph, "--graph"))
    report = validate_section(g, args.N)
    for v in report:
        print(str(v))
    print(f"{len(report)} violations in the first {args.N} vertices")
    _write_out(args, {"N": args.N, "violations": [
        {"kind": v.kind, "v": v.v, "w": v.w} for v in report]})
    return EXIT_OK if not report else EXIT_VERIFY


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="omegalap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def operator_args(p):
        p.add_argument("--graph", default="ray", help="family name, JSON file, or inline JSON")
        p.add_argument("--weights", default="uniform", help="uniform, normalized, or a table file")
        p.add_argument("--field", choices=["rational", "gaussian"], default="rational")
        p.add_argument("--alpha", default="0")
        p.add_argument("--beta", default="1")
        p.add_argument("--out", help="write the JSON artifact here")

    p = sub.add_parser("certify", help="emit a non-generation certificate")
    operator_args(p)
    p.add_argument("--m", type=_int_range, default=_int_range("1..8"))
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="growth of the reach set")
    operator_args(p)
    p.add_argument("--n", type=_positive, default=1)
    p.add_argument("--k-max", type=_int_range, default=_int_range("1,2,4,8,16"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("check-hopping", help="finite hopping range report")
    operator_args(p)
    p.add_argument("--n", type=_nonnegative, default=1)
    p.add_argument("--N", type=_positive, default=200)
    p.set_defaults(func=cmd_check_hopping)

    p = sub.add_parser("exp", help="truncated exponential of a section")
    operator_args(p)
    p.add_argument("--N", type=_positive, default=8)
    p.add_argument("--t", default="1")
    p.add_argument("--terms", type=_nonnegative, default=8)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("validate", help="check the graph axioms on a section")
    p.add_argument("--graph", default="ray")
    p.add_argument("--N", type=_positive, default=100)
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ConfigError, GraphError, OperatorError, ScalarError, RadiusExceeded, ValueError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
