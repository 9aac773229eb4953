"""Command-line interface.

Subcommands: norm, extreme, enumerate, lp-property, audit. Spaces are given
either as shorthand (l1:2, linf:3, l2:2) or as JSON files; operators always
as JSON files. Exit codes: 0 success (or property holds), 1 property fails,
2 validation error, 3 operator norm not exactly 1, 4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .enumeration import (
    OPERATOR_BALL_CAP,
    SizeCapError,
    check_lp_property,
    enumerate_extreme_contractions,
)
from .extremality import NotContractionBoundaryError, audit_extreme_verdict, decide
from .jsonio import SchemaError
from .linalg import RationalFormatError, parse_rational
from .operators import UnsupportedPairError
from .spaces import (
    NormedSpace,
    UnsupportedSpaceError,
    l1_space,
    l2_space,
    linf_space,
    norm,
)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_VALIDATION = 2
EXIT_NORM = 3
EXIT_SIZE = 4

_SHORTHANDS = {"l1": l1_space, "l2": l2_space, "linf": linf_space}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_VALIDATION)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON: {exc}", EXIT_VALIDATION)


def parse_space(spec: str) -> NormedSpace:
    """Shorthand "l1:n" / "l2:n" / "linf:n", otherwise a JSON file path."""
    if ":" in spec:
        name, _, dims = spec.partition(":")
        if name in _SHORTHANDS:
            try:
                dim = int(dims)
            except ValueError:
                raise CliError(f"bad dimension in space shorthand {spec!r}", EXIT_VALIDATION)
            try:
                return _SHORTHANDS[name](dim)
            except UnsupportedSpaceError as exc:
                raise CliError(str(exc), EXIT_VALIDATION)
    try:
        return jsonio.space_from_json(_load_json(spec))
    except (SchemaError, ValueError) as exc:
        raise CliError(f"{spec}: {exc}", EXIT_VALIDATION)


def _load_operator(path: str):
    try:
        return jsonio.operator_from_json(_load_json(path))
    except (SchemaError, ValueError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_VALIDATION)


def _parse_vector_arg(text: str, dim: int):
    parts = text.split(",")
    if len(parts) != dim:
        raise CliError(f"vector needs {dim} comma-separated entries", EXIT_VALIDATION)
    try:
        return tuple(parse_rational(p) for p in parts)
    except RationalFormatError as exc:
        raise CliError(str(exc), EXIT_VALIDATION)


def cmd_norm(args) -> int:
    space = parse_space(args.space)
    x = _parse_vector_arg(args.vector, space.dim)
    value = norm(space, x)
    if args.json:
        sys.stdout.write(jsonio.dumps({
            "norm": str(value.value),
            "squared": value.squared,
        }))
    else:
        print(value)
    return EXIT_OK


def cmd_extreme(args) -> int:
    T = _load_operator(args.operator)
    try:
        verdict = decide(T, cross_check=args.cross_check)
    except NotContractionBoundaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NORM
    except UnsupportedPairError as exc:
        raise CliError(str(exc), EXIT_VALIDATION)
    if args.json:
        sys.stdout.write(jsonio.dumps(jsonio.verdict_to_json(verdict)))
        return EXIT_OK
    print(f"{verdict.decision} ({verdict.method})")
    att = verdict.evidence
    print(f"operator norm: {att.operator_norm}")
    print(f"attaining extreme points (one per +- pair): "
          f"{[[str(x) for x in v] for v in att.attaining_extremes]}")
    print(f"span rank: {att.span_rank}")
    if verdict.witness is not None:
        print("witness perturbation D (norm(T+D) <= 1 and norm(T-D) <= 1):")
        for row in verdict.witness:
            print("  [" + ", ".join(str(x) for x in row) + "]")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    domain = parse_space(args.pair[0])
    codomain = parse_space(args.pair[1])
    try:
        result = enumerate_extreme_contractions(domain, codomain, cap=args.cap)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (UnsupportedPairError, UnsupportedSpaceError, ValueError) as exc:
        raise CliError(str(exc), EXIT_VALIDATION)
    if args.json:
        doc = {
            "domain": jsonio.space_to_json(domain),
            "codomain": jsonio.space_to_json(codomain),
            "count": len(result),
            "method": result.method,
            "operators": [
                [[str(x) for x in row] for row in T.matrix]
                for T in result.operators[: args.limit]
            ],
        }
        sys.stdout.write(jsonio.dumps(doc))
        return EXIT_OK
    print(f"{len(result)} extreme contractions ({result.method})")
    shown = result.operators if args.limit is None else result.operators[: args.limit]
    for T in shown:
        print("  " + "; ".join("[" + ", ".join(str(x) for x in row) + "]" for row in T.matrix))
    if args.limit is not None and len(result) > args.limit:
        print(f"  ... {len(result) - args.limit} more (raise --limit to see them)")
    return EXIT_OK


def cmd_lp_property(args) -> int:
    domain = parse_space(args.pair[0])
    codomain = parse_space(args.pair[1])
    try:
        report = check_lp_property(
            domain,
            codomain,
            cap=args.cap,
            backward_only=args.backward_only,
            stop_at_first=args.backward_only,
        )
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (UnsupportedPairError, UnsupportedSpaceError, ValueError) as exc:
        raise CliError(str(exc), EXIT_VALIDATION)
    if args.json:
        doc = {
            "domain": jsonio.space_to_json(domain),
            "codomain": jsonio.space_to_json(codomain),
            "holds": report.holds,
            "forward_violations": [
                {
                    "operator": [[str(x) for x in row] for row in T.matrix],
                    "point": [str(x) for x in v],
                }
                for T, v in report.forward_violations
            ],
            "backward_violations": [
                {
                    "operator": [[str(x) for x in row] for row in T.matrix],
                    "witness": [[str(x) for x in row] for row in verdict.witness],
                }
                for T, verdict in report.backward_violations
            ],
            "notes": list(report.notes),
        }
        sys.stdout.write(jsonio.dumps(doc))
    else:
        print(f"pair ({domain.describe()}, {codomain.describe()}): "
              f"{'holds' if report.holds else 'fails'}")
        for note in report.notes:
            print(f"  {note}")
        for T, v in report.forward_violations:
            print(f"  forward violation: T={[[str(x) for x in r] for r in T.matrix]} "
                  f"maps {[str(x) for x in v]} off the extreme points")
        for T, verdict in report.backward_violations:
            print(f"  backward violation: T={[[str(x) for x in r] for r in T.matrix]} "
                  f"is vertex-preserving but not extreme")
    return EXIT_OK if report.holds else EXIT_FAILS


def cmd_audit(args) -> int:
    T = _load_operator(args.operator)
    try:
        verdict = decide(T)
    except NotContractionBoundaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NORM
    except UnsupportedPairError as exc:
        raise CliError(str(exc), EXIT_VALIDATION)
    if not verdict.is_extreme:
        raise CliError("audit applies to extreme operators; this one is not extreme",
                       EXIT_VALIDATION)
    audit = audit_extreme_verdict(T, verdict)
    if args.json:
        doc = {
            "ok": audit.ok,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in audit.checks
            ],
        }
        sys.stdout.write(jsonio.dumps(doc))
        return EXIT_OK
    for c in audit.checks:
        print(f"{c.name}: {c.status} ({c.detail})")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opball",
        description="exact decisions about extreme contractions on small normed spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="evaluate an exact norm")
    p.add_argument("--space", required=True, help="l1:n, l2:n, linf:n, or a space JSON file")
    p.add_argument("--vector", required=True, help="comma-separated rationals, e.g. 1/2,-1/2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("extreme", help="decide whether an operator is an extreme contraction")
    p.add_argument("operator", help="operator JSON file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cross-check", action="store_true",
                   help="run every applicable rule and require agreement")
    p.set_defaults(func=cmd_extreme)

    p = sub.add_parser("enumerate", help="enumerate all extreme contractions of a pair")
    p.add_argument("--pair", nargs=2, required=True, metavar=("DOMAIN", "CODOMAIN"))
    p.add_argument("--limit", type=int, default=None, help="cap the number of listed operators")
    p.add_argument("--cap", type=int, default=OPERATOR_BALL_CAP,
                   help="matrix-entry count cap for ball enumeration")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("lp-property",
                       help="check the vertex-preservation property of a pair")
    p.add_argument("--pair", nargs=2, required=True, metavar=("DOMAIN", "CODOMAIN"))
    p.add_argument("--cap", type=int, default=OPERATOR_BALL_CAP)
    p.add_argument("--backward-only", action="store_true",
                   help="skip forward enumeration; stop at the first backward violation")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lp_property)

    p = sub.add_parser("audit", help="audit the attainment structure of an extreme operator")
    p.add_argument("operator", help="operator JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
