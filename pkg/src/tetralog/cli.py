"""Command-line front end: constant evaluation, identity verification, and
hexadecimal digit extraction, with machine-readable reports.

Exit codes are exactly: 0 success / all checks pass, 1 check failure or
precision abort, 2 usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__, bbp, dirichlet, integrals, verify
from .errors import TetralogError, UnknownCheckError
from .polylog import polylog_complex
from .specfun import clausen_cos, clausen_sin, hurwitz_zeta, trigamma
from .verify import CheckRecord

SCHEMA_VERSION = "1"

EVAL_TARGETS = ("cl2", "cln", "trigamma", "hurwitz", "catalan", "l7", "i7", "iab", "li3")


@dataclass(frozen=True)
class Report:
    tool_version: str
    timestamp: str
    records: list[CheckRecord]
    summary: dict[str, int]


def build_report(records: list[CheckRecord]) -> Report:
    summary = {
        "total": len(records),
        "passed": sum(r.status == "pass" for r in records),
        "failed": sum(r.status == "fail" for r in records),
        "conjecture": sum(r.status == "supports-conjecture" for r in records),
        "errored": sum(r.status == "error" for r in records),
    }
    return Report(
        tool_version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        records=records,
        summary=summary,
    )


def report_to_json(report: Report) -> str:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": report.tool_version,
        "timestamp": report.timestamp,
        "records": [dataclasses.asdict(r) for r in report.records],
        "summary": report.summary,
    }
    return json.dumps(payload, indent=2, allow_nan=True)


def _sig12(x: float) -> str:
    if isinstance(x, float) and not math.isfinite(x):
        return f"{x!s:>18s}"
    return f"{x: .11e}"


def report_to_text(report: Report) -> str:
    lines = [
        f"{'id':14s} {'status':20s} {'lhs':>18s} {'rhs':>18s} "
        f"{'residual':>18s} {'tol':>9s} {'ms':>6s}"
    ]
    for r in report.records:
        lines.append(
            f"{r.id:14s} {r.status:20s} {_sig12(r.lhs)} {_sig12(r.rhs)} "
            f"{_sig12(r.residual)} {r.tol:9.0e} {r.elapsed_ms:6d}"
        )
    s = report.summary
    lines.append(
        f"total {s['total']}  passed {s['passed']}  failed {s['failed']}  "
        f"conjecture {s['conjecture']}  errored {s['errored']}"
    )
    return "\n".join(lines)


def _print_eval(value, err_bound: float, method: str) -> None:
    if isinstance(value, complex):
        shown = f"{value.real:.11e} {value.imag:+.11e}j"
    else:
        shown = f"{value:.11e}"
    print(f"value      {shown}")
    print(f"err_bound  {err_bound:.3e}")
    print(f"method     {method}")


def cmd_eval(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    t = args.target
    tol = args.tol

    def need(name: str):
        v = getattr(args, name, None)
        if v is None:
            parser.error(f"eval {t} requires --{name.replace('_', '-')}")
        return v

    try:
        if t == "cl2":
            from .specfun import cl2

            r = cl2(need("theta"), tol=tol or 1e-13)
        elif t == "cln":
            order = int(need("order"))
            theta = need("theta")
            fn = clausen_sin if order % 2 == 0 else clausen_cos
            r = fn(order, theta, tol=tol or 1e-12)
        elif t == "trigamma":
            r = trigamma(need("x"))
        elif t == "hurwitz":
            r = hurwitz_zeta(need("s"), need("a"), tol=tol or 1e-13)
        elif t == "catalan":
            v = verify.catalan_value(args.method)
            _print_eval(v, 1e-12, args.method)
            return 0
        elif t == "l7":
            route = {
                "series": dirichlet.l7_series,
                "trigamma": dirichlet.l7_trigamma,
                "hurwitz": dirichlet.l7_hurwitz,
            }[args.route]
            r = route()
        elif t == "i7":
            r = integrals.integral_I7(tol or 1e-10)
        elif t == "iab":
            a, b = need("a"), need("b")
            r = integrals.integral_I_ab(a, b, tol or 1e-10)
        elif t == "li3":
            r = polylog_complex(3, complex(args.re, args.im), tol=tol or 1e-12)
        else:  # pragma: no cover - argparse choices guard this
            parser.error(f"unknown eval target {t!r}")
    except TetralogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _print_eval(r.value, r.err_bound, r.method)
    return 0


def cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        if args.check is not None:
            records = [verify.run_check(args.check, tol_override=args.tol)]
        else:
            records = verify.run_all(tag=args.tag, tol_scale=args.tol_scale)
    except UnknownCheckError as exc:
        parser.error(f"unknown check id {exc.args[0]!r}")
    except TetralogError as exc:
        parser.error(str(exc))
    report = build_report(records)
    if args.format == "json":
        print(report_to_json(report))
    else:
        print(report_to_text(report))
    return 0 if verify.aggregate_pass(records) else 1


def cmd_digits(args: argparse.Namespace) -> int:
    try:
        formula = bbp.REGISTRY[args.formula]
    except KeyError:
        print(f"error: unknown formula {args.formula!r}", file=sys.stderr)
        return 1
    try:
        print(bbp.extract_hex_digits(formula, args.position, args.count))
    except TetralogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetralog",
        description="Evaluate and numerically certify a family of Clausen, "
        "Catalan, Dirichlet-L and BBP identities.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one constant or function")
    p_eval.add_argument("target", choices=EVAL_TARGETS)
    p_eval.add_argument("--theta", type=float)
    p_eval.add_argument("--order", type=int)
    p_eval.add_argument("--x", type=float)
    p_eval.add_argument("--s", type=float)
    p_eval.add_argument("--a", type=float)
    p_eval.add_argument("--b", type=float)
    p_eval.add_argument("--re", type=float, default=0.5)
    p_eval.add_argument("--im", type=float, default=0.5)
    p_eval.add_argument("--method", choices=verify.CATALAN_METHODS, default="series")
    p_eval.add_argument(
        "--route", choices=("series", "trigamma", "hurwitz"), default="trigamma"
    )
    p_eval.add_argument("--tol", type=float)
    p_eval.add_argument("--max-terms", type=int, dest="max_terms")

    p_verify = sub.add_parser("verify", help="run the identity check ledger")
    p_verify.add_argument("--all", action="store_true", help="run every check")
    p_verify.add_argument("--tag", choices=verify.TAGS)
    p_verify.add_argument("--check", metavar="ID", help="run a single check by id")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--tol", type=float, help="tolerance override for --check")
    p_verify.add_argument(
        "--tol-scale", type=float, dest="tol_scale", help="scale every check tolerance"
    )

    p_digits = sub.add_parser("digits", help="extract fractional hex digits")
    p_digits.add_argument("--formula", required=True)
    p_digits.add_argument("--position", type=int, required=True)
    p_digits.add_argument("--count", type=int, required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return cmd_eval(args, parser)
    if args.command == "verify":
        return cmd_verify(args, parser)
    if args.command == "digits":
        return cmd_digits(args)
    parser.error("no command given")  # pragma: no cover
    return 2  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
