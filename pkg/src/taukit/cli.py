"""Command-line surface: expand coefficient tables, evaluate series, run checks.

Exit codes: 0 success / check passed, 1 check failed, 2 usage error
(including malformed inputs and poles, which are reported with the
offending integer point).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .partitions import enumerate_up_to
from .poly import format_rational, parse_rational
from .rspec import PoleError, RSpec, content_product, rspec_from_json
from .schur import GenericTimes
from .tau import (
    askey_wilson,
    clebsch_gordan_q,
    pfq_one_var_coeffs,
    prop4_pair,
    qphi_multivar,
    qphi_one_var_coeffs,
)
from .verify import (
    CheckReport,
    check_hirota,
    check_kp_bilinear,
    check_ode,
    check_qdiff,
    check_remark1,
    check_toda,
    det_oracle_tau,
)

USAGE_ERROR, CHECK_FAILED, OK = 2, 1, 0


def _rat_list(text: str) -> list[Fraction]:
    if not text:
        return []
    return [parse_rational(part) for part in text.split(",")]


def _load_rspec(arg: str) -> RSpec:
    if arg.startswith("@"):
        with open(arg[1:], "r", encoding="utf-8") as fh:
            arg = fh.read()
    return rspec_from_json(arg)


def emit(payload, fmt: str = "json") -> str:
    """Bit-stable serialization of a mapping or (headers, rows) table."""
    if fmt == "json":
        if isinstance(payload, tuple):
            headers, rows = payload
            payload = {str(r[0]): str(r[1]) for r in rows}
        return json.dumps(payload, separators=(",", ":"))
    if fmt == "csv":
        if isinstance(payload, dict):
            headers, rows = ("key", "value"), list(payload.items())
        else:
            headers, rows = payload
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    raise ValueError(f"unknown format {fmt!r}")


def _partition_key(lam) -> str:
    return json.dumps(list(lam), separators=(",", ":"))


def cmd_expand(args) -> int:
    r = _load_rspec(args.rspec)
    table = {}
    for lam in enumerate_up_to(args.degree):
        table[_partition_key(lam)] = format_rational(content_product(r, lam, args.charge))
    if args.format == "csv":
        print(emit((("partition", "coefficient"), list(table.items())), "csv"))
    else:
        print(emit(table, "json"))
    return OK


def cmd_eval(args) -> int:
    fmt = args.format
    if args.family == "pfq":
        a, b = _rat_list(args.a), _rat_list(args.b)
        coeffs = pfq_one_var_coeffs(a, b, args.charge, args.order)
        out = {"coefficients": [format_rational(c) for c in coeffs]}
        if args.x:
            x = parse_rational(args.x)
            out["value"] = format_rational(sum((c * x**k for k, c in enumerate(coeffs)), Fraction(0)))
    elif args.family == "qphi":
        a, b = _rat_list(args.a), _rat_list(args.b)
        q = parse_rational(args.q)
        xs = _rat_list(args.x) if args.x else []
        if len(xs) > 1:
            out = {"value": format_rational(qphi_multivar(a, b, args.charge, q, xs, args.order))}
        else:
            coeffs = qphi_one_var_coeffs(a, b, args.charge, q, args.order)
            out = {"coefficients": [format_rational(c) for c in coeffs]}
            if xs:
                out["value"] = format_rational(
                    sum((c * xs[0] ** k for k, c in enumerate(coeffs)), Fraction(0))
                )
    elif args.family == "aw":
        params = _rat_list(args.params)
        if len(params) != 4:
            raise ValueError("aw needs --params a,b,c,d")
        a, b, c, dd = params
        q, cv = parse_rational(args.q), parse_rational(args.cos)
        out = {
            "sum": format_rational(askey_wilson(args.n, a, b, c, dd, q, cv)),
            "p_n": format_rational(askey_wilson(args.n, a, b, c, dd, q, cv, with_prefactor=True)),
        }
    elif args.family == "cg":
        params = _rat_list(args.params)
        if len(params) != 5:
            raise ValueError("cg needs --params l1,l2,l,j,k")
        v = clebsch_gordan_q(*params, parse_rational(args.q))
        out = {"rational": format_rational(v.rational), "radicand": format_rational(v.radicand)}
    else:
        raise ValueError(f"unknown eval family {args.family!r}")
    if fmt == "csv" and "coefficients" in out:
        rows = list(enumerate(out["coefficients"]))
        print(emit((("order", "coefficient"), rows), "csv"))
    else:
        print(emit(out, fmt))
    return OK


def _print_report(report: CheckReport, fmt: str) -> int:
    if fmt == "csv":
        obj = report.to_obj()
        rows = [(k, json.dumps(v) if isinstance(v, (dict, type(None))) else v) for k, v in obj.items()]
        print(emit((("key", "value"), rows), "csv"))
    else:
        print(report.to_json())
    return OK if report.passed else CHECK_FAILED


def cmd_verify(args) -> int:
    name = args.check
    if name in ("hirota", "toda", "kp", "oracle"):
        r = _load_rspec(args.rspec)
        if name == "hirota":
            report = check_hirota(r, args.charge, args.degree)
        elif name == "toda":
            report = check_toda(r, args.charge, args.degree, args.gauge)
        elif name == "kp":
            report = check_kp_bilinear(r, args.charge, args.degree)
        else:
            _, report = det_oracle_tau(r, args.charge, args.degree, args.window)
    elif name == "ode":
        report = check_ode(_rat_list(args.a), _rat_list(args.b), args.order)
    elif name == "qdiff":
        report = check_qdiff(_rat_list(args.a), _rat_list(args.b), parse_rational(args.q), args.order)
    elif name == "remark1":
        params = {"N": args.nvars, "K": args.nvars}
        if args.q:
            params["q"] = parse_rational(args.q)
        report = check_remark1(args.mode, params, args.degree)
    elif name == "prop4":
        r = _load_rspec(args.rspec)
        bs = _rat_list(args.b)
        if len(bs) != 1:
            raise ValueError("prop4 needs --b with exactly one rational")
        left, right = prop4_pair(r, bs[0], args.charge, args.degree, GenericTimes())
        passed = left == right
        report = CheckReport(
            name="prop4",
            passed=passed,
            max_checked_grade=args.degree,
            first_failure=None if passed else ("series", "left", "right"),
            params={"b": format_rational(bs[0]), "M": args.charge, "d": args.degree},
        )
    else:
        raise ValueError(f"unknown check {name!r}")
    return _print_report(report, args.format)


def cmd_suite(args) -> int:
    from .acceptance import run_suite

    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("TAUKIT_SEED", "1729"))
    reports = run_suite(seed=seed, verbose=True)
    summary = {r.name: ("pass" if r.passed else "FAIL") for r in reports}
    print(emit(summary, args.format))
    return OK if all(r.passed for r in reports) else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taukit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("expand", help="partition -> coefficient table of an operator symbol")
    p.add_argument("--rspec", required=True, help="inline JSON or @file")
    p.add_argument("-M", "--charge", type=int, default=0)
    p.add_argument("-d", "--degree", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("eval", help="evaluate a special-function family")
    p.add_argument("family", choices=("pfq", "qphi", "aw", "cg"))
    p.add_argument("--a", default="", help="comma-separated rationals")
    p.add_argument("--b", default="", help="comma-separated rationals")
    p.add_argument("--q", default="", help="rational q")
    p.add_argument("--x", default="", help="comma-separated evaluation points")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--n", type=int, default=0, help="polynomial degree (aw)")
    p.add_argument("--params", default="", help="family parameters (aw: a,b,c,d; cg: l1,l2,l,j,k)")
    p.add_argument("--cos", default="1/2", help="rational cos(eta) (aw)")
    p.add_argument("-M", "--charge", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run one identity check")
    p.add_argument("check", choices=("hirota", "toda", "kp", "ode", "qdiff", "oracle", "remark1", "prop4"))
    p.add_argument("--rspec", default="", help="inline JSON or @file")
    p.add_argument("-M", "--charge", type=int, default=0)
    p.add_argument("-d", "--degree", type=int, default=5)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--gauge", choices=("generalized", "standard"), default="generalized")
    p.add_argument("--mode", choices=("q-spec", "miwa", "dual"), default="miwa")
    p.add_argument("--nvars", type=int, default=2, help="N (or K for dual mode)")
    p.add_argument("--a", default="")
    p.add_argument("--b", default="")
    p.add_argument("--q", default="")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", help="run the full acceptance battery")
    p.add_argument("--seed", type=int, default=None, help="overrides TAUKIT_SEED")
    common(p)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except PoleError as exc:
        print(f"error: pole at integer point {exc.point}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
