"""Command-line surface: compute any family, emit tables, and run the
verification suites.

Grammar:
  qgen <family> [--n --m --h --k --x --q --w --t ...] [--mode ...] [--p --N --M]
  qgen table --family F --range n=0..8 [--range2 h=0..2] --format json|csv --out PATH
  qgen verify <suite> [--padic-level N] [--report-json PATH]

Exit codes: 0 success, 1 domain error (vanishing denominator, divergence,
budget), 2 usage or parse error.  All rationals serialize as exact strings
("num/den"), never as floating point; symbolic values serialize as
{"num": [...], "den": [...]} with coefficients lowest degree first.
Configuration precedence: flags > JSON file named by QGEN_CONFIG > defaults."""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import classical, verify as verify_mod
from .padic import (
    BudgetExceeded,
    PadicParams,
    QBracketMonomial,
    SeriesParams,
    fermionic_sum,
    real_series,
)
from .qcore import (
    DomainError,
    Poly,
    QRat,
    gauss_binom,
    parse_rat,
    q_int,
    rat_str,
)
from .qeuler import QEulerSpec, gf_eval, qeuler_hk, qeuler_hk_series, qeuler_twisted
from .qgenocchi import QGenocchiSpec, qgenocchi, qgenocchi_hk, qgenocchi_hk_series, qgenocchi_twisted


class UsageError(Exception):
    """Malformed query: wrong flags for the family or mode."""


DEFAULTS = {
    "p": 3,
    "N": 2,
    "M": 400,
    "term_budget": 100000,
    "cesaro_tol": Fraction(1, 1000),
    "table_budget": 10000,
}

FAMILIES = [
    "qnum", "qbinom", "euler", "genocchi", "bernoulli", "frobenius",
    "qeuler", "qgenocchi", "twisted-euler", "twisted-genocchi", "gf",
]

INT_PARAMS = ("n", "m", "h", "k", "p", "N", "M")
RAT_PARAMS = ("q", "w", "t", "u", "x")


@dataclass
class Config:
    p: int = 3
    N: int = 2
    M: int = 400
    term_budget: int = 100000
    cesaro_tol: Fraction = Fraction(1, 1000)
    table_budget: int = 10000


def load_config() -> Config:
    cfg = Config()
    path = os.environ.get("QGEN_CONFIG")
    if path:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from exc
        for key in ("p", "N", "M", "term_budget", "table_budget"):
            if key in data:
                cfg.__dict__[key] = int(data[key])
        if "cesaro_tol" in data:
            cfg.cesaro_tol = parse_rat(str(data["cesaro_tol"]))
    return cfg


def _add_family_flags(sub):
    for name in ("n", "m", "h", "k"):
        sub.add_argument(f"--{name}", type=int, default=None)
    for name in ("q", "w", "t", "u", "x"):
        sub.add_argument(f"--{name}", type=str, default=None)
    sub.add_argument("--kind", type=str, default=None,
                     choices=["fqk", "hqk", "hqkw"], help="generating function kind")
    sub.add_argument("--mode", type=str, default="exact",
                     choices=["exact", "symbolic", "padic", "series"])
    sub.add_argument("--p", type=int, default=None)
    sub.add_argument("--N", type=int, default=None)
    sub.add_argument("--M", type=int, default=None)
    sub.add_argument("--series-mode", type=str, default=None,
                     choices=["direct", "cesaro1"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgen",
        description="Exact computation of Gaussian binomials and the Euler/"
                    "Genocchi families, classical, q-extended, and twisted.")
    subs = parser.add_subparsers(dest="command", required=True)
    for fam in FAMILIES:
        sub = subs.add_parser(fam, help=f"compute the {fam} family")
        _add_family_flags(sub)

    table = subs.add_parser("table", help="emit a table over integer ranges")
    table.add_argument("--family", required=True, choices=FAMILIES)
    table.add_argument("--range", required=True, help="e.g. n=0..8")
    table.add_argument("--range2", default=None, help="optional second range")
    table.add_argument("--format", default="json", choices=["json", "csv"])
    table.add_argument("--out", required=True)
    _add_family_flags(table)

    ver = subs.add_parser("verify", help="run verification suites")
    ver.add_argument("suite", choices=verify_mod.SUITE_ORDER + ["all"])
    ver.add_argument("--padic-level", type=int, default=None)
    ver.add_argument("--M", type=int, default=None)
    ver.add_argument("--report-json", default=None)
    return parser


def _params_from_args(args) -> dict:
    params = {}
    for name in INT_PARAMS:
        v = getattr(args, name, None)
        if v is not None:
            params[name] = v
    for name in RAT_PARAMS:
        v = getattr(args, name, None)
        if v is not None:
            params[name] = parse_rat(v)
    if getattr(args, "kind", None):
        params["kind"] = args.kind
    return params


def _require(params: dict, *names):
    missing = [x for x in names if x not in params]
    if missing:
        raise UsageError(f"missing required parameter(s): {', '.join('--' + m for m in missing)}")


def _int_param(params: dict, name: str, minimum: int = 0) -> int:
    v = params[name]
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise UsageError(f"--{name} must be an integer")
        v = v.numerator
    if v < minimum:
        raise UsageError(f"--{name} must be >= {minimum}")
    return int(v)


def _series_params(params: dict, cfg: Config, default_mode: str, series_mode) -> SeriesParams:
    M = params.get("M", cfg.M)
    return SeriesParams(M, series_mode or default_mode)


def serialize_value(v):
    if isinstance(v, Poly):
        v = QRat(v)
    if isinstance(v, QRat):
        return v.to_obj()
    return rat_str(v)


def dispatch(family: str, params: dict, mode: str, cfg: Config, series_mode=None):
    """Compute one family value; returns (value, meta)."""
    meta: dict = {}
    qv = params.get("q")
    if mode == "symbolic":
        qv = None
    elif family.startswith("q") or family.startswith("twisted") or family == "gf":
        pass  # q handled per family below

    if family == "qnum":
        _require(params, "n")
        if mode == "exact":
            _require(params, "q")
            return q_int(_int_param(params, "n"), qv), meta
        if mode == "symbolic":
            return q_int(_int_param(params, "n")), meta
        raise UsageError(f"qnum does not support mode {mode!r}")

    if family == "qbinom":
        _require(params, "n", "k")
        n, k = _int_param(params, "n"), _int_param(params, "k")
        if mode == "exact":
            _require(params, "q")
            return gauss_binom(n, k, qv), meta
        if mode == "symbolic":
            return gauss_binom(n, k), meta
        raise UsageError(f"qbinom does not support mode {mode!r}")

    if family in ("euler", "genocchi", "bernoulli", "frobenius"):
        if mode != "exact":
            raise UsageError(f"{family} is classical; only mode 'exact' applies")
        _require(params, "n")
        n = _int_param(params, "n")
        order = _int_param(params, "k") if "k" in params else 1
        if family == "bernoulli":
            return classical.bernoulli(n), meta
        if family == "euler":
            if "x" in params:
                return classical.higher_euler_poly(n, order)(params["x"]), meta
            return classical.higher_euler_number(n, order), meta
        if family == "genocchi":
            if "x" in params:
                if order != 1:
                    raise UsageError("higher-order Genocchi polynomials are not defined here")
                return classical.genocchi_poly(n)(params["x"]), meta
            return classical.higher_genocchi(n, order), meta
        _require(params, "u")
        if "x" in params:
            return classical.frobenius_euler_poly(n, params["u"])(params["x"]), meta
        return classical.frobenius_euler(n, params["u"]), meta

    if family == "qeuler":
        _require(params, "m", "h")
        spec = QEulerSpec(
            m=_int_param(params, "m"),
            h=params.get("h", 0),
            k=_int_param(params, "k", 1) if "k" in params else 1,
            x=_int_param(params, "x") if "x" in params else 0,
            w=params.get("w", Fraction(1)),
        )
        if mode == "symbolic":
            return qeuler_hk(spec), meta
        if mode == "exact":
            _require(params, "q")
            return qeuler_hk(spec, qv), meta
        if mode == "padic":
            _require(params, "q")
            pp = PadicParams(params.get("p", cfg.p), params.get("N", cfg.N))
            f = QBracketMonomial(m=spec.m, k=spec.k, h=spec.h, w=spec.w, x=spec.x)
            meta = {"p": pp.p, "N": pp.N}
            return fermionic_sum(f, qv, pp, cfg.term_budget), meta
        _require(params, "q")
        sp = _series_params(params, cfg, "cesaro1" if abs(spec.w) == 1 else "direct", series_mode)
        value, bound = qeuler_hk_series(spec, qv, sp)
        meta = {"truncation": sp.M, "series_mode": sp.mode,
                ("tail_bound" if sp.mode == "direct" else "smoothing_gap"): rat_str(bound)}
        return value, meta

    if family == "qgenocchi":
        _require(params, "n", "h")
        spec = QGenocchiSpec(
            n=_int_param(params, "n"),
            h=params.get("h", 0),
            k=_int_param(params, "k", 1) if "k" in params else 1,
            w=params.get("w", Fraction(1)),
        )
        scale = math.factorial(spec.k) * math.comb(spec.n + spec.k, spec.k)
        if mode == "symbolic":
            return qgenocchi_hk(spec), meta
        if mode == "exact":
            _require(params, "q")
            return qgenocchi_hk(spec, qv), meta
        if mode == "padic":
            _require(params, "q")
            pp = PadicParams(params.get("p", cfg.p), params.get("N", cfg.N))
            f = QBracketMonomial(m=spec.n, k=spec.k, h=spec.h, w=spec.w, x=0)
            meta = {"p": pp.p, "N": pp.N, "scale": str(scale)}
            return scale * fermionic_sum(f, qv, pp, cfg.term_budget), meta
        _require(params, "q")
        sp = _series_params(params, cfg, "cesaro1" if abs(spec.w) == 1 else "direct", series_mode)
        value, bound = qgenocchi_hk_series(spec, qv, sp)
        meta = {"truncation": sp.M, "series_mode": sp.mode,
                ("tail_bound" if sp.mode == "direct" else "smoothing_gap"): rat_str(bound)}
        return value, meta

    if family == "twisted-euler":
        _require(params, "n", "w")
        n = _int_param(params, "n")
        w = params["w"]
        if mode == "symbolic":
            return qeuler_twisted(n, w), meta
        if mode == "exact":
            if "q" not in params:
                return classical.twisted_euler_classical(n, w), meta
            return qeuler_twisted(n, w, qv), meta
        if mode == "padic":
            _require(params, "q")
            pp = PadicParams(params.get("p", cfg.p), params.get("N", cfg.N))
            f = QBracketMonomial(m=n, k=1, h=1, w=w, x=0)
            meta = {"p": pp.p, "N": pp.N}
            return fermionic_sum(f, qv, pp, cfg.term_budget), meta
        _require(params, "q")
        sp = _series_params(params, cfg, "direct", series_mode)
        f = QBracketMonomial(m=n, k=1, h=1, w=w, x=0)
        value, bound = real_series(f, qv, sp, cfg.term_budget)
        meta = {"truncation": sp.M, "series_mode": sp.mode,
                ("tail_bound" if sp.mode == "direct" else "smoothing_gap"): rat_str(bound)}
        return value, meta

    if family == "twisted-genocchi":
        _require(params, "n", "w")
        n = _int_param(params, "n")
        w = params["w"]
        if mode == "symbolic":
            return qgenocchi_twisted(n, w=w), meta
        if mode == "exact":
            if "q" not in params:
                return classical.twisted_genocchi_classical(n, w), meta
            return qgenocchi_twisted(n, qv, w), meta
        if mode == "padic":
            _require(params, "q")
            if n == 0:
                return Fraction(0), meta
            pp = PadicParams(params.get("p", cfg.p), params.get("N", cfg.N))
            f = QBracketMonomial(m=n - 1, k=1, h=1, w=w, x=0)
            meta = {"p": pp.p, "N": pp.N, "scale": str(n)}
            return n * fermionic_sum(f, qv, pp, cfg.term_budget), meta
        _require(params, "q")
        if n == 0:
            return Fraction(0), meta
        sp = _series_params(params, cfg, "direct", series_mode)
        f = QBracketMonomial(m=n - 1, k=1, h=1, w=w, x=0)
        value, bound = real_series(f, qv, sp, cfg.term_budget)
        meta = {"truncation": sp.M, "series_mode": sp.mode, "scale": str(n),
                ("tail_bound" if sp.mode == "direct" else "smoothing_gap"): rat_str(n * bound)}
        return n * value, meta

    if family == "gf":
        _require(params, "kind", "k", "q", "t")
        sp = _series_params(params, cfg, "cesaro1", series_mode)
        x = _int_param(params, "x") if "x" in params else 0
        w = params.get("w", Fraction(1))
        lhs, rhs = gf_eval(params["kind"], _int_param(params, "k", 1), x, w,
                           qv, params["t"], sp)
        meta = {"rhs": rat_str(rhs), "abs_diff": rat_str(abs(lhs - rhs)),
                "truncation": sp.M}
        return lhs, meta

    raise UsageError(f"unknown family {family!r}")


def _echo_params(params: dict) -> dict:
    out = {}
    for key in sorted(params):
        v = params[key]
        out[key] = rat_str(v) if isinstance(v, Fraction) else v
    return out


def run_query(args, cfg: Config) -> int:
    params = _params_from_args(args)
    value, meta = dispatch(args.command, params, args.mode, cfg,
                           getattr(args, "series_mode", None))
    doc = {
        "query": {"family": args.command, "params": _echo_params(params)},
        "mode": args.mode,
        "value": serialize_value(value),
        "meta": meta,
    }
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")
    return 0


def _parse_range(text: str):
    try:
        name, span = text.split("=", 1)
        lo, hi = span.split("..", 1)
        return name.strip(), int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected name=lo..hi") from exc


def run_table(args, cfg: Config) -> int:
    params = _params_from_args(args)
    r1 = _parse_range(args.range)
    r2 = _parse_range(args.range2) if args.range2 else None
    if r1[0] not in INT_PARAMS or (r2 and r2[0] not in INT_PARAMS):
        raise UsageError("ranges apply to integer parameters only")
    span1 = range(r1[1], r1[2] + 1)
    span2 = range(r2[1], r2[2] + 1) if r2 else [None]
    cells = len(span1) * len(span2)
    if cells > cfg.table_budget:
        raise BudgetExceeded(f"{cells} cells exceed the table budget of {cfg.table_budget}")

    header = [r1[0]] + ([r2[0]] if r2 else []) + ["value"]
    rows = []
    for v1 in span1:
        for v2 in span2:
            cell = dict(params)
            cell[r1[0]] = v1
            if r2:
                cell[r2[0]] = v2
            value, _ = dispatch(args.family, cell, args.mode, cfg,
                                getattr(args, "series_mode", None))
            key = [v1] + ([v2] if r2 else [])
            rows.append((key, serialize_value(value)))

    if args.format == "csv":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for key, value in rows:
                cell = value if isinstance(value, str) else json.dumps(value, separators=(",", ":"))
                writer.writerow([*key, cell])
    else:
        doc = []
        for key, value in rows:
            row = {name: v for name, v in zip(header, key)}
            row["value"] = value
            doc.append(row)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(doc, separators=(",", ":")) + "\n")
    return 0


def run_verify(args, cfg: Config) -> int:
    vcfg = verify_mod.VerifyConfig(
        padic_level=args.padic_level if args.padic_level is not None else cfg.N,
        M=args.M if args.M is not None else cfg.M,
        cesaro_tol=cfg.cesaro_tol,
        term_budget=cfg.term_budget,
    )
    report = verify_mod.run_suites([args.suite], vcfg)
    for suite in report["suites"]:
        for check in suite["checks"]:
            status = "PASS" if check["ok"] else "FAIL"
            detail = f" ({check['detail']})" if check["detail"] else ""
            sys.stdout.write(
                f"[{status}] {suite['suite']}/{check['name']}: "
                f"{check['points']} points{detail}\n")
    sys.stdout.write(("all suites passed" if report["ok"] else "FAILURES detected") + "\n")
    if args.report_json:
        with open(args.report_json, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(report, separators=(",", ":")) + "\n")
    return 0 if report["ok"] else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        cfg = load_config()
        if args.command == "table":
            return run_table(args, cfg)
        if args.command == "verify":
            return run_verify(args, cfg)
        return run_query(args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except (DomainError, BudgetExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
