"""Command-line front end: evaluate any function, run suites, emit tables.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error.
Complex values are written ``a+bi`` in plain/CSV output and ``{"re":..,"im":..}``
in JSON; exact rationals are written ``p/q``.  Both forms re-parse losslessly.
"""

from __future__ import annotations

import argparse
import csv
import io
import inspect
import json
import os
import sys
import time
from fractions import Fraction

from . import classical, numkernel, qfamily, verify
from .characters import build_group, conductor, enumerate_characters
from .errors import QZetaError
from .numkernel import QParams, SumConfig, SumStats

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' (or 'a-bi', bare reals, 'bi'); 'j' is accepted for 'i'."""
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    if cleaned.endswith("j") or "j" in cleaned:
        return complex(cleaned)
    return complex(float(cleaned))


def format_complex(z: complex) -> str:
    re = f"{z.real:.17g}"
    im = abs(z.imag)
    sign = "-" if z.imag < 0 else "+"
    return f"{re}{sign}{im:.17g}i"


def format_value(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, complex):
        return format_complex(v)
    return f"{float(v):.17g}"


def json_value(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def _parse_list(text: str) -> list[complex]:
    return [parse_complex(part) for part in text.split(",") if part.strip()]


def _character(ns):
    if ns.modulus is None:
        raise UsageError("--modulus is required for character-twisted functions")
    chars = enumerate_characters(ns.modulus)
    idx = ns.char_index if ns.char_index is not None else 0
    if not 0 <= idx < len(chars):
        raise UsageError(f"--char-index must lie in [0, {len(chars) - 1}] for modulus {ns.modulus}")
    return chars[idx]


class UsageError(Exception):
    pass


def _need(ns, *names):
    for name in names:
        if getattr(ns, name.replace("-", "_")) is None:
            raise UsageError(f"function '{ns.fn}' requires --{name}")


def _qp(ns) -> QParams:
    _need(ns, "q")
    return QParams(ns.q)


# registry: fn name -> wrapper(ns, cfg, stats) -> value
def _registry():
    def qbracket(ns, cfg, stats):
        _need(ns, "x", "q")
        return numkernel.qbracket(ns.x, _qp(ns))

    def qpow(ns, cfg, stats):
        _need(ns, "x", "q")
        return numkernel.qpow(ns.x, _qp(ns))

    def complex_gamma(ns, cfg, stats):
        _need(ns, "s")
        return numkernel.complex_gamma(ns.s)

    def bernoulli_number(ns, cfg, stats):
        _need(ns, "n")
        return classical.bernoulli_number(ns.n)

    def bernoulli_poly(ns, cfg, stats):
        _need(ns, "n", "x")
        x = ns.x
        if x.imag == 0 and float(x.real).is_integer():
            return classical.bernoulli_poly(ns.n, int(x.real))
        return classical.bernoulli_poly(ns.n, x if x.imag else x.real)

    def gen_bernoulli_number(ns, cfg, stats):
        _need(ns, "n")
        return classical.gen_bernoulli_number(_character(ns), ns.n)

    def gen_bernoulli_poly(ns, cfg, stats):
        _need(ns, "n", "x")
        return classical.gen_bernoulli_poly(_character(ns), ns.n, ns.x.real if ns.x.imag == 0 else ns.x)

    def barnes_bernoulli(ns, cfg, stats):
        _need(ns, "n", "x", "a")
        return classical.barnes_bernoulli(ns.n, ns.x.real if ns.x.imag == 0 else ns.x,
                                          [a.real for a in ns.a])

    def hurwitz_zeta(ns, cfg, stats):
        _need(ns, "s", "x")
        return classical.hurwitz_zeta(ns.s, ns.x.real if ns.x.imag == 0 else ns.x)

    def riemann_zeta(ns, cfg, stats):
        _need(ns, "s")
        return classical.riemann_zeta(ns.s)

    def dirichlet_l(ns, cfg, stats):
        _need(ns, "s")
        return classical.dirichlet_L(ns.s, _character(ns))

    def two_variable_l(ns, cfg, stats):
        _need(ns, "s", "x")
        return classical.two_variable_L(ns.s, ns.x.real if ns.x.imag == 0 else ns.x, _character(ns))

    def barnes_zeta(ns, cfg, stats):
        _need(ns, "s", "w", "a")
        return classical.barnes_zeta_series(ns.s, ns.w, [a.real for a in ns.a])

    def carlitz_beta_number(ns, cfg, stats):
        _need(ns, "n")
        return qfamily.carlitz_beta_number(ns.n, _qp(ns))

    def carlitz_beta_poly(ns, cfg, stats):
        _need(ns, "n", "x")
        return qfamily.carlitz_beta_poly(ns.n, ns.x, _qp(ns))

    def changhee_beta_number(ns, cfg, stats):
        _need(ns, "n", "w1")
        return qfamily.changhee_beta_number(ns.n, _qp(ns), ns.w1, cfg, stats=stats)

    def changhee_beta_poly(ns, cfg, stats):
        _need(ns, "n", "w", "w1")
        return qfamily.changhee_beta_poly(ns.n, ns.w, _qp(ns), ns.w1, cfg, stats=stats)

    def gen_changhee_beta_number(ns, cfg, stats):
        _need(ns, "n", "w1")
        return qfamily.gen_changhee_beta_number(ns.n, _character(ns), _qp(ns), ns.w1, cfg, stats=stats)

    def gen_changhee_beta_poly(ns, cfg, stats):
        _need(ns, "n", "x", "w1")
        return qfamily.gen_changhee_beta_poly(
            ns.n, ns.x, _character(ns), _qp(ns), ns.w1, ns.convention or "homogeneous", cfg, stats=stats
        )

    def multiple_changhee_beta(ns, cfg, stats):
        _need(ns, "n", "x", "weights")
        chi = _character(ns) if ns.modulus is not None else None
        return qfamily.multiple_changhee_beta(
            ns.n, ns.x, _qp(ns), ns.weights, chi=chi, conv=ns.convention or "homogeneous", cfg=cfg, stats=stats
        )

    def zeta_q(ns, cfg, stats):
        _need(ns, "s", "w", "w1")
        return qfamily.zeta_q(ns.s, ns.w, _qp(ns), ns.w1, cfg, stats=stats)

    def zeta_q_multiple(ns, cfg, stats):
        _need(ns, "s", "w", "weights")
        return qfamily.zeta_q_multiple(ns.s, ns.w, _qp(ns), ns.weights, cfg, stats=stats)

    def l_q(ns, cfg, stats):
        _need(ns, "s", "x", "w1")
        return qfamily.L_q(ns.s, ns.x, _character(ns), _qp(ns), ns.w1, ns.convention or "homogeneous", cfg, stats=stats)

    def l_q_multiple(ns, cfg, stats):
        _need(ns, "s", "x", "weights")
        return qfamily.L_q_multiple(
            ns.s, ns.x, _character(ns), _qp(ns), ns.weights, ns.convention or "homogeneous", cfg, stats=stats
        )

    def multiple_beta_binomial_form(ns, cfg, stats):
        _need(ns, "n", "w", "a")
        return qfamily.multiple_beta_binomial_form(ns.n, ns.w, _qp(ns), [a.real for a in ns.a])

    def multiple_beta_binomial_from_numbers(ns, cfg, stats):
        _need(ns, "n", "w", "a")
        return qfamily.multiple_beta_binomial_from_numbers(ns.n, ns.w, _qp(ns), [a.real for a in ns.a])

    return {
        name: fn
        for name, fn in locals().items()
        if not name.startswith("_") and callable(fn)
    }


REGISTRY = _registry()


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qzeta",
        description="Evaluate q-Bernoulli/q-zeta/Dirichlet q-L functions and verify their identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    common.add_argument(
        "--convention",
        choices=("homogeneous", "bare"),
        default=None,
        help="q-exponent convention for character-twisted evaluators "
        "(evaluators default to homogeneous; verify runs both when unset)",
    )
    common.add_argument("--tol", type=float, default=None, help="series tolerance override")
    common.add_argument("--max-terms", type=int, default=None)
    common.add_argument("--rng-seed", type=int, default=0)
    common.add_argument("--out", type=str, default=None, help="write output to a file")

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate one function at one point")
    p_eval.add_argument("--fn", required=True)
    for flag in ("--s", "--x", "--w", "--q", "--w1"):
        p_eval.add_argument(flag, type=parse_complex, default=None)
    p_eval.add_argument("--n", type=int, default=None)
    p_eval.add_argument("--weights", type=_parse_list, default=None, help="comma list, e.g. 1,2")
    p_eval.add_argument("--a", type=_parse_list, default=None, help="comma list of scales")
    p_eval.add_argument("--modulus", type=int, default=None)
    p_eval.add_argument("--char-index", type=int, default=None)

    p_verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    p_verify.add_argument("--suite", default="all", help=f"comma list or 'all'; known: {', '.join(verify.SUITES)}")
    p_verify.add_argument("--q-grid", type=str, default=None, help="override q grid, comma list")
    p_verify.add_argument("--f-grid", type=str, default=None, help="override modulus grid, comma list")
    p_verify.add_argument("--n-max", type=int, default=None, help="override maximum index n")
    p_verify.add_argument("--char-limit", type=int, default=None, help="modulus bound for the character suite")

    p_table = sub.add_parser("table", parents=[common], help="sweep one parameter of one function")
    p_table.add_argument("--fn", required=True)
    p_table.add_argument("--sweep", required=True, help="parameter to sweep: n, s, q, w, w1, x")
    p_table.add_argument("--start", type=float, required=True)
    p_table.add_argument("--stop", type=float, required=True)
    p_table.add_argument("--count", type=int, required=True)
    for flag in ("--s", "--x", "--w", "--q", "--w1"):
        p_table.add_argument(flag, type=parse_complex, default=None)
    p_table.add_argument("--n", type=int, default=None)
    p_table.add_argument("--weights", type=_parse_list, default=None)
    p_table.add_argument("--a", type=_parse_list, default=None)
    p_table.add_argument("--modulus", type=int, default=None)
    p_table.add_argument("--char-index", type=int, default=None)

    p_chars = sub.add_parser("chars", parents=[common], help="list Dirichlet characters mod f")
    p_chars.add_argument("--modulus", type=int, required=True)

    return parser


def _sum_config(ns) -> SumConfig | None:
    """Explicit truncation policy from the flags/environment, or None for
    the per-evaluator defaults."""
    tol = ns.tol
    if tol is None:
        env = os.environ.get("QZETA_TOL")
        if env:
            tol = float(env)
    kwargs = {}
    if tol is not None:
        kwargs["abs_tol"] = tol
        kwargs["rel_tol"] = tol
    if ns.max_terms is not None:
        kwargs["max_terms"] = ns.max_terms
    return SumConfig(**kwargs) if kwargs else None


def _emit(ns, text: str) -> None:
    if ns.out:
        with open(ns.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_eval(ns) -> int:
    if ns.fn not in REGISTRY:
        sys.stderr.write(
            f"unknown function '{ns.fn}'; known: {', '.join(sorted(REGISTRY))}\n"
        )
        return EXIT_USAGE
    cfg = _sum_config(ns) or numkernel.DEFAULT_SUM_CONFIG
    stats = SumStats()
    value = REGISTRY[ns.fn](ns, cfg, stats)
    if ns.format == "json":
        _emit(ns, json.dumps({
            "fn": ns.fn,
            "value": json_value(value),
            "terms_used": stats.terms_used,
            "tail_bound": stats.tail_bound,
        }, indent=2))
    elif ns.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["fn", "value", "terms_used", "tail_bound"])
        w.writerow([ns.fn, format_value(value), stats.terms_used, stats.tail_bound])
        _emit(ns, buf.getvalue())
    else:
        _emit(
            ns,
            f"value={format_value(value)} terms_used={stats.terms_used} "
            f"tail_bound={stats.tail_bound:.3e}",
        )
    return EXIT_OK


def _suite_overrides(ns) -> dict:
    """Translate CLI grid overrides into per-suite keyword overrides."""
    overrides: dict[str, dict] = {}
    qs = tuple(float(x) for x in ns.q_grid.split(",")) if ns.q_grid else None
    fs = tuple(int(x) for x in ns.f_grid.split(",")) if ns.f_grid else None
    ns_range = tuple(range(1, ns.n_max + 1)) if ns.n_max else None
    for name, fn in verify.SUITES.items():
        params = inspect.signature(fn).parameters
        kw = {}
        if qs is not None and "qs" in params:
            kw["qs"] = qs
        if fs is not None and "fs" in params:
            kw["fs"] = fs
        if ns_range is not None and "ns" in params:
            kw["ns"] = ns_range
        if name == "characters" and ns.char_limit is not None:
            kw["f_limit"] = ns.char_limit
        if kw:
            overrides[name] = kw
    return overrides


def _cmd_verify(ns) -> int:
    cfg = _sum_config(ns)
    t0 = time.time()
    try:
        report = verify.run_suite(
            ns.suite,
            cfg=cfg,
            convention=ns.convention,
            rng_seed=ns.rng_seed,
            overrides=_suite_overrides(ns),
        )
    except KeyError as exc:
        sys.stderr.write(f"{exc.args[0]}\n")
        return EXIT_USAGE
    _emit(ns, report.to_csv() if ns.format == "csv" else report.to_json())
    summary = report.summary
    sys.stderr.write(
        f"suites={ns.suite} passed={summary['passed']} failed={summary['failed']} "
        f"expected_fail={summary['expected_fail']} ok={report.ok()} "
        f"runtime={time.time() - t0:.1f}s\n"
    )
    return EXIT_OK if report.ok() else EXIT_VERIFY_FAILED


def _cmd_table(ns) -> int:
    if ns.fn not in REGISTRY:
        sys.stderr.write(f"unknown function '{ns.fn}'; known: {', '.join(sorted(REGISTRY))}\n")
        return EXIT_USAGE
    if ns.sweep not in ("n", "s", "q", "w", "w1", "x"):
        sys.stderr.write("--sweep must be one of n, s, q, w, w1, x\n")
        return EXIT_USAGE
    if ns.count < 1:
        sys.stderr.write("--count must be positive\n")
        return EXIT_USAGE
    cfg = _sum_config(ns) or numkernel.DEFAULT_SUM_CONFIG
    rows = []
    for i in range(ns.count):
        t = ns.start + (ns.stop - ns.start) * i / max(ns.count - 1, 1)
        if ns.sweep == "n":
            value_t: object = int(round(t))
        else:
            value_t = complex(t)
        setattr(ns, ns.sweep, value_t)
        stats = SumStats()
        value = REGISTRY[ns.fn](ns, cfg, stats)
        rows.append((value_t, value, stats.terms_used))
    if ns.format == "json":
        _emit(ns, json.dumps({
            "fn": ns.fn,
            "sweep": ns.sweep,
            "rows": [
                {"param": p if isinstance(p, int) else json_value(p), "value": json_value(v), "terms_used": t}
                for p, v, t in rows
            ],
        }, indent=2))
    else:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow([ns.sweep, "value", "terms_used"])
        for p, v, t in rows:
            w.writerow([p if isinstance(p, int) else format_complex(complex(p)), format_value(v), t])
        _emit(ns, buf.getvalue())
    return EXIT_OK


def _cmd_chars(ns) -> int:
    group = build_group(ns.modulus)
    rows = []
    for chi in enumerate_characters(group):
        f0, primitive, principal = conductor(chi)
        rows.append({
            "index": chi.index,
            "exponents": list(chi.exponents),
            "order": chi.order,
            "conductor": f0,
            "primitive": primitive,
            "principal": principal,
        })
    if ns.format == "json":
        _emit(ns, json.dumps({
            "modulus": ns.modulus,
            "group_order": group.total_order,
            "generators": [{"residue": g, "order": d} for g, d in group.generators],
            "characters": rows,
        }, indent=2))
    else:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["index", "exponents", "order", "conductor", "primitive", "principal"])
        for row in rows:
            w.writerow([
                row["index"],
                ";".join(map(str, row["exponents"])),
                row["order"],
                row["conductor"],
                row["primitive"],
                row["principal"],
            ])
        _emit(ns, buf.getvalue())
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "eval":
            return _cmd_eval(ns)
        if ns.command == "verify":
            return _cmd_verify(ns)
        if ns.command == "table":
            return _cmd_table(ns)
        if ns.command == "chars":
            return _cmd_chars(ns)
        parser.error("unknown command")
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except QZetaError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
