"""Acceptance gate: every criterion at its stated grid and tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion.  The grids here are the library defaults, which are
the contract grids; nothing is loosened.
"""

import math
import time
from fractions import Fraction

import pytest

from qzeta import classical, verify
from qzeta.numkernel import QParams
from qzeta.powerseries import barnes_gf_coeffs

_REPORTS = {}


def suite(name, **kw):
    key = (name, tuple(sorted(kw.items())))
    if key not in _REPORTS:
        t0 = time.time()
        rep = verify.SUITES[name](**kw)
        _REPORTS[key] = (rep, time.time() - t0)
    return _REPORTS[key]


def announce(criterion, passed, detail):
    marker = "PASS" if passed else "FAIL"
    print(f"[{marker}] {criterion}: {detail}")
    assert passed, f"{criterion}: {detail}"


def max_residual(report, predicate=lambda r: True):
    vals = [r.rel_err for r in report.results if not r.expected_fail and predicate(r)]
    return max(vals)


def min_expected_fail(report, predicate=lambda r: True):
    vals = [r.rel_err for r in report.results if r.expected_fail and predicate(r)]
    return min(vals) if vals else math.inf


def test_criterion_01_interpolation_grid():
    rep, dt = suite("interpolation")
    worst = max_residual(rep)
    ok = rep.ok() and worst <= 1e-9 and dt <= 10.0
    announce(
        "criterion 1 (q-zeta interpolation, n = 1..8)",
        ok,
        f"max residual {worst:.2e} <= 1e-9, runtime {dt:.1f}s <= 10s",
    )


def test_criterion_02_char_interpolation_both_conventions():
    rep, _ = suite("char_interpolation")
    worst = max_residual(rep)
    ok = rep.ok() and worst <= 1e-9
    announce(
        "criterion 2 (character interpolation, each convention coherently)",
        ok,
        f"max residual {worst:.2e} <= 1e-9 over f in {{3,4,5}}, all characters",
    )


def test_criterion_03_decomposition_resolves_convention():
    rep, _ = suite("decomposition")
    worst = max_residual(rep, lambda r: "/hom/" in r.check_id and "explained" not in r.check_id)
    floor = min_expected_fail(rep)
    ok = rep.ok() and worst <= 1e-9 and floor >= 1e-3
    announce(
        "criterion 3 (residue-class decomposition, homogeneous vs bare)",
        ok,
        f"homogeneous max residual {worst:.2e} <= 1e-9; bare min residual {floor:.2e} >= 1e-3",
    )


def test_criterion_04_distribution_relation():
    rep, _ = suite("distribution")
    worst = max_residual(rep)
    ok = rep.ok() and worst <= 1e-10
    announce(
        "criterion 4 (distribution relation on the criterion-2 grid)",
        ok,
        f"max residual {worst:.2e} <= 1e-10 (principal characters via closed-form correction)",
    )


def test_criterion_05_multiple_decomposition_prefactor():
    rep, _ = suite("multiple_decomposition")
    worst = max_residual(rep, lambda r: "derived" in r.check_id)
    floor = min_expected_fail(rep, lambda r: "rank-power" in r.check_id)
    ok = rep.ok() and worst <= 1e-8 and floor >= 1e-3
    announce(
        "criterion 5 (multiple decomposition prefactor)",
        ok,
        f"weight-product prefactor max residual {worst:.2e} <= 1e-8; "
        f"rank-power prefactor min residual {floor:.2e} >= 1e-3",
    )


def test_criterion_06_multiple_interpolation_index():
    rep, _ = suite("multiple_interpolation")
    worst = max_residual(rep, lambda r: "shifted" in r.check_id)
    floor = min_expected_fail(rep, lambda r: "unshifted" in r.check_id)
    ok = rep.ok() and worst <= 1e-9 and floor >= 1e-3
    announce(
        "criterion 6 (multiple interpolation index m + r, r = 1..3, m = 0..4)",
        ok,
        f"shifted index max residual {worst:.2e} <= 1e-9; "
        f"unshifted min residual {floor:.2e} >= 1e-3",
    )


def test_criterion_07_hurwitz_special_values():
    rep, _ = suite("hurwitz_special")
    worst = max_residual(rep, lambda r: r.check_id.startswith("hurwitz_special/n="))
    ref = [r for r in rep.results if "reference" in r.check_id][0]
    ok = rep.ok() and worst <= 1e-10 and ref.abs_err <= 1e-12
    announce(
        "criterion 7 (Hurwitz special values, n = 1..10, six bases)",
        ok,
        f"max residual {worst:.2e} <= 1e-10; zeta(2,1) off by {ref.abs_err:.2e} <= 1e-12",
    )


def test_criterion_08_barnes_rank_one_special_values():
    rep, _ = suite("barnes_special")
    worst = max_residual(rep, lambda r: r.check_id.startswith("barnes_special/m="))
    ok = rep.ok() and worst <= 1e-9
    announce(
        "criterion 8 (rank-1 multiple zeta special values, m = 0..6)",
        ok,
        f"max residual {worst:.2e} <= 1e-9 over a, w in {{0.5, 1, 2}}",
    )


def test_criterion_09_classical_limits_first_order():
    rep, _ = suite("classical_limits")
    ratios = [r.lhs.real for r in rep.results]
    ok = rep.ok() and all(0.3 <= x <= 0.7 for x in ratios)
    announce(
        "criterion 9 (q -> 1 limits, error halves per halving of 1-q, k = 4..10)",
        ok,
        f"all {len(ratios)} consecutive error ratios within [0.3, 0.7] "
        f"(range {min(ratios):.3f}..{max(ratios):.3f})",
    )


def test_criterion_10_character_algebra_to_200():
    rep, dt = suite("characters", f_limit=200)
    worst = max_residual(rep, lambda r: "count" not in r.check_id)
    counts_exact = all(r.passed for r in rep.results if "count" in r.check_id)
    ok = rep.ok() and counts_exact and worst <= 1e-13
    announce(
        "criterion 10 (character algebra for all f <= 200)",
        ok,
        f"counts = phi(f) exactly; orthogonality/multiplicativity max {worst:.2e} <= 1e-13 "
        f"({dt:.1f}s)",
    )


def test_criterion_11_mellin_representation():
    rep, _ = suite("mellin")
    points = max_residual(rep, lambda r: "termwise" not in r.check_id)
    term = [r for r in rep.results if "termwise" in r.check_id][0]
    ok = rep.ok() and points <= 1e-6 and term.abs_err <= 1e-8
    announce(
        "criterion 11 (integral representation point checks)",
        ok,
        f"quadrature vs series max {points:.2e} <= 1e-6; termwise gamma {term.abs_err:.2e} <= 1e-8",
    )


def test_criterion_12_reductions():
    rep, _ = suite("reductions")
    worst_zeta = max_residual(rep, lambda r: "zeta-rank1" in r.check_id)
    worst_gf = max_residual(rep, lambda r: "barnes-gf/" in r.check_id)
    exact = [r for r in rep.results if "exact-rational" in r.check_id][0]
    diag, _ = suite("binomial_diagnostic")
    worst_binom = max_residual(diag, lambda r: "two-forms" in r.check_id)
    # exact-rational equality on the Fraction backend, rechecked directly
    coeffs = barnes_gf_coeffs(Fraction(0), [Fraction(1)], 9)
    exactly_bernoulli = coeffs[1] == Fraction(-1, 2) and all(
        coeffs[k] == 0 for k in (3, 5, 7, 9)
    )
    ok = (
        rep.ok()
        and diag.ok()
        and worst_zeta <= 1e-12
        and worst_gf <= 1e-12
        and exact.passed
        and exactly_bernoulli
        and worst_binom <= 1e-12
    )
    announce(
        "criterion 12 (structural reductions)",
        ok,
        f"q-zeta reduction {worst_zeta:.2e} <= 1e-12; generating-function coefficients "
        f"{worst_gf:.2e} <= 1e-12 (exact on rationals: {exactly_bernoulli}); "
        f"binomial two-form consistency {worst_binom:.2e} <= 1e-12",
    )


def test_criterion_13_full_suite_under_five_minutes():
    t0 = time.time()
    rep = verify.run_suite("all")
    dt = time.time() - t0
    ok = rep.ok() and dt <= 300.0
    s = rep.summary
    announce(
        "criterion 13 (full verification run)",
        ok,
        f"{s['passed']} asserted checks pass, {s['expected_fail']} expected-fails fail, "
        f"runtime {dt:.1f}s <= 300s",
    )
