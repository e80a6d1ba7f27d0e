import csv
import io
import json
import math

import pytest

from qzeta import verify
from qzeta.numkernel import SumConfig


SMALL = {
    "interpolation": dict(qs=(0.5,), ws=(1.0,), w1s=(1.0, 2.0), ns=(1, 2, 3)),
    "char_interpolation": dict(fs=(3, 4), ns=(1, 2, 3), w1s=(1.0,)),
    "decomposition": dict(fs=(3,), qs=(0.5,), ss=(2.5, -3.0)),
    "distribution": dict(fs=(3, 4), ns=(1, 2, 3)),
    "multiple_decomposition": dict(fs=(3,), ss=(2.5,), weight_vectors=((1.0,), (1.0, 2.0))),
    "multiple_interpolation": dict(specs=((1, (1.0,), (3,)), (2, (1.0, 2.0), (3,))), ms=(0, 1, 2)),
    "classical_limits": dict(ks=(4, 5, 6, 7)),
    "mellin": {},
    "binomial_diagnostic": dict(qs=(0.5,), ws=(1.0,), ns=(0, 1, 2, 3)),
    "hurwitz_special": dict(ns=(1, 2, 3, 4)),
    "barnes_special": dict(ms=(0, 1, 2)),
    "reductions": {},
    "characters": dict(f_limit=40),
}


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_each_suite_passes_on_reduced_grid(name):
    report = verify.SUITES[name](**SMALL[name])
    assert report.ok(), [
        (r.check_id, r.rel_err) for r in report.results if not r.expected_fail and not r.passed
    ]


class TestExpectedFailures:
    def test_decomposition_documents_the_bare_convention(self):
        report = verify.check_decomposition(fs=(3,), qs=(0.5,), ss=(2.5,))
        bare = [r for r in report.results if r.expected_fail]
        assert bare, "expected-fail records must be present"
        assert all(not r.passed for r in bare)
        assert all(r.rel_err >= verify.EXPECTED_FAIL_FLOOR for r in bare)

    def test_decomposition_principal_is_explained(self):
        report = verify.check_decomposition(fs=(3,), qs=(0.5,), ss=(2.5,))
        explained = [r for r in report.results if "explained" in r.check_id]
        assert explained
        assert all(r.passed for r in explained)

    def test_multiple_decomposition_prefactor_fails_hard(self):
        report = verify.check_multiple_decomposition(
            fs=(3,), ss=(2.5,), weight_vectors=((1.0, 2.0),)
        )
        printed = [r for r in report.results if "rank-power" in r.check_id]
        assert printed
        assert all(r.expected_fail and r.rel_err >= 1e-3 for r in printed)

    def test_unshifted_index_fails_hard(self):
        report = verify.check_multiple_interpolation(
            specs=((1, (1.0,), (4,)),), ms=(1, 2)
        )
        unshifted = [r for r in report.results if "unshifted" in r.check_id]
        assert unshifted
        assert all(r.expected_fail and r.rel_err >= 1e-3 for r in unshifted)

    def test_missing_expected_fail_makes_suite_not_ok(self):
        report = verify.check_decomposition(fs=(3,), qs=(0.5,), ss=(2.5,))
        for r in report.results:
            if r.expected_fail:
                r.rel_err = 1e-9  # simulate a check with no discriminating power
        assert not report.ok()


@pytest.fixture(scope="module")
def report():
    return verify.run_suite(
        "interpolation,mellin",
        overrides={"interpolation": SMALL["interpolation"]},
    )


class TestReportStructure:

    def test_summary_counts_match_results(self, report):
        s = report.summary
        assert s["passed"] + s["failed"] == sum(
            1 for r in report.results if not r.expected_fail
        )
        assert s["expected_fail"] == sum(1 for r in report.results if r.expected_fail)

    def test_passed_flag_matches_tolerances(self, report):
        for r in report.results:
            assert r.passed == (r.abs_err <= r.tol or r.rel_err <= r.tol)

    def test_json_schema(self, report):
        doc = json.loads(report.to_json())
        assert set(doc) >= {"suite", "version", "grid", "results", "summary", "convention_verdicts"}
        first = doc["results"][0]
        assert set(first) == {
            "check_id", "params", "lhs", "rhs", "abs_err", "rel_err",
            "tol", "passed", "expected_fail", "terms_used", "notes",
        }
        assert set(first["lhs"]) == {"re", "im"}
        assert doc["summary"] == report.summary

    def test_csv_flattens_the_same_fields(self, report):
        rows = list(csv.reader(io.StringIO(report.to_csv())))
        header = rows[0]
        assert header[:3] == ["suite", "check_id", "params"]
        assert len(rows) == len(report.results) + 1

    def test_runs_are_deterministic(self):
        a = verify.run_suite("characters", overrides={"characters": dict(f_limit=25)})
        b = verify.run_suite("characters", overrides={"characters": dict(f_limit=25)})
        assert a.to_json() == b.to_json()

    def test_seed_changes_sampled_pairs_not_verdicts(self):
        a = verify.run_suite("characters", rng_seed=1, overrides={"characters": dict(f_limit=25)})
        b = verify.run_suite("characters", rng_seed=2, overrides={"characters": dict(f_limit=25)})
        assert a.ok() and b.ok()


class TestRunSuite:
    def test_unknown_suite_rejected(self):
        with pytest.raises(KeyError):
            verify.run_suite("no_such_suite")

    def test_convention_filter_homogeneous_only(self):
        report = verify.run_suite(
            "decomposition",
            convention="homogeneous",
            overrides={"decomposition": dict(fs=(3,), qs=(0.5,), ss=(2.5,))},
        )
        assert report.ok()
        assert not any(r.expected_fail for r in report.results)

    def test_convention_filter_bare_keeps_expected_fails(self):
        report = verify.run_suite(
            "decomposition",
            convention="bare",
            overrides={"decomposition": dict(fs=(3,), qs=(0.5,), ss=(2.5,))},
        )
        assert report.ok()
        assert any(r.expected_fail for r in report.results)

    def test_evaluator_failures_are_recorded_not_raised(self):
        cfg = SumConfig(abs_tol=1e-14, rel_tol=1e-13, max_terms=5)
        report = verify.check_interpolation(cfg=cfg, qs=(0.5,), ws=(1.0,), w1s=(1.0,), ns=(3,))
        assert not report.ok()
        assert any("evaluator failure" in r.notes for r in report.results)

    def test_verdicts_present_after_full_run(self):
        report = verify.run_suite(
            "decomposition,multiple_decomposition,multiple_interpolation",
            overrides={
                "decomposition": dict(fs=(3,), qs=(0.5,), ss=(2.5,)),
                "multiple_decomposition": dict(fs=(3,), ss=(2.5,), weight_vectors=((1.0,),)),
                "multiple_interpolation": dict(specs=((1, (1.0,), (3,)),), ms=(0, 1)),
            },
        )
        assert report.convention_verdicts["q_exponent"] == "homogeneous"
        assert "multiple_decomposition_prefactor" in report.convention_verdicts
        assert report.convention_verdicts["multiple_interpolation_index"] == "m + r"
