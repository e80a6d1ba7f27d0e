import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qzeta.errors import DomainError, TruncationError
from qzeta.numkernel import (
    DEFAULT_SUM_CONFIG,
    QParams,
    SumConfig,
    complex_gamma,
    geometric_tail_sum,
    qbracket,
    qpow,
)


class TestQParams:
    def test_rejects_degenerate_values(self):
        with pytest.raises(DomainError):
            QParams(0)
        with pytest.raises(DomainError):
            QParams(1)

    def test_log_branch_is_cached_and_consistent(self):
        qp = QParams(0.3 + 0.1j)
        assert cmath.isclose(cmath.exp(qp.log_q), qp.q, rel_tol=1e-15)

    def test_series_domain_guard(self):
        QParams(0.5).require_series_domain()
        with pytest.raises(DomainError):
            QParams(1.5).require_series_domain()


class TestQBracket:
    def test_trivial_values(self):
        qp = QParams(0.5)
        assert qbracket(0, qp) == 0
        assert abs(qbracket(1, qp) - 1) < 1e-15
        assert abs(qbracket(2, qp) - 1.5) < 1e-15

    def test_rejects_q_one_at_construction(self):
        with pytest.raises(DomainError):
            qbracket(2, QParams(1.0))

    @settings(max_examples=60, deadline=None)
    @given(
        x=st.floats(min_value=0, max_value=3),
        a=st.floats(min_value=0, max_value=3),
        q=st.sampled_from([0.2, 0.5, 0.9]),
    )
    def test_addition_law(self, x, a, q):
        qp = QParams(q)
        lhs = qbracket(x + a, qp)
        rhs = qbracket(x, qp) + qpow(x, qp) * qbracket(a, qp)
        assert abs(lhs - rhs) <= 1e-13

    @pytest.mark.parametrize("f", [1, 2, 3, 5, 8])
    @pytest.mark.parametrize("y", [0.3, 1.0, 2.7])
    def test_base_change_law(self, f, y):
        # [f*y]_q = [f]_q * [y]_{q^f}
        qp = QParams(0.7)
        qpf = QParams(0.7**f)
        lhs = qbracket(f * y, qp)
        rhs = qbracket(f, qp) * qbracket(y, qpf)
        assert abs(lhs - rhs) <= 1e-13

    def test_classical_limit_first_order(self):
        x = 1.7
        errs = [abs(qbracket(x, QParams(1 - 2.0**-k)) - x) for k in range(4, 12)]
        ratios = [errs[i + 1] / errs[i] for i in range(len(errs) - 1)]
        assert all(0.3 <= r <= 0.7 for r in ratios)


class TestQPow:
    def test_trivial(self):
        qp = QParams(0.5)
        assert qpow(0, qp) == 1
        assert abs(qpow(1, qp) - 0.5) < 1e-16
        assert abs(qpow(3, qp) - 0.125) < 1e-16

    def test_integer_exponents_match_repeated_products(self):
        qp = QParams(0.37 + 0.2j)
        direct = 1 + 0j
        for k in range(1, 8):
            direct *= qp.q
            assert abs(qpow(k, qp) - direct) <= 1e-14 * abs(direct)


class TestGeometricTailSum:
    def test_plain_geometric(self):
        cfg = SumConfig(abs_tol=1e-12, rel_tol=0.0)
        total, terms, bound = geometric_tail_sum(lambda n: 0.5**n, 0.5, cfg)
        assert abs(total - 2) <= 1e-12
        assert bound <= 1e-12
        assert terms > 10

    def test_zero_terms_stop_at_burn_in(self):
        total, terms, bound = geometric_tail_sum(lambda n: 0.0, 0.9, burn_in=7)
        assert total == 0
        assert terms == 8
        assert bound == 0.0

    def test_q_bracket_series_against_brute_force(self):
        # sum q^n / [1+n]^2 at q = 0.5, oracle = 10^6-term partial sum
        qp = QParams(0.5)
        n = np.arange(1_000_000)
        brackets = (1 - 0.5 ** (1 + n)) / 0.5
        oracle = float(np.sum(0.5**n / brackets**2))
        cfg = SumConfig(abs_tol=1e-13, rel_tol=0.0)
        total, _, _ = geometric_tail_sum(
            lambda n: 0.5**n / qbracket(1 + n, qp) ** 2, 0.5, cfg
        )
        assert abs(total - oracle) <= 1e-12

    def test_certified_bound_holds_against_longer_sum(self):
        # the certified tail bound must never be exceeded by a 10x longer sum
        for ratio, gen in [
            (0.5, lambda n: 0.5**n),
            (0.8, lambda n: 0.8**n / (1 + n)),
            (0.9, lambda n: 0.9**n * cmath.exp(1j * n)),
        ]:
            cfg = SumConfig(abs_tol=1e-10, rel_tol=0.0, max_terms=10_000)
            total, terms, bound = geometric_tail_sum(gen, ratio, cfg)
            longer = sum(gen(n) for n in range(10 * terms))
            assert abs(longer - total) <= bound

    def test_truncation_failure_carries_bound(self):
        cfg = SumConfig(abs_tol=1e-30, rel_tol=0.0, max_terms=50)
        with pytest.raises(TruncationError) as err:
            geometric_tail_sum(lambda n: 0.99**n, 0.99, cfg)
        assert err.value.terms_used == 50
        assert err.value.tail_bound > 0

    def test_invalid_ratio_rejected(self):
        with pytest.raises(DomainError):
            geometric_tail_sum(lambda n: 0.5**n, 1.0)


class TestSumConfig:
    def test_needs_one_positive_tolerance(self):
        with pytest.raises(ValueError):
            SumConfig(abs_tol=0.0, rel_tol=0.0)

    def test_tail_factor_must_exceed_one(self):
        with pytest.raises(ValueError):
            SumConfig(tail_factor=1.0)

    def test_default_is_valid(self):
        assert DEFAULT_SUM_CONFIG.max_terms == 200_000


class TestComplexGamma:
    def test_small_integers(self):
        assert abs(complex_gamma(1) - 1) <= 1e-14
        assert abs(complex_gamma(5) - 24) <= 24 * 1e-13

    def test_half_integer_via_duplication(self):
        # gamma(1/2)^2 = pi
        g = complex_gamma(0.5)
        assert abs(g * g - math.pi) <= 1e-12

    def test_poles_rejected(self):
        for s in (0, -1, -7):
            with pytest.raises(DomainError):
                complex_gamma(s)

    @settings(max_examples=40, deadline=None)
    @given(
        re=st.floats(min_value=0.2, max_value=14),
        im=st.floats(min_value=-14, max_value=14),
    )
    def test_recurrence_identity(self, re, im):
        s = complex(re, im)
        lhs = complex_gamma(s + 1)
        rhs = s * complex_gamma(s)
        assert abs(lhs - rhs) <= 1e-12 * abs(rhs)
