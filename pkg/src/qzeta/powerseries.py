"""Truncated Taylor series over exact rationals or floating complex scalars.

Coefficients are stored plain (coefficient of t^k is ``coeffs[k]``), not
divided by k!; conversion to the n!-normalised coefficients used by the
Bernoulli-type generating functions happens only at extraction.  Scalar
type is whatever the inputs are: :class:`fractions.Fraction` inputs stay
exact, floats/complex go through ordinary arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import SingularSeriesError

__all__ = [
    "TruncatedSeries",
    "ts_mul",
    "ts_add",
    "ts_scale",
    "ts_reciprocal",
    "ts_exp_linear",
    "barnes_gf_coeffs",
]

DEFAULT_ORDER_CAP = 64


@dataclass(frozen=True)
class TruncatedSeries:
    """A series known through order N: coeffs has length N + 1."""

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return ts_mul(self, other)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return ts_add(self, other)


def _make(coeffs: Sequence) -> TruncatedSeries:
    return TruncatedSeries(tuple(coeffs))


def ts_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller operand order."""
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = a.coeffs[0] * b.coeffs[k]
        for i in range(1, k + 1):
            acc += a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return _make(out)


def ts_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return _make([a.coeffs[k] + b.coeffs[k] for k in range(n + 1)])


def ts_scale(c, a: TruncatedSeries) -> TruncatedSeries:
    return _make([c * x for x in a.coeffs])


def ts_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Series b with a*b = 1 + O(t^{N+1}); requires a nonzero constant term."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise SingularSeriesError("cannot invert a series with vanishing constant term")
    inv0 = 1 / c0
    out = [inv0]
    for k in range(1, a.order + 1):
        acc = a.coeffs[1] * out[k - 1]
        for i in range(2, k + 1):
            acc += a.coeffs[i] * out[k - i]
        out.append(-inv0 * acc)
    return _make(out)


def ts_exp_linear(a, order: int) -> TruncatedSeries:
    """Expansion of exp(a t): coefficients a^k / k!."""
    out = [a**0]  # 1 in the scalar type of a
    for k in range(1, order + 1):
        out.append(out[-1] * a / k)
    return _make(out)


def _exp_shifted_factor(a, order: int) -> TruncatedSeries:
    """g with e^{a t} - 1 = t * g(t): coefficients a^{k+1} / (k+1)!."""
    out = []
    num = a
    for k in range(order + 1):
        out.append(num / math.factorial(k + 1))
        num = num * a
    return _make(out)


def barnes_gf_coeffs(x, a_vec: Sequence, order: int = DEFAULT_ORDER_CAP) -> list:
    """Multiple Bernoulli polynomial values from their generating function.

    Expands t^r e^{x t} / prod_j (e^{a_j t} - 1) and returns the list of
    n!-normalised coefficients for n = 0..order.  Each factor is written
    e^{a_j t} - 1 = t * g_j(t) with g_j(0) = a_j, so the t^r prefactor
    cancels and the quotient is an honest power series.  With Fraction
    inputs the result is exact.
    """
    if any(a == 0 for a in a_vec):
        raise SingularSeriesError("each scale parameter a_j must be nonzero")
    prod = ts_exp_linear(x, order)
    for a in a_vec:
        prod = ts_mul(prod, ts_reciprocal(_exp_shifted_factor(a, order)))
    out = []
    fact = 1
    for n in range(order + 1):
        out.append(prod.coeffs[n] * fact)
        fact *= n + 1
    return out
