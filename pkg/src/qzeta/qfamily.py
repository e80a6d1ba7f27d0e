"""q-deformed Bernoulli families, Changhee q-zeta functions, Dirichlet q-L-functions.

All series here are entire in s for |q| < 1: the q-power factor decays
geometrically while the q-bracket of the shifted argument stays bounded
above and below, so every evaluator runs on certified geometric tails.

Two exponent conventions coexist in the literature for the character-
twisted objects, differing in whether the q-power of a summand carries the
full shifted argument appearing in its bracket (``HOMOGENEOUS``,
q^{x + sum w_m n_m}) or only the lattice part (``BARE``, q^{sum w_m n_m}).
Evaluators take the convention as an argument; the verification suites
resolve which one makes the decomposition identities true.

Alternating binomial sums with a (1-q)^{-n} prefactor are ill-conditioned
in double precision for q near 1; those evaluators track their own
rounding budget and transparently re-run in extended precision (mpmath)
when the budget exceeds the target accuracy.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import mpmath as mp
import numpy as np

from .characters import DirichletCharacter
from .errors import ConsistencyError, DomainError, PoleError, TruncationError
from .numkernel import (
    DEFAULT_SUM_CONFIG,
    QParams,
    SumConfig,
    SumStats,
    qbracket,
    qpow,
)

__all__ = [
    "ExponentConvention",
    "WeightVector",
    "carlitz_beta_number",
    "carlitz_beta_poly",
    "changhee_beta_number",
    "changhee_beta_poly",
    "changhee_correction",
    "gen_changhee_beta_number",
    "gen_changhee_beta_poly",
    "multiple_changhee_beta",
    "zeta_q",
    "zeta_q_correction",
    "zeta_q_multiple",
    "L_q",
    "L_q_multiple",
    "multiple_beta_binomial_form",
    "multiple_beta_binomial_from_numbers",
]

_EPS = 2.220446049250313e-16
_ESCALATION_TARGET = 1e-13
_BRACKET_WARN = 1e-8


class ExponentConvention(enum.Enum):
    HOMOGENEOUS = "homogeneous"
    BARE = "bare"


def _resolve_convention(conv) -> ExponentConvention:
    if isinstance(conv, ExponentConvention):
        return conv
    return ExponentConvention(str(conv).lower())


@dataclass(frozen=True)
class WeightVector:
    """Weights w_1..w_r of a multiple q-object; every Re(w_j) must be positive."""

    weights: tuple[complex, ...]

    def __post_init__(self):
        ws = tuple(complex(w) for w in self.weights)
        if not ws:
            raise DomainError("at least one weight is required")
        if any(w.real <= 0 for w in ws):
            raise DomainError("all weights need Re(w_j) > 0")
        object.__setattr__(self, "weights", ws)

    @property
    def r(self) -> int:
        return len(self.weights)


def _as_weights(w) -> WeightVector:
    if isinstance(w, WeightVector):
        return w
    if isinstance(w, (list, tuple)):
        return WeightVector(tuple(w))
    return WeightVector((w,))


def _guard_bracket(b: complex) -> complex:
    if b == 0:
        raise DomainError("q-bracket of a summand vanishes; point is singular")
    if abs(b) < _BRACKET_WARN:
        warnings.warn(
            f"q-bracket magnitude {abs(b):.2e} is nearly singular; result is ill-conditioned",
            RuntimeWarning,
            stacklevel=3,
        )
    return b


# ---------------------------------------------------------------------------
# Carlitz family

def _carlitz_table(qp: QParams, n: int) -> list[complex]:
    """Recurrence table beta_0..beta_n; each level divides by q^{m+1} - 1,
    so rounding amplifies like |1-q|^{-m} near q = 1 and the whole table is
    rebuilt in extended precision there."""
    q = qp.q
    if abs(1 - q) < 0.05 and n >= 3:
        dps = 24 + int(n * -math.log10(abs(1 - q)))
        with mp.workdps(dps):
            qm = mp.mpc(q)
            table_mp = [mp.mpc(1)]
            for m in range(1, n + 1):
                denom = qm ** (m + 1) - 1
                if abs(denom) < mp.mpf(10) ** (-dps + 6):
                    raise DomainError(f"Carlitz recurrence is singular: q^{m + 1} = 1")
                acc = mp.mpc(0)
                for k in range(m):
                    acc += math.comb(m, k) * qm**k * table_mp[k]
                rhs = 1 if m == 1 else 0
                table_mp.append((rhs - qm * acc) / denom)
            return [complex(v) for v in table_mp]
    table = [1 + 0j]
    for m in range(1, n + 1):
        denom = q ** (m + 1) - 1
        if abs(denom) < 1e-12:
            raise DomainError(f"Carlitz recurrence is singular: q^{m + 1} = 1")
        acc = 0j
        for k in range(m):
            acc += math.comb(m, k) * q**k * table[k]
        rhs = 1.0 if m == 1 else 0.0
        table.append((rhs - q * acc) / denom)
    return table


def carlitz_beta_number(n: int, qp: QParams) -> complex:
    """Carlitz q-Bernoulli number from the defining recurrence.

    beta_0 = 1 and q (q beta + 1)^m - beta_m = [m = 1], with beta^k read
    as beta_k; tends to the classical B_n as q -> 1.
    """
    if n < 0:
        raise DomainError("index must be non-negative")
    return _carlitz_table(qp, n)[n]


def carlitz_beta_poly(n: int, x: complex, qp: QParams) -> complex:
    """Carlitz q-Bernoulli polynomial sum_k C(n,k) beta_k q^{kx} [x]^{n-k}."""
    if n < 0:
        raise DomainError("index must be non-negative")
    table = _carlitz_table(qp, n)
    bx = qbracket(x, qp)
    acc = 0j
    for k in range(n + 1):
        acc += math.comb(n, k) * table[k] * qpow(k * x, qp) * bx ** (n - k)
    return acc


# ---------------------------------------------------------------------------
# geometric controls for the q-series

def _series_controls(qp: QParams, y0_re: float, step_re: float, power_re: float) -> tuple[float, int]:
    """Certified per-step ratio bound and burn-in for terms q^{y} [y]^{power}.

    y walks y0 + k*step.  The q-power contributes |q|^{step} per step; the
    bracket-power factor is bounded through |[y+step]/[y]| <= (1+|q|^y)/(1-|q|^y),
    which tends to 1, so past a finite burn-in the combined ratio stays
    below sqrt(|q|^{step}) whenever the power grows, and below |q|^{step}
    outright when it does not.
    """
    qa = abs(qp.q)
    rho0 = qa**step_re
    if not 0 < rho0 < 1:
        raise DomainError("weights must have positive real part for geometric decay")
    if power_re <= 0 and qp.is_real_unit_interval:
        return rho0, 0
    p = abs(power_re)
    rho = math.sqrt(rho0)
    target = 1 / rho
    k = 0
    while k <= 200_000:
        t = qa ** (y0_re + step_re * k)
        if t < 1 and ((1 + t) / (1 - t)) ** p <= target:
            return rho, k
        k += 1
    raise DomainError("could not certify geometric decay of the series")


def _block_series(
    g: Callable[[int], complex],
    weight: Callable[[int], complex],
    block: int,
    start: int,
    rho: float,
    burn: int,
    cfg: SumConfig,
) -> tuple[complex, int, float, float]:
    """Sum weight(m) g(m) for m >= start in blocks, certifying the tail.

    The certificate uses the per-block majorant sum |g| (character weights
    are unimodular or zero), which inherits the geometric block ratio
    ``rho``.  Returns (sum, terms, tail_bound, noise_bound).
    """
    tail_coeff = cfg.tail_factor * rho / (1 - rho)
    total = 0j
    abs_total = 0.0
    terms = 0
    max_blocks = cfg.max_terms // block + 1
    bound = math.inf
    for j in range(max_blocks):
        major = 0.0
        for i in range(block):
            m = start + j * block + i
            c = weight(m)
            terms += 1
            if c == 0:
                continue
            v = g(m)
            total += c * v
            major += abs(v)
        abs_total += major
        bound = tail_coeff * major
        if j >= burn and (
            (cfg.abs_tol > 0 and bound <= cfg.abs_tol)
            or (cfg.rel_tol > 0 and bound <= cfg.rel_tol * abs(total))
        ):
            return total, terms, bound, _EPS * abs_total * 6
    raise TruncationError(
        f"character series failed to converge within {cfg.max_terms} terms "
        f"(last tail bound {bound:.3e})",
        tail_bound=bound,
        terms_used=terms,
    )


# ---------------------------------------------------------------------------
# Barnes-type Changhee q-Bernoulli polynomials (one parameter)

def changhee_correction(n: int, qp: QParams) -> complex:
    """Constant-term contribution ((q-1)/log q) (1-q)^{-n} of the one-parameter family."""
    return ((qp.q - 1) / qp.log_q) * (1 - qp.q) ** (-n)


def _needs_escalation(noise: float, value: complex, cfg: SumConfig = DEFAULT_SUM_CONFIG) -> bool:
    """Escalate when the rounding budget exceeds both the library target and
    a quarter of the accuracy the caller actually asked for."""
    scale = 1 + abs(value)
    requested = 0.25 * max(cfg.abs_tol, cfg.rel_tol * scale)
    return noise > max(_ESCALATION_TARGET * scale, requested)


def _mp_char_series(
    dps: int,
    qp: QParams,
    chi: DirichletCharacter | None,
    start: int,
    bracket_shift: complex,
    step: complex,
    exponent_shift: complex,
    power: complex,
) -> complex:
    """Extended-precision twin of the 1-d q-series:

        sum_{m >= start} chi(m) q^{exponent_shift + step m} [bracket_shift + step m]^power.
    """
    with mp.workdps(dps):
        q = mp.mpc(qp.q)
        lq = mp.log(q)
        power_mp = mp.mpc(power)
        total = mp.mpc(0)
        cutoff = mp.mpf(10) ** (-dps + 4)
        m = start
        quiet = 0
        while quiet < 4 and m < start + 500_000:
            c = 1 if chi is None else chi(m)
            if c != 0:
                y = mp.mpc(bracket_shift) + mp.mpc(step) * m
                e = mp.mpc(exponent_shift) + mp.mpc(step) * m
                br = (1 - mp.exp(y * lq)) / (1 - q)
                t = mp.mpc(c) * mp.exp(e * lq) * br**power_mp
                total += t
                if abs(t) <= cutoff * (1 + abs(total)):
                    quiet += 1
                else:
                    quiet = 0
            m += 1
        return complex(total)


def _changhee_binomial_float(n: int, w: complex, qp: QParams, w1: complex) -> tuple[complex, float]:
    q = qp.q
    acc = (q - 1) / qp.log_q
    abs_acc = abs(acc)
    for l in range(1, n + 1):
        t = math.comb(n, l) * qpow(l * w, qp) * (-1) ** l * (l * w1) / _guard_bracket(qbracket(l * w1, qp))
        acc += t
        abs_acc += abs(t)
    scale = (1 - q) ** (-n)
    return acc * scale, abs_acc * abs(scale)


def _changhee_binomial_mp(n: int, w: complex, qp: QParams, w1: complex, dps: int) -> complex:
    with mp.workdps(dps):
        q = mp.mpc(qp.q)
        lq = mp.log(q)
        acc = (q - 1) / lq
        for l in range(1, n + 1):
            br = (1 - mp.exp(l * mp.mpc(w1) * lq)) / (1 - q)
            acc += math.comb(n, l) * mp.exp(l * mp.mpc(w) * lq) * (-1) ** l * (l * mp.mpc(w1)) / br
        val = acc / (1 - q) ** n
        return complex(val)


def _escalation_dps(abs_sum: float, scale: float) -> int:
    lost = max(0.0, math.log10(max(abs_sum / max(scale, 1e-300), 1.0)))
    return 20 + int(lost) + 6


def changhee_beta_poly(
    n: int,
    w: complex,
    qp: QParams,
    w1: complex,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    validate: bool = True,
    stats: SumStats | None = None,
) -> complex:
    """One-parameter Barnes-type Changhee q-Bernoulli polynomial.

    Primary route is the closed binomial sum

        (1-q)^{-n} sum_l C(n,l) q^{lw} (-1)^l (l w1) / [l w1],

    whose l = 0 term is the limit value (q-1)/log q of x/[x].  When the
    alternating sum loses too many digits in double precision the whole
    sum is re-evaluated in extended precision.  With ``validate`` the
    value is cross-checked against independent coefficient extraction from
    the generating function (correction term plus tail-bounded q-series);
    disagreement beyond the combined error budget raises
    :class:`ConsistencyError`.
    """
    if n < 0:
        raise DomainError("index must be non-negative")
    qp.require_series_domain()
    w1 = complex(w1)
    if w1.real <= 0:
        raise DomainError("parameter w1 needs a positive real part")
    value, abs_sum = _changhee_binomial_float(n, w, qp, w1)
    scale = 1 + abs(value)
    binom_noise = _EPS * abs_sum * (n + 4)
    if _needs_escalation(binom_noise, value, cfg):
        value = _changhee_binomial_mp(n, w, qp, w1, _escalation_dps(abs_sum, scale))
        binom_noise = _ESCALATION_TARGET * scale
    if stats is not None:
        stats.add(n + 1, 0.0, binom_noise)
    if validate and n >= 1:
        series, tail, noise = _changhee_series_route(n, w, qp, w1, cfg, stats)
        budget = max(1e-11 * (1 + abs(value)), 10 * (tail + noise + binom_noise))
        if abs(value - series) > budget:
            raise ConsistencyError(
                f"binomial and generating-function routes disagree at n={n}, w={w}, "
                f"q={qp.q}, w1={w1}: {value} vs {series}"
            )
    return value


def _changhee_series_route(
    n: int,
    w: complex,
    qp: QParams,
    w1: complex,
    cfg: SumConfig,
    stats: SumStats | None = None,
) -> tuple[complex, float, float]:
    """Coefficient extraction: correction - n w1 sum_k q^{w1 k + w} [w1 k + w]^{n-1}."""
    rho, burn = _series_controls(qp, complex(w).real, complex(w1).real, n - 1)

    def g(k: int) -> complex:
        y = w1 * k + w
        b = qbracket(y, qp)
        if b == 0:  # w = 0 head term: [0]^0 = 1, [0]^p = 0 for p > 0
            return qpow(y, qp) if n == 1 else 0j
        return qpow(y, qp) * b ** (n - 1)

    total, terms, tail, noise = _block_series(g, lambda m: 1.0, 1, 0, rho, burn, cfg)
    if stats is not None:
        stats.add(terms, abs(n * w1) * tail, abs(n * w1) * noise)
    corr = changhee_correction(n, qp)
    return corr - n * w1 * total, abs(n * w1) * tail, abs(n * w1) * noise + _EPS * abs(corr) * 4


def changhee_beta_number(
    n: int,
    qp: QParams,
    w1: complex,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    validate: bool = True,
    stats: SumStats | None = None,
) -> complex:
    """The w = 0 values of the one-parameter family (q-Bernoulli numbers)."""
    return changhee_beta_poly(n, 0.0, qp, w1, cfg=cfg, validate=validate, stats=stats)


# ---------------------------------------------------------------------------
# character-twisted one-parameter family

def gen_changhee_beta_poly(
    n: int,
    x: complex,
    chi: DirichletCharacter,
    qp: QParams,
    w1: complex,
    conv: ExponentConvention | str = ExponentConvention.HOMOGENEOUS,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    stats: SumStats | None = None,
) -> complex:
    """Generalized Changhee q-Bernoulli polynomial attached to chi.

        -n w1 sum_{m>=1} chi(m) q^E [x + w1 m]^{n-1},

    with E = x + w1 m under the homogeneous convention and E = w1 m under
    the bare one.  n = 0 returns 0: the generating function has no
    constant term.  Under the homogeneous convention the values satisfy
    the distribution relation over residue classes mod f (checked by the
    ``distribution`` verification suite).
    """
    if n < 0:
        raise DomainError("index must be non-negative")
    if n == 0:
        return 0j
    qp.require_series_domain()
    conv = _resolve_convention(conv)
    w1 = complex(w1)
    if w1.real <= 0:
        raise DomainError("parameter w1 needs a positive real part")
    f = chi.modulus
    rho, burn = _series_controls(qp, (x + w1).real, w1.real * f, n - 1)

    def g(m: int) -> complex:
        y = x + w1 * m
        e = y if conv is ExponentConvention.HOMOGENEOUS else w1 * m
        return qpow(e, qp) * _guard_bracket(qbracket(y, qp)) ** (n - 1)

    total, terms, tail, noise = _block_series(g, chi, f, 1, rho, burn, cfg)
    value = -n * w1 * total
    budget = abs(n * w1) * noise
    if _needs_escalation(budget, value, cfg):
        e_shift = x if conv is ExponentConvention.HOMOGENEOUS else 0.0
        total = _mp_char_series(
            _escalation_dps(budget / _EPS, 1 + abs(value)), qp, chi, 1, x, w1, e_shift, n - 1
        )
        value = -n * w1 * total
        budget = _ESCALATION_TARGET * (1 + abs(value))
    if stats is not None:
        stats.add(terms, abs(n * w1) * tail, budget)
    return value


def gen_changhee_beta_number(
    n: int,
    chi: DirichletCharacter,
    qp: QParams,
    w1: complex = 1.0,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    stats: SumStats | None = None,
) -> complex:
    """Generalized q-Bernoulli numbers: the x = 0 values (conventions coincide there)."""
    return gen_changhee_beta_poly(
        n, 0.0, chi, qp, w1, conv=ExponentConvention.BARE, cfg=cfg, stats=stats
    )


# ---------------------------------------------------------------------------
# nested lattice sums for the multiple objects

def _nested_q_sum(
    qp: QParams,
    weights: WeightVector,
    bracket_shift: complex,
    exponent_shift: complex,
    power: complex,
    cfg: SumConfig,
    chi: DirichletCharacter | None = None,
    start: int = 0,
    stats: SumStats | None = None,
) -> complex:
    """Certified sum over n in {start,start+1,...}^r of

        prod_k chi(n_k) * q^{exponent_shift + sum w_j n_j} * [bracket_shift + sum w_j n_j]^power.

    Each index is truncated independently; the per-index tails are
    certified from the geometric ratio of that index applied to the
    boundary slice of term magnitudes, with the total budget split evenly
    across indices.
    """
    qp.require_series_domain()
    ws = weights.weights
    r = len(ws)
    power = complex(power)
    controls = [
        _series_controls(qp, (bracket_shift + w * start).real, w.real, power.real) for w in ws
    ]
    caps = [burn + 48 for _, burn in controls]
    f = chi.modulus if chi is not None else 1

    for _ in range(60):
        axes = [np.arange(start, cap + 1) for cap in caps]
        if chi is not None:
            chi_axes = [np.array([chi(int(m)) for m in ax]) for ax in axes]
        else:
            chi_axes = [np.ones(len(ax)) for ax in axes]
        # broadcast sum w_j n_j over the lattice block
        lat = 0j
        weight_prod = 1
        for j, (ax, cax) in enumerate(zip(axes, chi_axes)):
            shape = [1] * r
            shape[j] = len(ax)
            lat = lat + (ws[j] * ax.astype(complex)).reshape(shape)
            weight_prod = weight_prod * cax.reshape(shape)
        y = bracket_shift + lat
        bracket = (1 - np.exp(y * qp.log_q)) / (1 - qp.q)
        bmin = float(np.min(np.abs(bracket)))
        if bmin == 0:
            raise DomainError("q-bracket of a summand vanishes; point is singular")
        if bmin < _BRACKET_WARN:
            warnings.warn(
                f"q-bracket magnitude {bmin:.2e} is nearly singular; result is ill-conditioned",
                RuntimeWarning,
                stacklevel=3,
            )
        base = np.exp((exponent_shift + lat) * qp.log_q) * bracket**power
        terms = weight_prod * base
        # the tail majorant ignores the character weights (|chi| <= 1):
        # a boundary slice on a chi-zero column must not certify a zero tail
        abs_terms = np.abs(base)
        total = complex(terms.sum())
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(total))
        tails = []
        need_grow = False
        for j, (rho, _) in enumerate(controls):
            slice_major = float(abs_terms.take(-1, axis=j).sum())
            tail_j = cfg.tail_factor * rho / (1 - rho) * slice_major
            tails.append(tail_j)
            if tail_j > tol / r:
                need_grow = True
        if not need_grow:
            if stats is not None:
                stats.add(int(abs_terms.size), float(sum(tails)), _EPS * float(abs_terms.sum()) * 6)
            return total
        caps = [
            cap if tails[j] <= tol / r else int(cap * 1.5) + 4 for j, cap in enumerate(caps)
        ]
        if max(caps) * f > cfg.max_terms:
            raise TruncationError(
                "nested q-series failed to converge within the term budget",
                tail_bound=float(sum(tails)),
                terms_used=int(abs_terms.size),
            )
    raise TruncationError("nested q-series failed to stabilise", tail_bound=math.inf, terms_used=0)


def multiple_changhee_beta(
    n: int,
    x: complex,
    qp: QParams,
    weights,
    chi: DirichletCharacter | None = None,
    conv: ExponentConvention | str = ExponentConvention.HOMOGENEOUS,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    stats: SumStats | None = None,
) -> complex:
    """Barnes-type multiple Changhee q-Bernoulli polynomial of rank r = len(weights).

        (-1)^r (prod w_j) n!/(n-r)! sum_{n_1..n_r} prod_k chi(n_k) q^E [x + sum w_m n_m]^{n-r},

    lattice indices from 0 (no character) or 1 (with character); E follows
    the convention.  Orders n < r are identically zero: the generating
    function carries a (-t)^r prefactor.
    """
    if n < 0:
        raise DomainError("index must be non-negative")
    wv = _as_weights(weights)
    r = wv.r
    if n < r:
        if stats is not None:
            stats.note = "order below rank: coefficient is identically zero"
        return 0j
    conv = _resolve_convention(conv)
    start = 1 if chi is not None else 0
    exponent_shift = x if conv is ExponentConvention.HOMOGENEOUS else 0.0
    total = _nested_q_sum(
        qp, wv, x, exponent_shift, n - r, cfg, chi=chi, start=start, stats=stats
    )
    prod_w = 1 + 0j
    for w in wv.weights:
        prod_w *= w
    return (-1) ** r * prod_w * (math.factorial(n) / math.factorial(n - r)) * total


# ---------------------------------------------------------------------------
# q-zeta functions

def zeta_q_correction(s: complex, qp: QParams) -> complex:
    """Pole-carrying correction -(1-q)^s / ((s-1) log q) of the one-parameter q-zeta."""
    s = complex(s)
    if s == 1:
        raise PoleError("the q-zeta correction term has its simple pole at s = 1")
    return -((1 - qp.q) ** s) / ((s - 1) * qp.log_q)


def zeta_q(
    s: complex,
    w: complex,
    qp: QParams,
    w1: complex,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    stats: SumStats | None = None,
) -> complex:
    """One-parameter Changhee q-zeta function

        -(1-q)^s/((s-1) log q) + w1 sum_{k>=0} q^{w1 k + w} / [w1 k + w]^s,

    convergent for every complex s != 1 when |q| < 1 (the bracket stays
    bounded, the q-power decays geometrically).  Interpolates the
    one-parameter q-Bernoulli polynomials at s = 1 - n.
    """
    s = complex(s)
    qp.require_series_domain()
    if s == 1:
        raise PoleError("zeta_q has its simple pole at s = 1")
    w1 = complex(w1)
    if w1.real <= 0:
        raise DomainError("parameter w1 needs a positive real part")
    rho, burn = _series_controls(qp, complex(w).real, w1.real, (-s).real)

    def g(k: int) -> complex:
        y = w1 * k + w
        return qpow(y, qp) * _guard_bracket(qbracket(y, qp)) ** (-s)

    total, terms, tail, noise = _block_series(g, lambda m: 1.0, 1, 0, rho, burn, cfg)
    corr = zeta_q_correction(s, qp)
    value = corr + w1 * total
    budget = abs(w1) * noise + 4 * _EPS * abs(corr)
    if _needs_escalation(budget, value, cfg):
        value = _zeta_q_mp(s, w, qp, w1, _escalation_dps(budget / _EPS, 1 + abs(value)))
        budget = _ESCALATION_TARGET * (1 + abs(value))
    if stats is not None:
        stats.add(terms, abs(w1) * tail, budget)
    return value


def _zeta_q_mp(s: complex, w: complex, qp: QParams, w1: complex, dps: int) -> complex:
    """Extended-precision q-zeta: correction and series combined before rounding."""
    with mp.workdps(dps):
        q = mp.mpc(qp.q)
        lq = mp.log(q)
        s_mp = mp.mpc(s)
        corr = -((1 - q) ** s_mp) / ((s_mp - 1) * lq)
        total = mp.mpc(0)
        cutoff = mp.mpf(10) ** (-dps + 4)
        quiet = 0
        m = 0
        while quiet < 4 and m < 500_000:
            y = mp.mpc(w) + mp.mpc(w1) * m
            br = (1 - mp.exp(y * lq)) / (1 - q)
            t = mp.exp(y * lq) * br ** (-s_mp)
            total += t
            if abs(t) <= cutoff * (1 + abs(total)):
                quiet += 1
            else:
                quiet = 0
            m += 1
        return complex(corr + mp.mpc(w1) * total)


def zeta_q_multiple(
    s: complex,
    w: complex,
    qp: QParams,
    weights,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    stats: SumStats | None = None,
) -> complex:
    """Barnes-type multiple Changhee q-zeta function

        sum_{n_1..n_r >= 0} q^{w + sum n_j w_j} / [w + sum n_j w_j]^s,

    for Re(w) > 0 and |q| < 1; entire in s on the q-side.
    """
    s = complex(s)
    w = complex(w)
    if w.real <= 0:
        raise DomainError("Re(w) must be positive")
    wv = _as_weights(weights)
    return _nested_q_sum(qp, wv, w, w, -s, cfg, chi=None, start=0, stats=stats)


# ---------------------------------------------------------------------------
# two-variable Dirichlet q-L-functions

def L_q(
    s: complex,
    x: complex,
    chi: DirichletCharacter,
    qp: QParams,
    w1: complex,
    conv: ExponentConvention | str = ExponentConvention.HOMOGENEOUS,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    stats: SumStats | None = None,
) -> complex:
    """Two-variable Dirichlet q-L-function

        w1 sum_{m>=0} chi(m) q^E / [x + w1 m]^s,

    E per convention.  The m = 0 term only contributes for modulus 1,
    where chi(0) = 1.  Entire in s for |q| < 1.
    """
    s = complex(s)
    qp.require_series_domain()
    conv = _resolve_convention(conv)
    w1 = complex(w1)
    if w1.real <= 0:
        raise DomainError("parameter w1 needs a positive real part")
    f = chi.modulus
    rho, burn = _series_controls(qp, (x + w1).real, w1.real * f, (-s).real)

    def g(m: int) -> complex:
        y = x + w1 * m
        e = y if conv is ExponentConvention.HOMOGENEOUS else w1 * m
        return qpow(e, qp) * _guard_bracket(qbracket(y, qp)) ** (-s)

    total, terms, tail, noise = _block_series(g, chi, f, 1, rho, burn, cfg)
    value = w1 * total
    budget = abs(w1) * noise
    if _needs_escalation(budget, value, cfg):
        e_shift = x if conv is ExponentConvention.HOMOGENEOUS else 0.0
        total = _mp_char_series(
            _escalation_dps(budget / _EPS, 1 + abs(value)), qp, chi, 1, x, w1, e_shift, -s
        )
        value = w1 * total
        budget = _ESCALATION_TARGET * (1 + abs(value))
    head = 0j
    if chi(0) != 0:  # modulus 1
        head = w1 * chi(0) * g(0)
    if stats is not None:
        stats.add(terms, abs(w1) * tail, budget)
    return value + head


def L_q_multiple(
    s: complex,
    x: complex,
    chi: DirichletCharacter,
    qp: QParams,
    weights,
    conv: ExponentConvention | str = ExponentConvention.HOMOGENEOUS,
    cfg: SumConfig = DEFAULT_SUM_CONFIG,
    stats: SumStats | None = None,
) -> complex:
    """Two-variable multiple Dirichlet q-L-function of rank r = len(weights):

        (prod w_j) sum_{n_1..n_r >= 1} prod_k chi(n_k) q^E / [x + sum w_m n_m]^s.
    """
    s = complex(s)
    conv = _resolve_convention(conv)
    wv = _as_weights(weights)
    exponent_shift = x if conv is ExponentConvention.HOMOGENEOUS else 0.0
    total = _nested_q_sum(qp, wv, x, exponent_shift, -s, cfg, chi=chi, start=1, stats=stats)
    prod_w = 1 + 0j
    for w in wv.weights:
        prod_w *= w
    return prod_w * total


# ---------------------------------------------------------------------------
# explicit binomial formula for the multiple numbers (diagnostic only: it
# does not match the series-based family at r = 1; the verification report
# records the comparison, and no evaluator above ever uses it)

def _binomial_form_float(n, w, qp, a_vec):
    q = qp.q
    acc = 0j
    abs_acc = 0.0
    for l in range(n + 1):
        prod = 1 + 0j
        for a in a_vec:
            prod *= (l + 1 / a) / _guard_bracket(qbracket(l * a + 1, qp))
        t = math.comb(n, l) * (-1) ** l * qpow(l * w, qp) * prod
        acc += t
        abs_acc += abs(t)
    scale = (1 - q) ** (-n)
    return acc * scale, abs_acc * abs(scale)


def _binomial_form_mp(n, w, qp, a_vec, dps):
    with mp.workdps(dps):
        q = mp.mpc(qp.q)
        lq = mp.log(q)
        acc = mp.mpc(0)
        for l in range(n + 1):
            prod = mp.mpc(1)
            for a in a_vec:
                br = (1 - mp.exp((l * mp.mpf(a) + 1) * lq)) / (1 - q)
                prod *= (l + 1 / mp.mpf(a)) / br
            acc += math.comb(n, l) * (-1) ** l * mp.exp(l * mp.mpc(w) * lq) * prod
        return complex(acc / (1 - q) ** n)


def multiple_beta_binomial_form(n: int, w: complex, qp: QParams, a_vec: Sequence[float]) -> complex:
    """Explicit binomial-sum formula for multiple q-Bernoulli polynomials,

        (1-q)^{-n} sum_l C(n,l) (-1)^l q^{wl} prod_j (l + 1/a_j) / [l a_j + 1].

    Diagnostic only: its per-factor weights carry a 1/prod(a_j)-style
    normalisation that does not reduce to the one-parameter explicit
    formula at r = 1, so it is evaluated verbatim and compared, never
    substituted.  Ill-conditioned points re-run in extended precision.
    """
    if n < 0:
        raise DomainError("index must be non-negative")
    qp.require_series_domain()
    value, abs_sum = _binomial_form_float(n, w, qp, list(a_vec))
    if _EPS * abs_sum * (n + 4) > _ESCALATION_TARGET * (1 + abs(value)):
        value = _binomial_form_mp(n, w, qp, list(a_vec), _escalation_dps(abs_sum, 1 + abs(value)))
    return value


def multiple_beta_binomial_from_numbers(
    n: int, w: complex, qp: QParams, a_vec: Sequence[float]
) -> complex:
    """Second form of the same quantity, through the w = 0 numbers:

        sum_l C(n,l) [w]^{n-l} q^{wl} * (value at w = 0, order l).

    Algebraically identical to :func:`multiple_beta_binomial_form`; the
    pair is compared to machine accuracy by the binomial diagnostic suite.
    """
    if n < 0:
        raise DomainError("index must be non-negative")
    qp.require_series_domain()
    a_vec = list(a_vec)
    bw = qbracket(w, qp)
    acc = 0j
    abs_acc = 0.0
    numbers = [multiple_beta_binomial_form(l, 0.0, qp, a_vec) for l in range(n + 1)]
    for l in range(n + 1):
        t = math.comb(n, l) * bw ** (n - l) * qpow(l * w, qp) * numbers[l]
        acc += t
        abs_acc += abs(t)
    if _EPS * abs_acc * (n + 4) > _ESCALATION_TARGET * (1 + abs(acc)):
        with mp.workdps(_escalation_dps(abs_acc, 1 + abs(acc))):
            q = mp.mpc(qp.q)
            lq = mp.log(q)
            bww = (1 - mp.exp(mp.mpc(w) * lq)) / (1 - q)
            tot = mp.mpc(0)
            for l in range(n + 1):
                inner = mp.mpc(0)
                for j in range(l + 1):
                    prod = mp.mpc(1)
                    for a in a_vec:
                        br = (1 - mp.exp((j * mp.mpf(a) + 1) * lq)) / (1 - q)
                        prod *= (j + 1 / mp.mpf(a)) / br
                    inner += math.comb(l, j) * (-1) ** j * prod
                inner = inner / (1 - q) ** l
                tot += math.comb(n, l) * bww ** (n - l) * mp.exp(l * mp.mpc(w) * lq) * inner
            acc = complex(tot)
    return acc
