"""Coefficient growth bounds for the decomposition pair.

For a modulus d and coefficient index n, the growth base is the maximum of
phi(f)/2 over the divisors 1 < f <= n of d together with a surd floor:
|1 + sqrt(D)|/2 for the absolute-value bound and (1 + sqrt(d))/2 for the
L1 bound.  The rising-factorial expression 2*B(B+1)...(B+n-1)/n! built on
that base dominates the coefficients.

``check_coefficient_bounds`` verifies both inequalities entirely by exact
field arithmetic (no intervals), which is what lets the tight n = 0 equality
pass without an equality-resolution dance.  ``check_explicit_bound`` checks
the strict three-way closed-form bound; its right side mixes e, pi and
irrational exponents, so it runs on validated intervals with a doubling
precision ladder and reports ``unresolved`` if the ceiling is hit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .construct import KraitchikPair
from .interval import (
    DyadicInterval,
    IntervalDomainError,
    Refinable,
    iv_add,
    iv_const_e,
    iv_const_pi,
    iv_div,
    iv_exp,
    iv_from_rat,
    iv_from_surd,
    iv_mul,
    iv_pow,
    iv_sqrt,
    iv_sub,
    precision_ladder,
)
from .numtheory import divisors, euler_phi, squarefree_decompose
from .powersums import DiscriminantContext
from .qfield import QuadElem, abs_real, cmp_real, cmp_surd

VERIFIED = "verified"
FALSIFIED = "falsified"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class BoundValue:
    """Exact growth base: either a half-integer or a positive real surd."""

    value: Fraction | QuadElem

    @property
    def kind(self) -> str:
        return "half-integer" if isinstance(self.value, Fraction) else "surd"

    def cmp_rational(self, q: Fraction | int) -> int:
        if isinstance(self.value, Fraction):
            v = self.value
            return 0 if v == q else (1 if v > q else -1)
        return cmp_surd(self.value.a, self.value.b, self.value.r, q)

    def interval(self, prec: int) -> DyadicInterval:
        if isinstance(self.value, Fraction):
            return iv_from_rat(self.value, prec)
        return iv_from_surd(self.value.a, self.value.b, self.value.r, prec)


def _surd_value(x: Fraction, y: Fraction, radicand: int) -> Fraction | QuadElem:
    """x + y*sqrt(radicand) with the square part of the radicand pulled out."""
    s, r = squarefree_decompose(radicand)
    if r == 1:
        return x + y * s
    return QuadElem(x, y * s, r)


def _growth_base(ctx: DiscriminantContext, n: int, floor_value: Fraction | QuadElem) -> BoundValue:
    best = BoundValue(floor_value)
    for f in divisors(ctx.d):
        if 1 < f <= n:
            cand = Fraction(euler_phi(f), 2)
            if best.cmp_rational(cand) < 0:
                best = BoundValue(cand)
    return best


def abs_bound_base(ctx: DiscriminantContext, n: int) -> BoundValue:
    """Base for the |a + b*sqrt(D)| bound; the surd floor is |1 + sqrt(D)|/2.

    The divisor candidates are those 1 < f <= n, so the base is defined for
    any n >= 0 even though the inequality checks only use n <= d'.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if ctx.D > 0:
        floor_value = _surd_value(Fraction(1, 2), Fraction(1, 2), ctx.d)
    else:
        # |1 + i*sqrt(d)|/2 = sqrt(1 + d)/2
        floor_value = _surd_value(Fraction(0), Fraction(1, 2), 1 + ctx.d)
    return _growth_base(ctx, n, floor_value)


def l1_bound_base(ctx: DiscriminantContext, n: int) -> BoundValue:
    """Base for the L1-norm bound; the surd floor is (1 + sqrt(d))/2."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _growth_base(ctx, n, _surd_value(Fraction(1, 2), Fraction(1, 2), ctx.d))


def rising_factorial_bound(base: BoundValue, n: int) -> Fraction | QuadElem:
    """2 * B(B+1)...(B+n-1) / n!, exact in B's field; n = 0 gives 2."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    prod: Fraction | QuadElem = Fraction(2)
    for i in range(n):
        prod = prod * (base.value + i)
    return prod / math.factorial(n)


@dataclass(frozen=True)
class CoefficientBoundsReport:
    d: int
    n: int
    abs_ok: bool
    l1_ok: bool

    @property
    def verdict(self) -> str:
        return VERIFIED if (self.abs_ok and self.l1_ok) else FALSIFIED


def _require_minimum_modulus(d: int) -> None:
    if d < 5:
        raise ValueError(f"bound checks need d >= 5, got {d}")


def check_coefficient_bounds(pair: KraitchikPair, n: int) -> CoefficientBoundsReport:
    """Both coefficient inequalities for one (d, n), decided exactly."""
    ctx = pair.ctx
    _require_minimum_modulus(ctx.d)
    if not 0 <= n <= ctx.dprime:
        raise ValueError(f"n out of range: {n}")
    a_n, b_n = pair.a[n], pair.b_coeff(n)
    d = ctx.d

    bound_abs = rising_factorial_bound(abs_bound_base(ctx, n), n)
    bound_l1 = rising_factorial_bound(l1_bound_base(ctx, n), n)

    if ctx.D > 0:
        lhs = abs_real(QuadElem(Fraction(a_n), Fraction(b_n), d))
        abs_ok = cmp_real(lhs, bound_abs) <= 0
    else:
        lhs_sq = Fraction(a_n * a_n + d * b_n * b_n)
        bsq = bound_abs * bound_abs
        if isinstance(bsq, Fraction):
            abs_ok = lhs_sq <= bsq
        else:
            abs_ok = cmp_real(bsq, lhs_sq) >= 0

    lhs_l1 = QuadElem(Fraction(abs(a_n)), Fraction(abs(b_n)), d)
    l1_ok = cmp_real(lhs_l1, bound_l1) <= 0
    return CoefficientBoundsReport(ctx.d, n, abs_ok, l1_ok)


@dataclass(frozen=True)
class ExplicitBoundReport:
    d: int
    n: int
    verdict: str
    # Same strict bound with the left side measured against sqrt(D) instead of
    # sqrt(d); identical when D > 0, reported for the record when D < 0.
    verdict_disc_radicand: str


def _three_bounds(base: BoundValue, n: int, prec: int) -> tuple[DyadicInterval, ...]:
    F = base.interval(prec)
    Fm1 = iv_sub(F, 1, prec)
    if not Fm1.is_positive():
        raise IntervalDomainError("F - 1 enclosure not yet positive")
    e_ = iv_const_e(prec)
    pi_ = iv_const_pi(prec)
    Fn = iv_add(F, n, prec)
    Fnm1 = iv_sub(Fn, 1, prec)
    stir2 = iv_mul(2, iv_exp(iv_div(iv_from_rat(1, prec), iv_mul(6, Fn, prec), prec), prec), prec)
    epi = iv_mul(e_, pi_, prec)
    t1 = iv_mul(
        iv_sqrt(iv_div(stir2, iv_mul(epi, n, prec), prec), prec),
        iv_pow(iv_div(iv_mul(e_, Fnm1, prec), Fm1, prec), iv_sub(F, Fraction(1, 2), prec), prec),
        prec,
    )
    t2 = iv_mul(
        iv_sqrt(iv_div(stir2, iv_mul(epi, Fm1, prec), prec), prec),
        iv_pow(iv_div(iv_mul(e_, Fnm1, prec), iv_from_rat(n, prec), prec), Fraction(2 * n + 1, 2), prec),
        prec,
    )
    t3 = iv_pow(iv_from_rat(2, prec), Fn, prec)
    return t1, t2, t3


def _strict_min_compare(lhs: Refinable, base: BoundValue, n: int, max_precision) -> str:
    """verified iff lhs < min of the three closed-form bounds, by intervals."""
    for prec in precision_ladder(max_precision):
        li = lhs.enclose(prec)
        try:
            ts = _three_bounds(base, n, prec)
        except IntervalDomainError:
            continue
        if all(li.hi < t.lo for t in ts):
            return VERIFIED
        if any(li.lo > t.hi for t in ts):
            return FALSIFIED
    return UNRESOLVED


def check_explicit_bound(pair: KraitchikPair, n: int, max_precision=None) -> ExplicitBoundReport:
    """Strict three-way bound on |a_{d,n} + b_{d,n} sqrt(d)| for 1 <= n <= d'."""
    ctx = pair.ctx
    _require_minimum_modulus(ctx.d)
    if not 1 <= n <= ctx.dprime:
        raise ValueError(f"n out of range for the strict bound: {n}")
    base = abs_bound_base(ctx, n)
    assert base.cmp_rational(1) > 0, "growth base must exceed 1"
    a_n, b_n = pair.a[n], pair.b_coeff(n)
    d = ctx.d

    sign = cmp_surd(a_n, b_n, d, 0)
    aa, bb = (a_n, b_n) if sign >= 0 else (-a_n, -b_n)
    lhs = Refinable(lambda p: iv_from_surd(aa, bb, d, p))
    verdict = _strict_min_compare(lhs, base, n, max_precision)

    if ctx.D > 0:
        verdict_disc = verdict
    else:
        mod_sq = Fraction(a_n * a_n + d * b_n * b_n)
        lhs_disc = Refinable(lambda p: iv_sqrt(iv_from_rat(mod_sq, p), p))
        verdict_disc = _strict_min_compare(lhs_disc, base, n, max_precision)
    return ExplicitBoundReport(ctx.d, n, verdict, verdict_disc)
