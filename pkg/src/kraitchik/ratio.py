"""The rational-point approximation Xi_d(x)/Psi_d(x) ~ 1/(2x - mu(d)).

The left side of the error bound is pure rational arithmetic: polynomial
evaluation at rational x, exact subtraction, absolute value.  Only the right
side touches irrationals (sqrt(d) and the gate value G_d as an exponent), so
it is enclosed with validated intervals; a ``verified`` verdict is therefore
a machine-checked strict inequality.

The gate x > 2*G_d is decided exactly before anything else; points failing
it are typed rejections (``GateError``), not verdicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import FALSIFIED, UNRESOLVED, VERIFIED, BoundValue, l1_bound_base
from .construct import KraitchikPair
from .interval import (
    DyadicInterval,
    Refinable,
    iv_div,
    iv_from_rat,
    iv_mul,
    iv_neg,
    iv_pow,
    iv_sqrt,
    iv_sub,
    precision_ladder,
)
from .numtheory import mobius
from .qfield import QuadElem, cmp_surd

REJECTED = "rejected"


class GateError(ValueError):
    """x does not exceed twice the gate value, so the bound does not apply."""


@dataclass(frozen=True)
class RatioReport:
    d: int
    x: Fraction
    lhs_exact: Optional[Fraction]
    rhs_enclosure: Optional[DyadicInterval]
    verdict: str


def gate_value(pair: KraitchikPair) -> BoundValue:
    """G_d: the L1 growth base at n = floor(phi(d)/4)."""
    ctx = pair.ctx
    return l1_bound_base(ctx, (2 * ctx.dprime) // 4)


def _passes_gate(g: BoundValue, x: Fraction) -> bool:
    # x > 2*G exactly
    if isinstance(g.value, Fraction):
        return x > 2 * g.value
    doubled = g.value * 2
    return BoundValue(doubled).cmp_rational(x) < 0


def _ceil_exact(v: Fraction | QuadElem) -> int:
    """Smallest integer >= v for a rational or positive-surd-part value."""
    if isinstance(v, Fraction):
        return -((-v.numerator) // v.denominator)
    a, b, r = v.a, v.b, v.r
    assert b > 0
    c = math.floor(a + b * math.isqrt(r))  # at most b below the true value
    while cmp_surd(a, b, r, c) > 0:  # value > c: c too small
        c += 1
    while cmp_surd(a, b, r, c - 1) <= 0:  # value fits under c-1 as well
        c -= 1
    return c


def ceil_twice_gate(pair: KraitchikPair) -> int:
    """Smallest integer >= 2*G_d, decided exactly."""
    g = gate_value(pair)
    return _ceil_exact(g.value * 2)


def ceil_gate(pair: KraitchikPair) -> int:
    """Smallest integer >= G_d."""
    return _ceil_exact(gate_value(pair).value)


def default_sample_points(pair: KraitchikPair) -> list[Fraction]:
    """The standard grid: {ceil(2G)+1, 2*ceil(G)+5, 100}."""
    return [
        Fraction(ceil_twice_gate(pair) + 1),
        Fraction(2 * ceil_gate(pair) + 5),
        Fraction(100),
    ]


def check_ratio_approx(
    pair: KraitchikPair, x: Fraction | int, max_precision=None
) -> RatioReport:
    """Verify |Xi(x)/Psi(x) - 1/(2x - mu(d))| < the closed-form envelope."""
    ctx = pair.ctx
    if ctx.d < 5:
        raise ValueError(f"ratio check needs d >= 5, got {ctx.d}")
    x = Fraction(x)
    g = gate_value(pair)
    if not _passes_gate(g, x):
        raise GateError(f"x = {x} does not exceed twice the gate value for d = {ctx.d}")

    mu = mobius(ctx.d)
    psi_x = pair.psi.evaluate(x)
    xi_x = pair.xi.evaluate(x)
    assert psi_x > 0, "positivity of Psi at admissible x is part of the contract"
    lhs = abs(Fraction(xi_x) / psi_x - Fraction(1, 2 * x - mu))

    def rhs_fn(prec: int) -> DyadicInterval:
        sqrt_d = iv_sqrt(iv_from_rat(ctx.d, prec), prec)
        pref = iv_div(
            iv_from_rat(x, prec),
            iv_mul(iv_from_rat(2 * x - mu, prec), sqrt_d, prec),
            prec,
        )
        g_iv = g.interval(prec)
        base = iv_from_rat(1 - 1 / x, prec)
        if isinstance(g.value, Fraction):
            # half-integer exponent: exact squaring plus one interval sqrt
            pow_term = iv_pow(base, -g.value, prec)
        else:
            pow_term = iv_pow(base, iv_neg(g_iv, prec), prec)
        inner = iv_sub(
            iv_sub(pow_term, 1, prec), iv_div(g_iv, iv_from_rat(x, prec), prec), prec
        )
        return iv_mul(pref, inner, prec)

    rhs = Refinable(rhs_fn)
    enclosure = None
    for prec in precision_ladder(max_precision):
        enclosure = rhs.enclose(prec)
        if lhs < enclosure.lo:
            return RatioReport(ctx.d, x, lhs, enclosure, VERIFIED)
        if lhs >= enclosure.hi:
            return RatioReport(ctx.d, x, lhs, enclosure, FALSIFIED)
    return RatioReport(ctx.d, x, lhs, enclosure, UNRESOLVED)


def ratio_table(
    pair: KraitchikPair, xs: Sequence[Fraction | int], max_precision=None
) -> list[RatioReport]:
    """One report per sample point; gate failures become 'rejected' rows."""
    out = []
    for x in xs:
        try:
            out.append(check_ratio_approx(pair, x, max_precision))
        except GateError:
            out.append(RatioReport(pair.ctx.d, Fraction(x), None, None, REJECTED))
    return out
