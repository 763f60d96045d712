import math
import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kraitchik.poly import DensePoly
from kraitchik.symfunc import (
    WeightTable,
    elementary_brute,
    newton_elementary,
    partition_weights,
    partitions,
    pm_polynomial,
    power_sums_of,
)

F = Fraction


def falling_factorial_poly(m: int) -> DensePoly:
    """Independent oracle: the expansion of X(X-1)...(X-m+1)/m!."""
    p = DensePoly([F(1)])
    for i in range(m):
        p = p * DensePoly([F(-i), F(1)])
    return p * F(1, math.factorial(m))


def closed_form_weight(parts) -> Fraction:
    """Independent oracle: w = prod over part values j of 1/(mult_j! * j^mult_j)."""
    w = F(1)
    for j, mult in Counter(parts).items():
        w /= math.factorial(mult) * F(j) ** mult
    return w


def test_partitions_enumeration():
    assert list(partitions(0)) == [()]
    assert sorted(partitions(4)) == [(1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,)]
    assert len(list(partitions(10))) == 42  # p(10)


def test_weight_tables_small():
    assert partition_weights(1).weights == {(1,): F(1)}
    assert partition_weights(2).weights == {(1, 1): F(1, 2), (2,): F(1, 2)}
    assert partition_weights(3).weights == {
        (1, 1, 1): F(1, 6),
        (1, 2): F(1, 2),
        (3,): F(1, 3),
    }


def test_weights_match_closed_form():
    for m in range(1, 13):
        table = partition_weights(m)
        for e, w in table.weights.items():
            assert w == closed_form_weight(e), e


def test_weights_positive():
    for m in range(1, 13):
        assert all(w > 0 for w in partition_weights(m).weights.values())


def test_v_anchors():
    for m in range(1, 21):
        table = partition_weights(m)
        assert table.v(m) == F(1, math.factorial(m))
        assert table.v(1) == F(1, m)


def test_pm_polynomial_examples():
    assert pm_polynomial(0) == DensePoly([F(1)])
    assert pm_polynomial(2) == DensePoly([F(0), F(-1, 2), F(1, 2)])
    assert pm_polynomial(5) == falling_factorial_poly(5)


def test_pm_polynomial_is_binomial_through_20():
    for m in range(1, 21):
        assert pm_polynomial(m) == falling_factorial_poly(m), m


def test_newton_examples():
    # power sums of {1, 2, 3} -> coefficients of (X+1)(X+2)(X+3)
    assert newton_elementary([6, 14, 36]) == [F(1), F(6), F(11), F(6)]
    # a single value x: e_1 = x, higher ones vanish
    x = F(3, 2)
    es = newton_elementary([x**j for j in range(1, 6)])
    assert es[0] == 1 and es[1] == x and all(e == 0 for e in es[2:])
    # two symbolic-ish sums: e_2 = (s^2 - t)/2
    s, t = F(7, 3), F(-4, 5)
    assert newton_elementary([s, t])[2] == (s * s - t) / 2


def test_elementary_brute_examples():
    assert elementary_brute([1, 2, 3], 2) == 11
    assert elementary_brute([5, 7], 0) == 1
    assert elementary_brute([F(1, 2)], 2) == 0


@settings(max_examples=150)
@given(
    st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=6),
        min_size=0,
        max_size=6,
    )
)
def test_newton_matches_brute_force(values):
    es = newton_elementary(power_sums_of(values, len(values)))
    for m in range(len(values) + 1):
        assert es[m] == elementary_brute(values, m)


def test_weight_expansion_reconstructs_elementary():
    # sum over partitions of (-1)^(m-k) w_e prod S_{e_i} must equal e_m
    rng = random.Random(31)
    for m in range(1, 9):
        table = partition_weights(m)
        sums = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m)]
        total = F(0)
        for e, w in table.weights.items():
            prod = F(1)
            for part in e:
                prod *= sums[part - 1]
            total += (-1) ** (m - len(e)) * w * prod
        assert total == newton_elementary(sums)[m]


def test_weight_table_type():
    table = partition_weights(4)
    assert isinstance(table, WeightTable)
    assert table.m == 4
    assert sum(table.v(k) for k in range(1, 5)) == sum(table.weights.values())


def test_input_validation():
    with pytest.raises(ValueError):
        partition_weights(0)
    with pytest.raises(ValueError):
        pm_polynomial(-1)
    with pytest.raises(ValueError):
        elementary_brute([1], -2)
