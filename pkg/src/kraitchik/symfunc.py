"""Symmetric-function machinery: the Girard-Newton recursion, partition
weights, and the binomial collapse polynomial.

``newton_elementary`` is generic over any exact scalar with +, -, * and
division by a positive integer (Fraction and QuadElem in practice).  The
partition weights w are the positive rationals expanding the m-th elementary
symmetric polynomial in power sums,

    S^(m) = sum over partitions e of m of (-1)^(m-k) * w_e * prod S_{e_i},

and v_{m,k} sums the weights of the k-part partitions.  Collapsing every
power sum to the same variable X turns the expansion into the polynomial
binom(X, m); that identity is what the bounds pipeline relies on and is
verified coefficient-for-coefficient in the test suite.

The weight recursion distributes m*w_e over the distinct part values of e
(removing one copy of each); summing over all positions instead would count
repeated parts with multiplicity and already fails at m = 2, where
S^(2) = (S_1^2 - S_2)/2 forces w_(1,1) = 1/2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .poly import DensePoly
from .qfield import QuadElem

Partition = tuple[int, ...]


def partitions(m: int, _min: int = 1) -> Iterator[Partition]:
    """All partitions of m as nondecreasing tuples; ``partitions(0)`` yields ()."""
    if m == 0:
        yield ()
        return
    for first in range(_min, m + 1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _weight(parts: Partition) -> Fraction:
    if not parts:
        return Fraction(1)
    m = sum(parts)
    acc = Fraction(0)
    for j in sorted(set(parts)):
        shorter = list(parts)
        shorter.remove(j)
        acc += _weight(tuple(shorter))
    return acc / m


@dataclass(frozen=True)
class WeightTable:
    m: int
    weights: Mapping[Partition, Fraction]

    def v(self, k: int) -> Fraction:
        """v_{m,k}: total weight of the partitions with exactly k parts."""
        return sum(
            (w for e, w in self.weights.items() if len(e) == k), Fraction(0)
        )


def partition_weights(m: int) -> WeightTable:
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return WeightTable(m, {e: _weight(e) for e in partitions(m)})


def pm_polynomial(m: int) -> DensePoly:
    """The collapse polynomial sum_k (-1)^(m-k) v_{m,k} X^k (equal to binom(X, m))."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if m == 0:
        return DensePoly([Fraction(1)])
    table = partition_weights(m)
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(1, m + 1):
        coeffs[k] = (-1) ** (m - k) * table.v(k)
    return DensePoly(coeffs)


def _ring_one(x):
    if isinstance(x, QuadElem):
        return QuadElem.rational(1, x.r)
    return Fraction(1)


def newton_elementary(power_sums: Sequence) -> list:
    """Elementary symmetric values e_0..e_N from power sums S_1..S_N.

    Uses m*e_m = sum_{j=1..m} (-1)^(j-1) e_{m-j} S_j.  Scalars need exact
    ring arithmetic plus division by a positive integer; plain ints are
    promoted to Fraction.
    """
    sums = [Fraction(s) if isinstance(s, int) else s for s in power_sums]
    if not sums:
        return [Fraction(1)]
    one = _ring_one(sums[0])
    es: list = [one]
    for m in range(1, len(sums) + 1):
        acc = None
        for j in range(1, m + 1):
            term = es[m - j] * sums[j - 1]
            if j % 2 == 0:
                term = -term
            acc = term if acc is None else acc + term
        es.append(acc / m)
    return es


def elementary_brute(values: Sequence, m: int) -> object:
    """Direct sum over all m-subsets; the independent oracle for the recursion."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if m == 0:
        return Fraction(1)
    if m > len(values):
        return Fraction(0)
    acc = None
    for combo in itertools.combinations(values, m):
        prod = combo[0]
        for v in combo[1:]:
            prod = prod * v
        acc = prod if acc is None else acc + prod
    return acc


def power_sums_of(values: Sequence, upto: int) -> list:
    """S_1..S_upto of a finite multiset, for feeding the recursion in tests."""
    out = []
    for k in range(1, upto + 1):
        acc = None
        for v in values:
            t = v**k
            acc = t if acc is None else acc + t
        out.append(acc if acc is not None else Fraction(0))
    return out
