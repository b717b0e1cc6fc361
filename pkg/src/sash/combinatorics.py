"""Exact counting for community codes.

The community code C_{n,m} consists of all graphs on n vertices that are
disjoint unions of cliques, each clique of size at least m, read as binary
words over the C(n,2) vertex pairs. Codewords correspond one-to-one with
set partitions of [n] into blocks of size >= m, so everything countable
about the code reduces to partition combinatorics. All counts here are
exact (Python integers, Fractions for the alternating-sum cross-check).
"""

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class SingleCodewordError(ValueError):
    """The code has at most one codeword, so pairwise quantities are undefined."""


def _check_nm(n, m):
    if not (isinstance(n, int) and isinstance(m, int)):
        raise ValueError(f"n and m must be integers, got n={n!r}, m={m!r}")
    if not (1 <= m <= n):
        raise ValueError(f"need 1 <= m <= n, got n={n}, m={m}")


@lru_cache(maxsize=None)
def bell(n):
    """Number of set partitions of an n-set, via the binomial recursion."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1
    return sum(math.comb(n - 1, k) * bell(k) for k in range(n))


def bell_alternating_sum(n):
    """Bell number by the explicit double sum over Stirling numbers.

    Evaluates sum_k sum_i (-1)^(k-i) i^n / ((k-i)! i!) in exact rational
    arithmetic. Much slower than bell(); kept as an independent cross-check
    of the recursion (the two must agree exactly).
    """
    if n == 0:
        return 1
    total = Fraction(0)
    for k in range(1, n + 1):
        for i in range(k + 1):
            total += Fraction((-1) ** (k - i) * i ** n,
                              math.factorial(k - i) * math.factorial(i))
    if total.denominator != 1:
        raise ArithmeticError(f"alternating sum for n={n} is not an integer: {total}")
    return total.numerator


@lru_cache(maxsize=None)
def assoc_stirling(m, n, k):
    """S_m(n,k): partitions of an n-set into exactly k blocks, each of size >= m.

    Recurrence: the block containing element n either has size exactly m
    (choose its m-1 partners, partition the rest into k-1 blocks) or size
    greater than m (element n joined one of the k blocks of a partition
    of [n-1] that already satisfied the size floor).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or n < k * m:
        return 0
    return (k * assoc_stirling(m, n - 1, k)
            + math.comb(n - 1, m - 1) * assoc_stirling(m, n - m, k - 1))


@lru_cache(maxsize=None)
def _min_block_bell(m, n):
    # Aggregate recursion over the size of the block containing element n:
    # B_m(n) = sum_{k=0}^{n-m} C(n-1,k) B_m(k), with B_m(0) = 1 and
    # B_m(1..m-1) = 0. The natural empty-partition base B_m(0) = 1 is what
    # makes the recursion reproduce brute-force enumeration.
    if n == 0:
        return 1
    if n < m:
        return 0
    return sum(math.comb(n - 1, k) * _min_block_bell(m, k) for k in range(n - m + 1))


def code_size(n, m):
    """|C_{n,m}|: number of set partitions of [n] into blocks of size >= m."""
    _check_nm(n, m)
    return _min_block_bell(m, n)


@lru_cache(maxsize=None)
def enumerate_types(n, m):
    """All partition types of C_{n,m}: integer partitions of n with parts >= m.

    Returned as tuples of non-increasing parts, in reverse-lexicographic
    order, e.g. enumerate_types(4,1) = ((4,),(3,1),(2,2),(2,1,1),(1,1,1,1)).
    The order is the canonical iteration order everywhere in the package.
    """
    _check_nm(n, m)

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), m - 1, -1):
            rest = remaining - first
            if rest == 0 or rest >= m:
                for tail in gen(rest, first):
                    yield (first,) + tail

    return tuple(gen(n, n))


def weight_of_type(t):
    """Hamming weight of any codeword with clique sizes t: sum of C(part,2)."""
    return sum(math.comb(part, 2) for part in t)


def count_of_type(t):
    """Number of set partitions of [n] with exactly the clique sizes t.

    Multinomial over the parts, divided by the permutations of equal-size
    parts: n! / (prod part_i! * prod mult_j!).
    """
    n = sum(t)
    denom = 1
    for part in t:
        if part < 1:
            raise ValueError(f"parts must be positive, got {t}")
        denom *= math.factorial(part)
    for mult in Counter(t).values():
        denom *= math.factorial(mult)
    return math.factorial(n) // denom


def weight_distribution(n, m):
    """counts[w] = number of codewords of C_{n,m} with Hamming weight w."""
    _check_nm(n, m)
    counts = [0] * (math.comb(n, 2) + 1)
    for t in enumerate_types(n, m):
        counts[weight_of_type(t)] += count_of_type(t)
    return tuple(counts)


def rate(n, m):
    """log2(|C_{n,m}|) / C(n,2), the information rate of the code."""
    _check_nm(n, m)
    if n < 2:
        raise ValueError(f"rate needs n >= 2, got n={n}")
    return math.log2(code_size(n, m)) / math.comb(n, 2)


@dataclass(frozen=True)
class MinDiscrepancyValue:
    value: float
    regime: str  # "n>=3m+1" | "2m<n<3m" | "n=2m" | "n=3m" | "single-codeword"


def min_discrepancy_closed_form(n, m, gamma):
    """Minimum discrepancy of C_{n,m} over ordered pairs of distinct codewords.

    Dispatches on the relation between n and m:
      n >= 3m+1:   min{ m^2, (1+gamma)m }
      2m < n < 3m: min{ (n-m-1) + gamma*m, m(n-m) }
      n = 2m:      min{ 2(m-1)(1+gamma), m^2 }
      n = 3m:      min{ 2(m-1)(1+gamma), m^2, 2m-1 + gamma*m }
    Raises SingleCodewordError when n < 2m (the code is a single clique).
    """
    _check_nm(n, m)
    if gamma < 1:
        raise ValueError(f"gamma must be >= 1, got {gamma}")
    if n < 2 * m:
        raise SingleCodewordError(
            f"C_{{{n},{m}}} has {code_size(n, m)} codeword(s); "
            "minimum discrepancy needs at least two")
    if n >= 3 * m + 1:
        return MinDiscrepancyValue(min(float(m * m), (1 + gamma) * m), "n>=3m+1")
    if n == 2 * m:
        terms = [float(m * m)]
        # The 2(m-1)(1+gamma) pair is two cliques of size m-1 swapping against
        # a merged block; at m=1 that construction collapses to equal words,
        # so the term is dropped there (the pairwise sweep oracle agrees).
        if m > 1:
            terms.append(2 * (m - 1) * (1 + gamma))
        return MinDiscrepancyValue(min(terms), "n=2m")
    if n == 3 * m:
        terms = [float(m * m), 2 * m - 1 + gamma * m]
        if m > 1:
            terms.append(2 * (m - 1) * (1 + gamma))
        return MinDiscrepancyValue(min(terms), "n=3m")
    return MinDiscrepancyValue(
        min((n - m - 1) + gamma * m, float(m * (n - m))), "2m<n<3m")
