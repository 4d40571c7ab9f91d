"""Lattice paths under y = a x + b, counted through their c-sequences.

A path from (0, 0) to (n, a n + b) staying weakly below the line is the
same thing as a sequence c_1..c_n of distances below the line with
0 <= c_1 <= b and 0 <= c_{i+1} <= c_i + a.  Its area is a n / 2 + sum c_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import LaurentPoly
from .series import MultiSeries, PochFraction, ratio_series


@dataclass(frozen=True)
class PathSpec:
    a: int
    b: int
    n: int

    def __post_init__(self):
        if min(self.a, self.b, self.n) < 0:
            raise ValueError("a, b and n must be nonnegative")


def iter_csequences(first_max: int, step: int, n: int):
    """Depth-first enumeration of c-sequences (tuples)."""
    if n == 0:
        yield ()
        return
    seq = []

    def walk(bound):
        for c in range(bound + 1):
            seq.append(c)
            if len(seq) == n:
                yield tuple(seq)
            else:
                yield from walk(c + step)
            seq.pop()

    yield from walk(first_max)


@lru_cache(maxsize=None)
def _count_from(bound: int, step: int, remaining: int) -> int:
    # sequences of the given length whose first entry is at most `bound`
    if remaining == 0:
        return 1
    return sum(_count_from(c + step, step, remaining - 1) for c in range(bound + 1))


def count_paths(a: int, b: int, n: int) -> int:
    """Number of lattice paths to (n, a n + b) never above y = a x + b."""
    PathSpec(a, b, n)
    return _count_from(b, a, n)


@lru_cache(maxsize=None)
def _weights_from(bound: int, step: int, remaining: int) -> LaurentPoly:
    # sum over such sequences of t^{2 sum c}
    if remaining == 0:
        return LaurentPoly.constant(1)
    if bound < 0:
        return LaurentPoly()
    total = LaurentPoly()
    for c in range(bound + 1):
        total = total + _weights_from(c + step, step, remaining - 1).shift(2 * c)
    return total


def weighted_count(a: int, b: int, n: int) -> LaurentPoly:
    """Area-weighted path count sum q^{Area}, written in t = q^{1/2}."""
    PathSpec(a, b, n)
    return _weights_from(b, a, n).shift(a * n)


def raney_number(f: int, N: int, i: int) -> int:
    """(N+1)/((f+1) i + N + 1) * binom((f+1) i + N + 1, i)."""
    top = (f + 1) * i + N + 1
    value = Fraction(N + 1, top) * comb(top, i)
    assert value.denominator == 1
    return value.numerator


def fuss_catalan(f: int, n: int) -> int:
    value = Fraction(1, f * n + 1) * comb(f * n + 1, n)
    return value.numerator


def level_count(f: int, N: int, n: int) -> int:
    """N/(f n + N) * binom(f n + N, n): c-sequences with c_1 < N and steps up to f - 1."""
    if f < 1 or N < 1:
        raise ValueError("f and N must be positive")
    value = Fraction(N, f * n + N) * comb(f * n + N, n)
    return value.numerator


def quantum_coeff(f: int, N: int, n: int) -> LaurentPoly:
    """(-1)^{(f-1) n} sum t^{2 sum c} over 0 <= c_1 <= N-1, 0 <= c_{i+1} <= c_i + f - 1."""
    if f < 0 or N < 1 or n < 1:
        raise ValueError("need f >= 0, N >= 1, n >= 1")
    poly = _weights_from(N - 1, f - 1, n)
    return -poly if (f - 1) * n % 2 else poly


def level_series(f: int, N: int, order: int) -> MultiSeries:
    """P_N(q, x) = sum_d (-1)^{f d} q^{f(d^2-d)/2} / (q;q)_d x^{N d}, as a series in z = x^N."""
    terms = {}
    for d in range(order + 1):
        sign = -1 if f * d % 2 else 1
        terms[(d,)] = PochFraction(LaurentPoly.monomial(f * (d * d - d), sign), d)
    return MultiSeries(terms, (1,), order)


def level_ratio(f: int, N: int, order: int) -> list:
    """Coefficients of z^n (z = x^N) in P_N(q, q x) / P_N(q, x), as Laurent polynomials."""
    P = level_series(f, N, order)
    shifted = MultiSeries(
        {l: c.shift(2 * N * l[0]) for l, c in P.terms.items()}, P.weights, P.trunc
    )
    Y = ratio_series(shifted, P)
    return [Y[(n,)].to_laurent() if Y[(n,)] != 0 else LaurentPoly() for n in range(order + 1)]


def convolution_sides(N: int, M: int, c: int, m: int) -> tuple:
    def term(K, k):
        return Fraction(K, c * k + K) * comb(c * k + K, k)

    lhs = sum(term(N, j) * term(M, m - j) for j in range(m + 1))
    return lhs, term(N + M, m)


def convolution_check(N: int, M: int, c: int, m: int) -> bool:
    """Exact check of the convolution identity for powers of the Fuss-Catalan series."""
    lhs, rhs = convolution_sides(N, M, c, m)
    return lhs == rhs


def two_partial_identity(f: int, n: int) -> bool:
    """2/(fn+2) binom(fn+2, n) = sum_{i+j=n} Fuss-Catalan(f, i) * Fuss-Catalan(f, j)."""
    lhs = Fraction(2, f * n + 2) * comb(f * n + 2, n)
    rhs = sum(fuss_catalan(f, i) * fuss_catalan(f, n - i) for i in range(n + 1))
    return lhs == rhs


def pochhammer_nested_sum(f: int, d: int, cutoff: int) -> LaurentPoly:
    """sum over c_1 >= 0, c_{i+1} >= c_i + f of q^{sum c}, truncated to q-degree <= cutoff."""
    # `left` entries starting at c sum to at least c*left + f*left*(left-1)/2
    total = {}

    def walk(prev, left, acc):
        if left == 0:
            total[acc] = total.get(acc, 0) + 1
            return
        lo = 0 if prev is None else prev + f
        c = lo
        while acc + c * left + f * left * (left - 1) // 2 <= cutoff:
            walk(c, left - 1, acc + c)
            c += 1

    walk(None, d, 0)
    return LaurentPoly({2 * e: k for e, k in total.items()})


def pochhammer_side(f: int, d: int, cutoff: int) -> LaurentPoly:
    """Power series of q^{f(d^2-d)/2} / (q;q)_d truncated to q-degree <= cutoff."""
    # 1/(q;q)_d expanded as a product of geometric series
    inv = {0: 1}
    for k in range(1, d + 1):
        new = {}
        for e, c in inv.items():
            j = 0
            while e + k * j <= cutoff:
                new[e + k * j] = new.get(e + k * j, 0) + c
                j += 1
        inv = new
    off = f * (d * d - d) // 2
    return LaurentPoly({2 * (e + off): c for e, c in inv.items() if e + off <= cutoff})


__all__ = [
    "PathSpec",
    "iter_csequences",
    "count_paths",
    "weighted_count",
    "raney_number",
    "fuss_catalan",
    "level_count",
    "quantum_coeff",
    "level_series",
    "level_ratio",
    "convolution_check",
    "convolution_sides",
    "two_partial_identity",
    "pochhammer_nested_sum",
    "pochhammer_side",
]
