"""Closed-form coefficients of the classical limit via admissible pair sets.

Vertex indices are 0-based throughout.  Zero denominators are handled by
shifting every level by a formal epsilon, cancelling, and evaluating at
epsilon = 0.  Polynomials in epsilon reuse :class:`LaurentPoly`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial

from .exact import LaurentPoly
from .series import MultiSeries, QuiverSpec, index_set

EpsPoly = LaurentPoly

_EPS = LaurentPoly.monomial(1)


class RegularizationFailure(ArithmeticError):
    """The epsilon-regularized expression still has a pole at epsilon = 0."""


def has_cycle(pairs) -> bool:
    """Peel off pairs whose source is nobody's target; leftovers mean a cycle."""
    remaining = list(pairs)
    while remaining:
        targets = {j for _, j in remaining}
        kept = [(i, j) for i, j in remaining if i in targets]
        if len(kept) == len(remaining):
            return True
        remaining = kept
    return False


def is_admissible(pairs) -> bool:
    targets = [j for _, j in pairs]
    if len(set(targets)) != len(targets):
        return False
    return not has_cycle(pairs)


@lru_cache(maxsize=None)
def _admissible(m: int, k: int) -> tuple:
    found = []
    for targets in combinations(range(m), k):
        for sources in product(range(m), repeat=k):
            pairs = tuple(sorted(zip(sources, targets)))
            if not has_cycle(pairs):
                found.append(pairs)
    found.sort()
    return tuple(found)


def enumerate_admissible(m: int, k: int) -> list:
    """All admissible sets of k pairs on m vertices, as sorted pair tuples."""
    if not 0 <= k <= m - 1:
        raise ValueError("need 0 <= k <= m - 1")
    return list(_admissible(m, k))


def _eps_value(num: LaurentPoly, den: LaurentPoly) -> Fraction:
    """Value at epsilon = 0 of num/den after cancelling powers of epsilon."""
    if num.is_zero():
        return Fraction(0)
    v = den.valuation
    if num.valuation < v:
        raise RegularizationFailure("pole at epsilon = 0")
    return Fraction(num.coefficient(v)) / den.coefficient(v)


def _set_weight(spec: QuiverSpec, pairs, l) -> int:
    w = 1
    for i, j in pairs:
        w *= spec.matrix[i][j] * l[i]
    return w


def coeff_A(spec: QuiverSpec, l) -> LaurentPoly:
    """Numerator polynomial A(l) with levels n_j + epsilon, denominators cleared.

    Each admissible set contributes prod C_{ij} l_i times the levels of the
    vertices it does not target.
    """
    m = spec.m
    level = [LaurentPoly({0: n, 1: 1}) for n in spec.levels]
    total = LaurentPoly()
    for k in range(m):
        for pairs in _admissible(m, k):
            w = _set_weight(spec, pairs, l)
            if w == 0:
                continue
            hit = {j for _, j in pairs}
            term = LaurentPoly.constant(w)
            for j in range(m):
                if j not in hit:
                    term = term * level[j]
            total = total + term
    return total


def _sign(spec: QuiverSpec, l) -> int:
    e = sum((spec.matrix[i][i] + 1) * l[i] for i in range(spec.m))
    return -1 if e % 2 else 1


def _binom_over_top(top: LaurentPoly, k: int):
    """binom(top, k) / top as (numerator, denominator) in epsilon."""
    if k == 0:
        return LaurentPoly.constant(1), top
    num = LaurentPoly.constant(Fraction(1, factorial(k)))
    for j in range(1, k):
        num = num * (top - j)
    return num, LaurentPoly.constant(1)


def coeff_b(spec: QuiverSpec, l) -> Fraction:
    """Coefficient of x^l in the classical limit, from the closed formula."""
    l = tuple(l)
    if len(l) != spec.m or min(l) < 0:
        raise ValueError("index must have m nonnegative entries")
    C = spec.matrix
    num = coeff_A(spec, l)
    den = LaurentPoly.constant(1)
    for j in range(spec.m):
        top = LaurentPoly({0: spec.levels[j] + sum(C[i][j] * l[i] for i in range(spec.m)), 1: 1})
        a, b = _binom_over_top(top, l[j])
        num = num * a
        den = den * b
    return _sign(spec, l) * _eps_value(num, den)


def closed_limit(spec: QuiverSpec, D: int, caps=None) -> MultiSeries:
    """The whole truncated classical limit from :func:`coeff_b`."""
    window = index_set(spec.levels, D, caps)
    return MultiSeries({l: coeff_b(spec, l) for l in window}, spec.levels, D, caps)


def coeff_A_max(spec: QuiverSpec, l, perturb: bool = True) -> LaurentPoly:
    """Top-size part of A: admissible sets with m - 1 pairs, times the one untargeted level.

    With ``perturb`` every matrix entry is taken as C_ij + epsilon.
    """
    m = spec.m
    total = LaurentPoly()
    for pairs in _admissible(m, m - 1):
        hit = {j for _, j in pairs}
        (free,) = set(range(m)) - hit
        term = LaurentPoly.constant(spec.levels[free])
        for i, j in pairs:
            entry = LaurentPoly({0: spec.matrix[i][j], 1: 1 if perturb else 0})
            term = term * entry.scale(l[i])
        total = total + term
    return total


def log_coeff_closed(spec: QuiverSpec, l) -> Fraction:
    """Coefficient of x^l in log y from the closed formula (l nonzero).

    Here the vanishing denominators are sums of matrix entries, so the
    regularization perturbs every entry C_ij -> C_ij + epsilon; the sign
    factor keeps the integer diagonal.
    """
    l = tuple(l)
    if len(l) != spec.m or min(l) < 0:
        raise ValueError("index must have m nonnegative entries")
    if not any(l):
        raise ValueError("log coefficient is defined for nonzero indices")
    C = spec.matrix
    size = sum(l)
    num = coeff_A_max(spec, l)
    den = LaurentPoly.constant(1)
    for j in range(spec.m):
        top = LaurentPoly({0: sum(C[i][j] * l[i] for i in range(spec.m)), 1: size})
        a, b = _binom_over_top(top, l[j])
        num = num * a
        den = den * b
    return _sign(spec, l) * _eps_value(num, den)


def closed_log(spec: QuiverSpec, D: int, caps=None) -> MultiSeries:
    window = index_set(spec.levels, D, caps)
    return MultiSeries(
        {l: log_coeff_closed(spec, l) for l in window if any(l)}, spec.levels, D, caps
    )
