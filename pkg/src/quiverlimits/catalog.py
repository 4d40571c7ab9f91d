"""Knot quivers with higher-level generators and their expected extremal BPS data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import LaurentPoly, NotDivisible, pochhammer_qq
from .series import QuiverSpec


class UnknownEntry(KeyError):
    pass


class NonPolynomialQuotient(ArithmeticError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    spec: QuiverSpec
    expected_a: tuple
    expected_N: tuple
    notes: str = ""

    def __post_init__(self):
        if not self.expected_a or len(self.expected_a) != len(self.expected_N):
            raise ValueError("expected sequences must be nonempty and of equal length")

    @property
    def order(self) -> int:
        return len(self.expected_a)


def _fr(values):
    return tuple(Fraction(v) for v in values)


_ENTRIES = {
    "9_46": CatalogEntry(
        QuiverSpec([[0, -1, -2], [-1, 0, -2], [-2, -2, -4]], (1, 1, 2), (1, 1, 1), "9_46"),
        _fr([-2, -10, -56, -330]),
        _fr([-2, -2, -6, -20]),
        "bottom row of the unreduced S^r-colored HOMFLY-PT; vertices d1, d3, d4 with d4 at level 2",
    ),
    "8_20": CatalogEntry(
        # the (-1)^{d2+d3+d4} of the knot-side sum is already (-1)^{d.C.d}, so no extra signs
        QuiverSpec(
            [[0, -1, -1, -2], [-1, -1, -1, -3], [-1, -1, 1, -1], [-2, -3, -1, -5]],
            (1, 1, 1, 2),
            (1, 1, 1, 1),
            "8_20",
        ),
        _fr([1, 5, -17, 5]),
        _fr([1, 1, -2, 0]),
        "three level-one generators and one of level two",
    ),
    "9_42": CatalogEntry(
        QuiverSpec([[-12]], (2,), (1,), "9_42"),
        _fr([0, -4, 0, -100, 0, -2812, 0, -83300]),
        _fr([0, -1, 0, -6, 0, -78, 0, -1300]),
        "extremal specialization nonzero only in even colors; single vertex of level 2",
    ),
}

NAMES = tuple(_ENTRIES)


def get_entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise UnknownEntry(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}") from None


def _qpow(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(2 * k)


def bottom_row_946(r: int) -> LaurentPoly:
    """Reduced bottom-row colored polynomial P_r(q) of 9_46, as a Laurent polynomial in t."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    total = LaurentPoly()
    top = pochhammer_qq(r)
    for d4 in range(r // 2 + 1):
        for d3 in range(r - 2 * d4 + 1):
            d1 = r - 2 * d4 - d3
            den = pochhammer_qq(d1) * pochhammer_qq(d3) * pochhammer_qq(d4)
            try:
                quotient = top.exact_div(den)
            except NotDivisible:
                raise NonPolynomialQuotient(f"(q;q)_{r} not divisible at d = {(d1, d3, d4)}") from None
            total = total + quotient * _qpow(-d1 * (d3 + 2 * d4) - 2 * d4 * (d3 + d4))
    return total
