"""Exact arithmetic kernel.

Rationals are plain :class:`fractions.Fraction`.  Polynomials in the half
q-power ``t = q**(1/2)`` are :class:`LaurentPoly`; quotients of two of them
are :class:`RationalFunction`, which is never reduced except inside
:func:`limit_at_one`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

__all__ = [
    "Fraction",
    "LaurentPoly",
    "RationalFunction",
    "PoleAtOne",
    "NotDivisible",
    "pochhammer_qq",
    "qbinomial",
    "limit_at_one",
    "gen_binomial",
    "rational_to_str",
    "rational_from_str",
]

# int64 convolution is safe while every partial sum stays below this bound
_INT64_SAFE = 1 << 62


class PoleAtOne(ArithmeticError):
    """The denominator vanishes at t = 1 to higher order than the numerator."""


class NotDivisible(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


def rational_to_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


def _clean(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Laurent polynomial in one variable with exact rational coefficients.

    Stored densely: ``coeffs[k]`` is the coefficient of ``t**(low + k)``.
    The first and last stored coefficients are nonzero; the zero polynomial
    has no coefficients.  Instances are immutable.
    """

    __slots__ = ("low", "coeffs", "_ints")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        terms = {int(e): c for e, c in terms.items() if c != 0}
        if not terms:
            self._set(0, ())
            return
        lo, hi = min(terms), max(terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = _clean(Fraction(c) if not isinstance(c, int) else c)
        self._set(lo, tuple(coeffs))

    def _set(self, low, coeffs):
        self.low = low
        self.coeffs = coeffs
        self._ints = all(type(c) is int for c in coeffs)

    @classmethod
    def _raw(cls, low: int, coeffs) -> "LaurentPoly":
        """Build from a dense list, trimming zeros at both ends."""
        start, stop = 0, len(coeffs)
        while start < stop and coeffs[start] == 0:
            start += 1
        while stop > start and coeffs[stop - 1] == 0:
            stop -= 1
        obj = cls.__new__(cls)
        if start == stop:
            obj._set(0, ())
        else:
            obj._set(low + start, tuple(_clean(c) for c in coeffs[start:stop]))
        return obj

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls._raw(0, [c])

    @classmethod
    def monomial(cls, exponent: int, c=1) -> "LaurentPoly":
        return cls._raw(exponent, [c])

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return self.low

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    def items(self):
        """(exponent, coefficient) pairs with nonzero coefficient, ascending."""
        return [(self.low + k, c) for k, c in enumerate(self.coeffs) if c != 0]

    def coefficient(self, exponent: int):
        k = exponent - self.low
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def constant_term(self):
        return self.coefficient(0)

    def at_one(self):
        return _clean(sum(self.coeffs, 0))

    def __call__(self, value):
        value = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        if self.coeffs:
            acc *= value ** self.low
        return _clean(acc)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [0] * (hi - lo)
        for k, c in enumerate(self.coeffs, self.low - lo):
            out[k] = c
        for k, c in enumerate(other.coeffs, other.low - lo):
            out[k] += c
        return LaurentPoly._raw(lo, out)

    __radd__ = __add__

    def __neg__(self):
        obj = LaurentPoly.__new__(LaurentPoly)
        obj._set(self.low, tuple(-c for c in self.coeffs))
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "LaurentPoly":
        if c == 0 or not self.coeffs:
            return LaurentPoly()
        if c == 1:
            return self
        return LaurentPoly._raw(self.low, [x * c for x in self.coeffs])

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        if not self.coeffs or k == 0:
            return self
        obj = LaurentPoly.__new__(LaurentPoly)
        obj.low = self.low + k
        obj.coeffs = self.coeffs
        obj._ints = self._ints
        return obj

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly()
        low = self.low + other.low
        if len(a) == 1:
            return other.scale(a[0]).shift(self.low)
        if len(b) == 1:
            return self.scale(b[0]).shift(other.low)
        if self._ints and other._ints:
            bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
            if bound < _INT64_SAFE:
                prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
                return LaurentPoly._raw(low, prod.tolist())
        prod = np.convolve(np.array(a, dtype=object), np.array(b, dtype=object))
        return LaurentPoly._raw(low, list(prod))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raises :class:`NotDivisible` on remainder."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return LaurentPoly()
        num = list(self.coeffs)
        den = other.coeffs
        if len(den) > len(num):
            raise NotDivisible("divisor has larger span than dividend")
        lead = den[-1]
        qlen = len(num) - len(den) + 1
        quot = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c = num[k + len(den) - 1]
            if c == 0:
                continue
            if type(c) is int and type(lead) is int and c % lead == 0:
                c = c // lead
            else:
                c = Fraction(c) / lead
            quot[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
        if any(x != 0 for x in num[: len(den) - 1]):
            raise NotDivisible("nonzero remainder")
        return LaurentPoly._raw(self.low - other.low, quot)

    def div_t_minus_one(self) -> "LaurentPoly":
        """Synthetic division by ``(t - 1)``; requires a root at t = 1."""
        p = self.coeffs
        if self.at_one() != 0:
            raise NotDivisible("no root at t = 1")
        s = [0] * (len(p) - 1)
        acc = 0
        for k in range(len(p) - 1, 0, -1):
            acc = acc + p[k]
            s[k - 1] = acc
        return LaurentPoly._raw(self.low, s)

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Replace ``t`` by ``t**k`` (k >= 1)."""
        return LaurentPoly({e * k: c for e, c in self.items()})

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self):
        return self.format("t")

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self):
        return [[e, rational_to_str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls({int(e): rational_from_str(c) for e, c in data})


class RationalFunction:
    """Unreduced quotient of two Laurent polynomials in ``t``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly._coerce(num)
        den = LaurentPoly.constant(1) if den is None else LaurentPoly._coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("numerator and denominator must be polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def to_laurent(self) -> LaurentPoly:
        """The quotient as a Laurent polynomial, if the division is exact."""
        return self.num.exact_div(self.den)

    def __repr__(self):
        return f"RationalFunction({self.num!s}, {self.den!s})"


def limit_at_one(f) -> Fraction:
    """Exact value of ``f`` at t = 1 after cancelling common (t - 1) factors.

    ``f`` is anything with ``num`` and ``den`` Laurent polynomials; a plain
    rational or polynomial is accepted too.
    """
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    if isinstance(f, LaurentPoly):
        return Fraction(f.at_one())
    num, den = f.num, f.den
    if num.is_zero():
        return Fraction(0)
    while den.at_one() == 0:
        if num.at_one() != 0:
            raise PoleAtOne("denominator vanishes to higher order at t = 1")
        num = num.div_t_minus_one()
        den = den.div_t_minus_one()
    return Fraction(num.at_one()) / den.at_one()


@lru_cache(maxsize=None)
def pochhammer_qq(d: int) -> LaurentPoly:
    """(q;q)_d = prod_{k=1}^{d} (1 - t**(2k)) in t = q**(1/2)."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        return LaurentPoly.constant(1)
    return pochhammer_qq(d - 1) * LaurentPoly({0: 1, 2 * d: -1})


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n choose k] in q, written in t."""
    if k < 0 or k > n:
        return LaurentPoly()
    return pochhammer_qq(n).exact_div(pochhammer_qq(k) * pochhammer_qq(n - k))


@lru_cache(maxsize=None)
def pochhammer_ratio(hi: int, lo: int) -> LaurentPoly:
    """(q;q)_hi / (q;q)_lo = prod_{k=lo+1}^{hi} (1 - q**k), for hi >= lo."""
    if hi < lo:
        raise ValueError("hi must be >= lo")
    if hi == lo:
        return LaurentPoly.constant(1)
    return pochhammer_ratio(hi - 1, lo) * LaurentPoly({0: 1, 2 * hi: -1})


def gen_binomial(top, k: int):
    """Generalized binomial ``top (top-1) ... (top-k+1) / k!``.

    ``top`` may be an integer, a rational or a :class:`LaurentPoly`.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if isinstance(top, LaurentPoly):
        acc = LaurentPoly.constant(1)
        for j in range(k):
            acc = acc * (top - j)
        return acc.scale(Fraction(1, factorial(k)))
    acc = 1
    for j in range(k):
        acc *= top - j
    if isinstance(acc, int):
        return acc // factorial(k)
    return _clean(Fraction(acc) / factorial(k))
