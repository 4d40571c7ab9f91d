"""Logarithmic derivative of the classical limit and BPS-like numbers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import rational_to_str
from .series import MultiSeries, NonUnitConstantTerm, QuiverSpec, SpecError, classical_limit_oracle


def log_series(y: MultiSeries) -> MultiSeries:
    """Formal logarithm of a series with constant term 1."""
    zero = y.zero_index()
    if y[zero] != 1:
        raise NonUnitConstantTerm("log needs constant term 1")
    u = y - y.one()
    # u^k vanishes in the window once k exceeds the largest total degree
    top = max(sum(l) for l in y.window())
    result = u.map(lambda c: 0 * c)
    power = u
    for k in range(1, top + 1):
        sign = 1 if k % 2 else -1
        result = result + power.scale(Fraction(sign, k))
        power = power * u
    return result


def exp_series(u: MultiSeries) -> MultiSeries:
    """Formal exponential of a series with zero constant term."""
    if u[u.zero_index()] != 0:
        raise ValueError("exp needs zero constant term")
    top = max(sum(l) for l in u.window())
    result = u.one()
    power = u.one()
    for k in range(1, top + 1):
        power = (power * u).scale(Fraction(1, k))
        result = result + power
    return result


@dataclass(frozen=True)
class OneVarSeries:
    """Coefficients of x^0 .. x^R."""

    coeffs: tuple

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, r: int):
        return self.coeffs[r]


def substitute(y: MultiSeries, levels, signs, R: int) -> MultiSeries:
    """y(s_1 x^{n_1}, ..., s_m x^{n_m}) truncated at x^R."""
    if any(n == 0 for n in levels):
        raise SpecError("specialization needs every level to be positive")
    acc = [Fraction(0)] * (R + 1)
    for l, c in y.terms.items():
        deg = sum(n * k for n, k in zip(levels, l))
        if deg > R:
            continue
        sign = 1
        for s, k in zip(signs, l):
            if s < 0 and k % 2:
                sign = -sign
        acc[deg] += sign * c
    return MultiSeries({(k,): c for k, c in enumerate(acc)}, (1,), R)


def specialize(spec: QuiverSpec, R: int) -> OneVarSeries:
    """a_0..a_R of x (log y(x))' under x_i = s_i x^{n_i}; a_0 = 0."""
    if R < 1:
        raise ValueError("R must be at least 1")
    y = classical_limit_oracle(spec, R)
    logy = log_series(substitute(y, spec.levels, spec.signs, R))
    return OneVarSeries(tuple(Fraction(r) * logy[(r,)] for r in range(R + 1)))


def log_derivative(y1: MultiSeries) -> OneVarSeries:
    """x (log y)' for a one-variable series."""
    logy = log_series(y1)
    return OneVarSeries(tuple(Fraction(r) * logy[(r,)] for r in range(y1.trunc + 1)))


def mobius(d: int) -> int:
    if d < 1:
        raise ValueError("mobius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class BpsRecord:
    r: int
    a: Fraction
    N: Fraction

    @property
    def integral(self) -> bool:
        return self.N.denominator == 1

    def to_json(self) -> dict:
        return {"r": self.r, "a": rational_to_str(self.a), "N": rational_to_str(self.N), "integral": self.integral}


def bps_numbers(a) -> list:
    """N_r = r^{-2} sum_{d | r} mu(d) a_{r/d} for r = 1..R.

    ``a`` is indexed by degree, with a[0] ignored.
    """
    table = []
    for r in range(1, len(a)):
        s = sum(mobius(d) * Fraction(a[r // d]) for d in divisors(r))
        table.append(BpsRecord(r, Fraction(a[r]), s / (r * r)))
    return table


def reconstruct_a(N) -> list:
    """Inverse of :func:`bps_numbers`: a_r = sum_{d | r} d^2 N_d.

    ``N`` is indexed by r starting at 1; returns a list with a[0] = 0.
    """
    N = [None] + list(N)
    return [Fraction(0)] + [sum(d * d * Fraction(N[d]) for d in divisors(r)) for r in range(1, len(N))]


def bps_table(spec: QuiverSpec, R: int) -> list:
    return bps_numbers(specialize(spec, R).coeffs)
