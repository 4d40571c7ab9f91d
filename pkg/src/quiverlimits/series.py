"""Truncated multivariate series, the quiver generating series and its q -> 1 limits."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from .exact import (
    LaurentPoly,
    RationalFunction,
    limit_at_one,
    pochhammer_qq,
    pochhammer_ratio,
    qbinomial,
    rational_from_str,
    rational_to_str,
)

Index = tuple  # tuple[int, ...]


class SpecError(ValueError):
    """Malformed quiver specification."""


class NonUnitConstantTerm(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuiverSpec:
    """Symmetric quiver matrix with a level and a sign per vertex."""

    matrix: tuple
    levels: tuple
    signs: tuple = None
    name: str | None = None

    def __post_init__(self):
        try:
            matrix = tuple(tuple(int(c) for c in row) for row in self.matrix)
            levels = tuple(int(n) for n in self.levels)
            signs = tuple(int(s) for s in self.signs) if self.signs is not None else (1,) * len(levels)
        except (TypeError, ValueError) as exc:
            raise SpecError(f"non-integer entry in spec: {exc}") from None
        m = len(matrix)
        if m == 0:
            raise SpecError("empty quiver matrix")
        if any(len(row) != m for row in matrix):
            raise SpecError("quiver matrix is not square")
        for i in range(m):
            for j in range(i):
                if matrix[i][j] != matrix[j][i]:
                    raise SpecError(f"quiver matrix not symmetric at ({i}, {j})")
        if len(levels) != m:
            raise SpecError(f"expected {m} levels, got {len(levels)}")
        if any(n < 0 for n in levels):
            raise SpecError("levels must be nonnegative")
        if len(signs) != m:
            raise SpecError(f"expected {m} signs, got {len(signs)}")
        if any(s not in (1, -1) for s in signs):
            raise SpecError("signs must be +1 or -1")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "signs", signs)

    @property
    def m(self) -> int:
        return len(self.matrix)

    def quadratic(self, d: Sequence[int]) -> int:
        """sum_{i,j} C_ij d_i d_j"""
        C = self.matrix
        return sum(C[i][j] * d[i] * d[j] for i in range(self.m) for j in range(self.m))

    def with_levels(self, levels) -> "QuiverSpec":
        return QuiverSpec(self.matrix, tuple(levels), self.signs, self.name)

    def to_json(self) -> dict:
        out = {"matrix": [list(r) for r in self.matrix], "levels": list(self.levels), "signs": list(self.signs)}
        if self.name is not None:
            out = {"name": self.name, **out}
        return out

    @classmethod
    def from_json(cls, data) -> "QuiverSpec":
        if not isinstance(data, dict):
            raise SpecError("spec must be a JSON object")
        try:
            matrix = data["matrix"]
            levels = data["levels"]
        except KeyError as exc:
            raise SpecError(f"missing field {exc}") from None
        if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
            raise SpecError("matrix must be a list of lists")
        return cls(matrix, levels, data.get("signs"), data.get("name"))

    @classmethod
    def load(cls, path) -> "QuiverSpec":
        try:
            with open(path) as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc}") from None
        return cls.from_json(data)


def index_set(weights: Sequence[int], trunc: int, caps: Sequence[int | None] | None = None) -> list:
    """All multi-indices l with sum(w_i l_i) <= trunc and l_i <= caps[i].

    A vertex of weight zero needs a cap, otherwise the set is infinite.
    Sorted by total degree, then lexicographically.
    """
    m = len(weights)
    caps = list(caps) if caps is not None else [None] * m
    if len(caps) != m:
        raise ValueError("caps length does not match the number of vertices")
    ranges = []
    for w, cap in zip(weights, caps):
        if w == 0 and cap is None:
            raise ValueError("vertex with level 0 requires a per-vertex index cap")
        top = trunc // w if w > 0 else cap
        if cap is not None:
            top = min(top, cap)
        ranges.append(range(top + 1))
    out = [l for l in product(*ranges) if sum(w * x for w, x in zip(weights, l)) <= trunc]
    out.sort(key=lambda l: (sum(l), l))
    return out


class MultiSeries:
    """Truncated power series in m variables.

    Known coefficients are those at indices in ``index_set(weights, trunc,
    caps)``; coefficients of higher weighted degree are unknown.  Missing
    keys inside the window are zero.  The coefficient domain is whatever the
    stored values are (rationals, Laurent polynomials, rational functions).
    """

    __slots__ = ("terms", "weights", "trunc", "caps", "_window")

    def __init__(self, terms: dict, weights, trunc: int, caps=None):
        self.weights = tuple(weights)
        self.trunc = trunc
        if caps is not None and all(c is None for c in caps):
            caps = None
        self.caps = tuple(caps) if caps is not None else None
        self._window = index_set(self.weights, trunc, self.caps)
        window = set(self._window)
        self.terms = {tuple(l): c for l, c in terms.items() if tuple(l) in window}

    @property
    def m(self) -> int:
        return len(self.weights)

    def window(self) -> list:
        return list(self._window)

    def zero_index(self) -> Index:
        return (0,) * self.m

    def __getitem__(self, index):
        index = tuple(index)
        if index in self.terms:
            return self.terms[index]
        return 0

    def _like(self, terms) -> "MultiSeries":
        return MultiSeries(terms, self.weights, self.trunc, self.caps)

    def _check(self, other: "MultiSeries"):
        if (self.weights, self.trunc, self.caps) != (other.weights, other.trunc, other.caps):
            raise ValueError("series have different truncation windows")

    def map(self, func: Callable) -> "MultiSeries":
        return self._like({l: func(c) for l, c in self.terms.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for l, c in other.terms.items():
            out[l] = out[l] + c if l in out else c
        return self._like(out)

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "MultiSeries":
        return self.map(lambda x: x * c)

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return self.scale(other)
        self._check(other)
        window = set(self._window)
        out = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                l = tuple(x + y for x, y in zip(a, b))
                if l not in window:
                    continue
                p = ca * cb
                out[l] = out[l] + p if l in out else p
        return self._like(out)

    def __pow__(self, k: int) -> "MultiSeries":
        if k < 0:
            raise ValueError("negative power")
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def one(self) -> "MultiSeries":
        return self._like({self.zero_index(): 1})

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        if (self.weights, self.trunc, self.caps) != (other.weights, other.trunc, other.caps):
            return False
        return all(self[l] == other[l] for l in self._window)

    __hash__ = None

    def nonzero_terms(self):
        return [(l, self.terms[l]) for l in sorted(self.terms) if self.terms[l] != 0]

    def to_json(self) -> dict:
        return {
            "trunc": self.trunc,
            "terms": [{"index": list(l), "value": rational_to_str(c)} for l, c in self.nonzero_terms()],
        }

    @classmethod
    def from_json(cls, data, weights, caps=None) -> "MultiSeries":
        terms = {tuple(t["index"]): rational_from_str(t["value"]) for t in data["terms"]}
        return cls(terms, weights, data["trunc"], caps)

    def __repr__(self):
        return f"MultiSeries(trunc={self.trunc}, terms={dict(self.nonzero_terms())!r})"


class PochFraction(RationalFunction):
    """A rational function of the form ``num / (q;q)_n``.

    Every coefficient of the quiver series and of the ratios built from it
    fits this shape, and it is closed under the ring operations because
    (q;q)_i (q;q)_j divides (q;q)_{i+j}.  That keeps numerators polynomial
    without any gcd computation.
    """

    __slots__ = ("order",)

    def __init__(self, num: LaurentPoly, order: int):
        self.num = num
        self.order = order

    @property
    def den(self) -> LaurentPoly:
        return pochhammer_qq(self.order)

    @staticmethod
    def _lift(x: "PochFraction", order: int) -> LaurentPoly:
        return x.num * pochhammer_ratio(order, x.order)

    def _coerce_poch(self, other):
        if isinstance(other, PochFraction):
            return other
        if isinstance(other, (int, Fraction)):
            return PochFraction(LaurentPoly.constant(other), 0)
        if isinstance(other, LaurentPoly):
            return PochFraction(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce_poch(other)
        if o is None:
            return RationalFunction.__add__(self, other)
        if o.order == self.order:
            return PochFraction(self.num + o.num, self.order)
        n = max(self.order, o.order)
        return PochFraction(self._lift(self, n) + self._lift(o, n), n)

    __radd__ = __add__

    def __neg__(self):
        return PochFraction(-self.num, self.order)

    def __sub__(self, other):
        o = self._coerce_poch(other)
        if o is None:
            return RationalFunction.__sub__(self, other)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce_poch(other)
        if o is None:
            return RationalFunction.__mul__(self, other)
        i, j = self.order, o.order
        num = self.num * o.num
        if i and j:
            num = num * qbinomial(i + j, i)
        return PochFraction(num, i + j)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce_poch(other)
        if o is None:
            return RationalFunction.__eq__(self, other)
        n = max(self.order, o.order)
        return self._lift(self, n) == self._lift(o, n)

    __hash__ = None

    def shift(self, k: int) -> "PochFraction":
        return PochFraction(self.num.shift(k), self.order)

    def to_rational(self) -> RationalFunction:
        return RationalFunction(self.num, self.den)

    def __repr__(self):
        return f"PochFraction({self.num!s}, order={self.order})"


def _pc_coefficient(spec: QuiverSpec, d: Index) -> PochFraction:
    """(-t)^{d.C.d} / prod (q;q)_{d_i} over the common denominator (q;q)_{|d|}."""
    k = spec.quadratic(d)
    num = LaurentPoly.monomial(k, -1 if k % 2 else 1)
    total = 0
    for di in d:
        if di:
            num = num * qbinomial(total + di, di)
        total += di
    return PochFraction(num, total)


def expand_pc(spec: QuiverSpec, D: int, caps=None, weights=None) -> MultiSeries:
    """Motivic generating series P_C truncated at weighted degree D.

    Truncation weights default to the quiver's levels.
    """
    if D < 0:
        raise ValueError("truncation bound must be nonnegative")
    weights = spec.levels if weights is None else tuple(weights)
    window = index_set(weights, D, caps)
    return MultiSeries({d: _pc_coefficient(spec, d) for d in window}, weights, D, caps)


def shift_q(P: MultiSeries, n: Sequence[int]) -> MultiSeries:
    """Substitute x_i -> q^{n_i} x_i, i.e. multiply the l-coefficient by t^{2 n.l}."""
    n = tuple(n)
    if len(n) != P.m:
        raise ValueError("level vector length does not match the series")
    out = {}
    for l, c in P.terms.items():
        k = 2 * sum(a * b for a, b in zip(n, l))
        if k == 0:
            out[l] = c
        elif isinstance(c, PochFraction):
            out[l] = c.shift(k)
        else:
            out[l] = c * LaurentPoly.monomial(k)
    return P._like(out)


def ratio_series(numer: MultiSeries, denom: MultiSeries) -> MultiSeries:
    """Y with numer = denom * Y up to truncation, solved degree by degree."""
    numer._check(denom)
    zero = denom.zero_index()
    c0 = denom[zero]
    if c0 == 0:
        raise NonUnitConstantTerm("denominator series has zero constant term")
    inv = None if c0 == 1 else 1 / c0
    dterms = [(k, c) for k, c in denom.terms.items() if k != zero and c != 0]
    out = {}
    for l in numer.window():
        acc = numer[l]
        for k, ck in dterms:
            rest = tuple(a - b for a, b in zip(l, k))
            if min(rest) < 0:
                continue
            y = out.get(rest)
            if y is None:
                continue
            acc = acc - ck * y
        if inv is not None:
            acc = acc * inv
        if not (isinstance(acc, int) and acc == 0):
            out[l] = acc
    return numer._like(out)


def classical_limit_oracle(spec: QuiverSpec, D: int, caps=None, shift=None, weights=None) -> MultiSeries:
    """y = lim_{q->1} P_C(q^n x) / P_C(x), coefficientwise and exact.

    ``shift`` overrides the level vector used in the substitution (the
    truncation window still follows ``weights``, default the levels).
    """
    shift = spec.levels if shift is None else tuple(shift)
    P = expand_pc(spec, D, caps, weights)
    Y = ratio_series(shift_q(P, shift), P)
    return Y.map(limit_at_one)


def partial_limit(spec: QuiverSpec, j: int, D: int, caps=None) -> MultiSeries:
    """y_j: the limit with only x_j shifted by one power of q (j is 0-based).

    The truncation window is the one of ``spec`` itself, so the result can
    be multiplied against the full limit.
    """
    if not 0 <= j < spec.m:
        raise IndexError(f"vertex index {j} out of range for m = {spec.m}")
    unit = tuple(1 if i == j else 0 for i in range(spec.m))
    return classical_limit_oracle(spec, D, caps, shift=unit)


def factorized_limit(spec: QuiverSpec, D: int, caps=None) -> MultiSeries:
    """prod_j y_j^{n_j} built from the partial limits."""
    result = None
    for j, n in enumerate(spec.levels):
        if n == 0:
            continue
        factor = partial_limit(spec, j, D, caps) ** n
        result = factor if result is None else result * factor
    if result is None:
        return MultiSeries({(0,) * spec.m: 1}, spec.levels, D, caps)
    return result


def series_from_coefficients(coeffs: Iterable, trunc: int | None = None) -> MultiSeries:
    """One-variable series from a coefficient list (degree 0 first)."""
    coeffs = list(coeffs)
    trunc = len(coeffs) - 1 if trunc is None else trunc
    return MultiSeries({(k,): c for k, c in enumerate(coeffs) if k <= trunc}, (1,), trunc)
