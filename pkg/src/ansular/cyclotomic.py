"""Exact arithmetic in cyclotomic fields.

A value is a finite rational combination of roots of unity, stored as a map
from exponents ``e`` in ``[0, 1)`` (meaning ``exp(2 pi i e)``) to rational
coefficients.  Equality is decided exactly by reducing modulo the cyclotomic
polynomial of the common conductor.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

Number = Union[int, Fraction, "Cyclotomic"]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    # x^n - 1 divided by every Phi_d with d | n, d < n
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num), "non-exact polynomial division"
    return out


def _reduce_mod_phi(coeffs: list[Fraction], n: int) -> list[Fraction]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            # phi is monic
            for j in range(deg + 1):
                coeffs[i - deg + j] -= c * phi[j]
    return coeffs[:deg]


class Cyclotomic:
    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Fraction, Fraction] | None = None) -> None:
        clean: dict[Fraction, Fraction] = {}
        for e, c in (terms or {}).items():
            e = Fraction(e) % 1
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeta(cls, k: int, order: int) -> Cyclotomic:
        """The root of unity exp(2 pi i k / order)."""
        if order < 1:
            raise ValueError("root order must be positive")
        return cls({Fraction(k, order): Fraction(1)})

    @classmethod
    def coerce(cls, x: Number) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return cls({Fraction(0): Fraction(x)})
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclotomic")

    # -- structure --------------------------------------------------------
    @property
    def terms(self) -> dict[Fraction, Fraction]:
        return dict(self._terms)

    def conductor(self) -> int:
        """Least common order of the roots of unity that appear."""
        return math.lcm(1, *(e.denominator for e in self._terms))

    def coordinates(self, n: int | None = None) -> list[Fraction]:
        """Coordinates in the power basis of Q(zeta_n); n defaults to the conductor."""
        n = self.conductor() if n is None else n
        if n % self.conductor():
            raise ValueError(f"Q(zeta_{n}) does not contain this element")
        coeffs = [Fraction(0)] * n
        for e, c in self._terms.items():
            coeffs[int(e * n)] += c
        return _reduce_mod_phi(coeffs, n)

    def is_zero(self) -> bool:
        return not any(self.coordinates())

    def root_of_unity(self) -> tuple[int, int] | None:
        """Return ``(k, M)`` with ``self == zeta_M^k`` in lowest terms, else None."""
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            if c == 1:
                return e.numerator, e.denominator
        # a root of unity inside Q(zeta_n) has order dividing lcm(2, n)
        n = self.conductor()
        m = n if n % 2 == 0 else 2 * n
        for k in range(m):
            if self == Cyclotomic.zeta(k, m):
                f = Fraction(k, m)
                return f.numerator, f.denominator
        return None

    def conjugate(self) -> Cyclotomic:
        return Cyclotomic({-e: c for e, c in self._terms.items()})

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Number) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Cyclotomic(out)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Number) -> Cyclotomic:
        try:
            return self + (-Cyclotomic.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Number) -> Cyclotomic:
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other: Number) -> Cyclotomic:
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Fraction, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1 + e2) % 1
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Cyclotomic(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Cyclotomic:
        if k < 0:
            if len(self._terms) != 1:
                raise ZeroDivisionError("only monomials are inverted")
            (e, c), = self._terms.items()
            return Cyclotomic({-e * (-k): Fraction(1) / c ** (-k)})
        out = Cyclotomic.coerce(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.coerce(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __complex__(self) -> complex:
        return sum((float(c) * cmath.exp(2j * cmath.pi * float(e)) for e, c in self._terms.items()), 0j)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            root = "1" if e == 0 else f"z{e.denominator}^{e.numerator}"
            parts.append(root if c == 1 else f"{c}*{root}")
        return " + ".join(parts)

    def to_json(self) -> list[list[int]]:
        """Terms as ``[num, den, k, M]``, sorted, meaning (num/den) * zeta_M^k."""
        return [
            [c.numerator, c.denominator, e.numerator, e.denominator]
            for e, c in sorted(self._terms.items())
        ]


def zeta(k: int, order: int) -> Cyclotomic:
    return Cyclotomic.zeta(k, order)


ZERO = Cyclotomic()
ONE = Cyclotomic.coerce(1)


# Small dense matrices over Cyclotomic; |G| x |G| at most, so plain lists suffice.
Matrix = tuple[tuple[Cyclotomic, ...], ...]


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO) for j in range(m))
        for i in range(n)
    )


def matpow(a: Matrix, k: int) -> Matrix:
    out = identity_matrix(len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def matrices_equal(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )
