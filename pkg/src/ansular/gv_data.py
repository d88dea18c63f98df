"""Skeletal ribbon Grothendieck-Verdier data.

Two input families are supported:

* :class:`FusionDatum` -- a semisimple category with simple unit, given by
  fusion coefficients ``N[a][b][c]``, the duality involution ``bar`` and the
  label ``kappa`` of the dualizing object.
* :class:`PointedDatum` -- G-graded vector spaces over a finite abelian group
  with balancing ``theta_a = zeta_M ** q[a]`` and dualizing degree
  ``a0 = b0 ** -2``.

Validation never raises on mathematical failures; it returns a
:class:`ValidationReport` that lists each violated constraint with a witness.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .cyclotomic import Cyclotomic
from .groups import FiniteGroup, GroupTableError


class DatasetError(ValueError):
    """Malformed input (schema or structural problem)."""


@dataclass(frozen=True)
class Failure:
    constraint: str
    witness: tuple
    expected: Any = None
    got: Any = None


@dataclass
class ValidationReport:
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, constraint: str, witness: tuple, expected: Any = None, got: Any = None) -> None:
        self.failures.append(Failure(constraint, tuple(witness), expected, got))

    def constraints(self) -> set[str]:
        return {f.constraint for f in self.failures}


@dataclass(frozen=True)
class FusionDatum:
    rank: int
    N: tuple  # rank x rank x rank nested tuples of ints
    bar: tuple[int, ...]
    kappa: int

    def __post_init__(self) -> None:
        try:
            N = tuple(tuple(tuple(int(x) for x in row) for row in mat) for mat in self.N)
        except (TypeError, ValueError) as exc:
            raise DatasetError(f"N is not an integer tensor: {exc}") from None
        n = self.rank
        if n < 1:
            raise DatasetError("rank must be positive")
        if len(N) != n or any(len(m) != n or any(len(r) != n for r in m) for m in N):
            raise DatasetError(f"N must have shape ({n}, {n}, {n})")
        if len(self.bar) != n or any(not 0 <= int(b) < n for b in self.bar):
            raise DatasetError("bar must list one label per simple object")
        if not 0 <= self.kappa < n:
            raise DatasetError("kappa out of range")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "bar", tuple(int(b) for b in self.bar))

    @property
    def labels(self) -> range:
        return range(self.rank)

    def tensor(self) -> np.ndarray:
        return np.array(self.N, dtype=np.int64)

    def with_entry(self, a: int, b: int, c: int, value: int) -> FusionDatum:
        N = [[list(r) for r in m] for m in self.N]
        N[a][b][c] = value
        return FusionDatum(self.rank, N, self.bar, self.kappa)

    def to_json(self) -> dict:
        return {"rank": self.rank, "N": [[list(r) for r in m] for m in self.N],
                "bar": list(self.bar), "kappa": self.kappa}

    @classmethod
    def from_json(cls, obj: dict) -> FusionDatum:
        try:
            return cls(int(obj["rank"]), obj["N"], tuple(obj["bar"]), int(obj["kappa"]))
        except (KeyError, TypeError) as exc:
            raise DatasetError(f"bad fusion dataset: {exc!r}") from None


@dataclass(frozen=True)
class PointedDatum:
    group: FiniteGroup
    root_order: int
    q: tuple[int, ...]  # theta_a = zeta_{root_order} ** q[a]
    b0: int

    def __post_init__(self) -> None:
        if self.root_order < 1:
            raise DatasetError("root_order must be positive")
        if len(self.q) != self.group.order:
            raise DatasetError("q needs one exponent per group element")
        if not 0 <= self.b0 < self.group.order:
            raise DatasetError("b0 is not a group element")
        object.__setattr__(self, "q", tuple(int(k) % self.root_order for k in self.q))

    @property
    def a0(self) -> int:
        return self.group.power(self.b0, -2)

    def dual(self, a: int) -> int:
        return self.group.mul(self.a0, self.group.inv(a))

    def theta(self, a: int) -> Cyclotomic:
        return Cyclotomic.zeta(self.q[a], self.root_order)

    def theta_exponent(self, a: int) -> Fraction:
        return Fraction(self.q[a], self.root_order)

    def double_braiding_exponent(self, a: int, b: int) -> Fraction:
        """Exponent of B(a, b) = theta(ab) / (theta(a) theta(b)), reduced mod 1."""
        g = self.group
        return (self.theta_exponent(g.mul(a, b)) - self.theta_exponent(a) - self.theta_exponent(b)) % 1

    def to_json(self) -> dict:
        return {"group": {"order": self.group.order, "table": [list(r) for r in self.group.table]},
                "q": {"root_order": self.root_order, "exponents": list(self.q)},
                "b0": self.b0}

    @classmethod
    def from_json(cls, obj: dict) -> PointedDatum:
        try:
            grp = obj["group"]
            table = grp["table"]
            if int(grp["order"]) != len(table):
                raise DatasetError("group order does not match table")
            return cls(FiniteGroup(tuple(map(tuple, table))), int(obj["q"]["root_order"]),
                       tuple(obj["q"]["exponents"]), int(obj["b0"]))
        except GroupTableError as exc:
            raise DatasetError(f"bad group table: {exc}") from None
        except (KeyError, TypeError) as exc:
            raise DatasetError(f"bad pointed dataset: {exc!r}") from None


def load_dataset(obj: dict) -> FusionDatum | PointedDatum:
    if "group" in obj:
        return PointedDatum.from_json(obj)
    return FusionDatum.from_json(obj)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def validate_fusion(d: FusionDatum) -> ValidationReport:
    rep = ValidationReport()
    N, k = d.N, d.kappa
    for a, b, c in itertools.product(d.labels, repeat=3):
        if N[a][b][c] < 0:
            rep.add("nonnegative", (a, b, c), ">= 0", N[a][b][c])
    for a, b in itertools.product(d.labels, repeat=2):
        want = int(a == b)
        if N[0][a][b] != want:
            rep.add("unit_left", (a, b), want, N[0][a][b])
        if N[a][0][b] != want:
            rep.add("unit_right", (a, b), want, N[a][0][b])
    for a, b, c in itertools.product(d.labels, repeat=3):
        # a braided category has commutative fusion rules
        if N[a][b][c] != N[b][a][c]:
            rep.add("commutative", (a, b, c), N[b][a][c], N[a][b][c])
    T = d.tensor()
    left = np.einsum("abe,ecd->abcd", T, T)
    right = np.einsum("bcf,afd->abcd", T, T)
    for a, b, c, dd in zip(*np.nonzero(left != right)):
        rep.add("associative", (int(a), int(b), int(c), int(dd)), int(right[a, b, c, dd]), int(left[a, b, c, dd]))
    for a in d.labels:
        if d.bar[d.bar[a]] != a:
            rep.add("bar_involution", (a,), a, d.bar[d.bar[a]])
    for a, b in itertools.product(d.labels, repeat=2):
        want = int(b == d.bar[a])
        if N[a][b][k] != want:
            rep.add("gv_duality", (a, b), want, N[a][b][k])
    return rep


def validate_pointed(p: PointedDatum) -> ValidationReport:
    rep = ValidationReport()
    g = p.group
    if not g.is_abelian:
        rep.add("abelian", (), True, False)
        return rep
    if p.q[0] != 0:
        rep.add("theta_unit", (0,), 0, p.q[0])
    B = p.double_braiding_exponent
    for a, b in itertools.product(g.elements, repeat=2):
        if B(a, b) != B(b, a):
            rep.add("B_symmetric", (a, b), B(b, a), B(a, b))
    for a, b, c in itertools.product(g.elements, repeat=3):
        if B(g.mul(a, b), c) != (B(a, c) + B(b, c)) % 1:
            rep.add("B_bicharacter", (a, b, c), (B(a, c) + B(b, c)) % 1, B(g.mul(a, b), c))
    for a in g.elements:
        # theta_{DX} = D theta_X
        if p.q[p.dual(a)] != p.q[a]:
            rep.add("theta_dual", (a, p.dual(a)), p.q[a], p.q[p.dual(a)])
    return rep


def validate(d: FusionDatum | PointedDatum) -> ValidationReport:
    if isinstance(d, PointedDatum):
        rep = validate_pointed(d)
        if rep.ok:
            rep.failures.extend(validate_fusion(pointed_to_fusion(d)).failures)
        return rep
    return validate_fusion(d)


def pointed_to_fusion(p: PointedDatum) -> FusionDatum:
    if not p.group.is_abelian:
        raise DatasetError("pointed data needs an abelian group")
    g, n = p.group, p.group.order
    N = [[[int(g.mul(a, b) == c) for c in range(n)] for b in range(n)] for a in range(n)]
    return FusionDatum(n, N, tuple(p.dual(a) for a in range(n)), p.a0)


def as_fusion(d: FusionDatum | PointedDatum) -> FusionDatum:
    return pointed_to_fusion(d) if isinstance(d, PointedDatum) else d


def is_r_category(d: FusionDatum | PointedDatum) -> bool:
    """True iff the dualizing object is the monoidal unit."""
    return as_fusion(d).kappa == 0


def quadratic_balancing(group: FiniteGroup, b0: int, scale: int = 1) -> tuple[int, tuple[int, ...]]:
    """A valid balancing for ``group`` with dualizing degree ``b0 ** -2``.

    Starts from the quadratic form ``Q(x) = prod_i zeta^(scale * x_i^2)`` on the
    cyclic coordinates (root ``zeta_{n_i}`` for odd ``n_i``, ``zeta_{2 n_i}`` for
    even ``n_i``) and shifts it, ``theta(a) = Q(a b0) / Q(b0)``, so that
    ``theta(a0 / a) == theta(a)``.  Returns ``(root_order, exponents)``.
    """
    dec = group.cyclic_decomposition
    roots = [n if n % 2 else 2 * n for _, n in dec]
    M = math.lcm(1, *roots)
    coords = group.coordinates

    def Q(a: int) -> int:
        return sum(scale * x * x * (M // r) for x, r in zip(coords[a], roots)) % M

    return M, tuple((Q(group.mul(a, b0)) - Q(b0)) % M for a in group.elements)


def pointed_family(max_order: int, scales=(0, 1)):
    """Every abelian group of order <= max_order with every b0, paired with
    quadratic balancings of the given scales (scale 0 is the trivial balancing)."""
    from .groups import abelian_group, abelian_group_types

    for ns in abelian_group_types(max_order):
        grp = abelian_group(*ns) if ns != (1,) else FiniteGroup(((0,),))
        for b0 in grp.elements:
            for s in scales:
                M, q = quadratic_balancing(grp, b0, s)
                yield ns, PointedDatum(grp, M, q, b0)
