"""Finite groups given by multiplication tables.

Element 0 is always the identity.  Tables are lists of rows, ``table[a][b]``
being the index of the product ``a*b``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property


class GroupTableError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", tuple(tuple(int(x) for x in row) for row in self.table))
        check_group_table(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = 0
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def product(self, elems) -> int:
        out = 0
        for e in elems:
            out = self.mul(out, e)
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in self.elements for b in self.elements)

    def centralizer_size(self, x: int) -> int:
        return sum(1 for y in self.elements if self.mul(x, y) == self.mul(y, x))

    @cached_property
    def cyclic_decomposition(self) -> tuple[tuple[int, int], ...]:
        """Generators with orders ``((g_1, n_1), ...)`` such that
        ``prod Z/n_i -> G, x -> sum x_i g_i`` is an isomorphism."""
        if not self.is_abelian:
            raise GroupTableError("cyclic decomposition needs an abelian group")
        if self.order == 1:
            return ()
        orders = {a: self.element_order(a) for a in self.elements if a}
        cands = sorted(orders, key=lambda a: (-orders[a], a))
        for k in range(1, self.order.bit_length() + 1):
            for gens in itertools.combinations(cands, k):
                ns = [orders[g] for g in gens]
                if math.prod(ns) != self.order:
                    continue
                image = {self.product(self.power(g, x) for g, x in zip(gens, xs))
                         for xs in itertools.product(*(range(n) for n in ns))}
                if len(image) == self.order:
                    return tuple(zip(gens, ns))
        raise AssertionError("unreachable for a finite abelian group")

    @cached_property
    def coordinates(self) -> tuple[tuple[int, ...], ...]:
        """Coordinates of every element in the cyclic decomposition."""
        dec = self.cyclic_decomposition
        out: dict[int, tuple[int, ...]] = {}
        for xs in itertools.product(*(range(n) for _, n in dec)):
            out[self.product(self.power(g, x) for (g, _), x in zip(dec, xs))] = xs
        return tuple(out[a] for a in self.elements)


def check_group_table(table) -> None:
    n = len(table)
    if n == 0:
        raise GroupTableError("empty table")
    if any(len(row) != n for row in table):
        raise GroupTableError("table is not square")
    if any(not 0 <= x < n for row in table for x in row):
        raise GroupTableError("entry out of range")
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise GroupTableError("element 0 is not the identity")
        if len(set(table[a])) != n or len({table[b][a] for b in range(n)}) != n:
            raise GroupTableError(f"row/column {a} is not a permutation")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupTableError(f"not associative at {(a, b, c)}")


def abelian_group(*orders: int) -> FiniteGroup:
    """Z/n_1 x ... x Z/n_k with elements in lexicographic coordinate order."""
    elems = list(itertools.product(*(range(n) for n in orders)))
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[tuple((x + y) % n for x, y, n in zip(a, b, orders))] for b in elems] for a in elems]
    return FiniteGroup(tuple(map(tuple, table)))


def cyclic_group(n: int) -> FiniteGroup:
    return abelian_group(n) if n > 1 else FiniteGroup(((0,),))


def permutation_group(perms: list[tuple[int, ...]]) -> FiniteGroup:
    """Group table of a list of permutations closed under composition; perms[0] must be the identity."""
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(len(p)))] for q in perms] for p in perms]
    return FiniteGroup(tuple(map(tuple, table)))


def symmetric_group(n: int) -> FiniteGroup:
    return permutation_group(sorted(itertools.permutations(range(n))))


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    ref = [tuple((k - i) % n for i in range(n)) for k in range(n)]
    return permutation_group(rot + ref)


def abelian_group_types(max_order: int) -> list[tuple[int, ...]]:
    """One cyclic-factor type per isomorphism class of abelian groups of order <= max_order."""
    out = []
    for order in range(1, max_order + 1):
        seen = []
        for k in range(1, max(1, order.bit_length()) + 1):
            for ns in itertools.combinations_with_replacement(
                    [d for d in range(2, order + 1) if order % d == 0] or [1], k):
                if math.prod(ns) != order:
                    continue
                # invariant factors n_1 | n_2 | ... pick one representative per class
                if all(ns[i + 1] % ns[i] == 0 for i in range(len(ns) - 1)):
                    seen.append(ns)
        out.extend(seen or [(1,)])
    return out


NAMED_GROUPS = {
    "s3": lambda: symmetric_group(3),
    "d4": lambda: dihedral_group(4),
}


def named_group(name: str) -> FiniteGroup:
    name = name.lower()
    if name in NAMED_GROUPS:
        return NAMED_GROUPS[name]()
    if name.startswith("z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    raise KeyError(f"unknown group {name!r}")
