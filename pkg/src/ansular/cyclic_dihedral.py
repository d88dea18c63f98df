"""Connes' cyclic category, its degeneracy-free part, and the dihedral extension.

A morphism ``[n] -> [m]`` is a class of non-decreasing maps ``f: Z -> Z`` with
``f(i + n + 1) = f(i) + m + 1``, modulo adding multiples of ``m + 1``.  It is
stored by the values ``f(0), ..., f(n)`` shifted so that ``0 <= f(0) <= m``.

Composition is written both ways: ``compose(f, g)`` is "f, then g" and
``g @ f`` is the usual ``g o f``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .graph_core import Graph, GraphMap, circle


class MorphismError(ValueError):
    pass


@dataclass(frozen=True)
class CyclicMorphism:
    src: int
    dst: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n, m = self.src, self.dst
        if n < 0 or m < 0:
            raise MorphismError("objects are [n] with n >= 0")
        vals = tuple(int(v) for v in self.values)
        if len(vals) != n + 1:
            raise MorphismError(f"need {n + 1} values for a map out of [{n}]")
        shift = (vals[0] // (m + 1)) * (m + 1)
        vals = tuple(v - shift for v in vals)
        if any(a > b for a, b in zip(vals, vals[1:])) or vals[-1] > vals[0] + m + 1:
            raise MorphismError(f"{vals} is not non-decreasing with period {m + 1}")
        object.__setattr__(self, "values", vals)

    def __call__(self, i: int) -> int:
        q, r = divmod(i, self.src + 1)
        return self.values[r] + q * (self.dst + 1)

    def __matmul__(self, other: CyclicMorphism) -> CyclicMorphism:
        return compose(other, self)

    @property
    def degeneracy_free(self) -> bool:
        """True for morphisms of the subcategory generated by faces and cyclic maps."""
        v = self.values
        return all(a < b for a, b in zip(v, v[1:])) and v[-1] < v[0] + self.dst + 1

    def __str__(self) -> str:
        return f"[{self.src}]->[{self.dst}]:" + ",".join(map(str, self.values))


def identity(n: int) -> CyclicMorphism:
    return CyclicMorphism(n, n, tuple(range(n + 1)))


def face(i: int, n: int) -> CyclicMorphism:
    """delta_i : [n-1] -> [n], skipping i."""
    if n < 1 or not 0 <= i <= n:
        raise MorphismError(f"face delta_{i} into [{n}] out of range")
    return CyclicMorphism(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))


def degeneracy(j: int, n: int) -> CyclicMorphism:
    """sigma_j : [n+1] -> [n], hitting j twice."""
    if n < 0 or not 0 <= j <= n:
        raise MorphismError(f"degeneracy sigma_{j} onto [{n}] out of range")
    return CyclicMorphism(n + 1, n, tuple(k if k <= j else k - 1 for k in range(n + 2)))


def cyclic(n: int) -> CyclicMorphism:
    """tau_n : [n] -> [n], i -> i - 1."""
    if n < 0:
        raise MorphismError("objects are [n] with n >= 0")
    return CyclicMorphism(n, n, tuple(i - 1 for i in range(n + 1)))


def generator(kind: str, n: int, index: int = 0) -> CyclicMorphism:
    kind = {"δ": "d", "σ": "s", "τ": "t"}.get(kind, kind)
    if kind == "d":
        return face(index, n)
    if kind == "s":
        return degeneracy(index, n)
    if kind == "t":
        return cyclic(n)
    raise MorphismError(f"unknown generator kind {kind!r}")


def compose(f: CyclicMorphism, g: CyclicMorphism) -> CyclicMorphism:
    """g o f."""
    if f.dst != g.src:
        raise MorphismError(f"cannot compose [{f.src}]->[{f.dst}] with [{g.src}]->[{g.dst}]")
    return CyclicMorphism(f.src, g.dst, tuple(g(f(i)) for i in range(f.src + 1)))


def power(f: CyclicMorphism, k: int) -> CyclicMorphism:
    if f.src != f.dst:
        raise MorphismError("powers need an endomorphism")
    if k < 0:
        f, k = inverse(f), -k
    out = identity(f.src)
    for _ in range(k):
        out = f @ out
    return out


def inverse(f: CyclicMorphism) -> CyclicMorphism:
    for g in automorphisms(f.src):
        if g @ f == identity(f.src):
            return g
    raise MorphismError(f"{f} is not invertible")


def reversal(f: CyclicMorphism) -> CyclicMorphism:
    """p -> m - f(n - p)."""
    n, m = f.src, f.dst
    return CyclicMorphism(n, m, tuple(m - f(n - p) for p in range(n + 1)))


def morphisms(n: int, m: int, degeneracy_free: bool = False) -> list[CyclicMorphism]:
    """Every morphism [n] -> [m], normalised, in lexicographic order."""
    out = []
    for v0 in range(m + 1):
        for rest in itertools.combinations_with_replacement(range(v0, v0 + m + 2), n):
            try:
                f = CyclicMorphism(n, m, (v0,) + rest)
            except MorphismError:
                continue
            if not degeneracy_free or f.degeneracy_free:
                out.append(f)
    return out


def automorphisms(n: int) -> list[CyclicMorphism]:
    return [power(cyclic(n), k) for k in range(n + 1)] if n >= 0 else []


# -- generator words --------------------------------------------------------------

_TOKEN = re.compile(r"^(d|s)(\d+):(\d+)$|^t(\d+)$|^id(\d+)$|^r(\d+)$")


def to_word(f: CyclicMorphism) -> str:
    """A generator word for f, read right to left as composition.

    Uses ``f = phi o tau_n^k`` with ``phi`` simplicial, and writes ``phi`` in the
    normal form (faces, descending) o (degeneracies, ascending).
    """
    n, m = f.src, f.dst
    for k in range(n + 1):
        phi = f @ power(cyclic(n), -k)
        if phi.values[-1] <= m:
            break
    else:  # pragma: no cover
        raise AssertionError("every cyclic morphism has a simplicial part")
    v = phi.values
    rank = len(set(v)) - 1
    faces = [i for i in range(m + 1) if i not in set(v)]
    degs = [j for j in range(n) if v[j] == v[j + 1]]
    word = [f"d{i}:{rank + r + 1}" for r, i in enumerate(faces)][::-1]
    word += [f"s{j}:{rank + r}" for r, j in enumerate(degs)]
    word += [f"t{n}"] * k
    return " ".join(word) or f"id{n}"


def from_word(word: str) -> CyclicMorphism | DihedralMorphism:
    """Parse a right-to-left word of tokens ``dI:N``, ``sJ:N``, ``tN``, ``idN`` and ``rN``.

    ``rN`` is the flip at [N]; a word containing one parses to a dihedral morphism.
    """
    tokens = word.split()
    if not tokens:
        raise MorphismError("empty word")
    acc: CyclicMorphism | DihedralMorphism | None = None
    for tok in reversed(tokens):
        mt = _TOKEN.match(tok)
        if not mt:
            raise MorphismError(f"bad token {tok!r}")
        if mt.group(6):
            flip = DihedralMorphism(identity(int(mt.group(6))), 1)
            if acc is None:
                acc = flip
            else:
                acc = flip @ (acc if isinstance(acc, DihedralMorphism) else DihedralMorphism(acc, 0))
            continue
        if mt.group(1):
            gen = generator(mt.group(1), int(mt.group(3)), int(mt.group(2)))
        elif mt.group(4):
            gen = cyclic(int(mt.group(4)))
        else:
            gen = identity(int(mt.group(5)))
        if acc is None:
            acc = gen
        elif isinstance(acc, DihedralMorphism):
            acc = DihedralMorphism(gen, 0) @ acc
        else:
            acc = gen @ acc
    return acc


def dihedral_word(x: DihedralMorphism) -> str:
    """(f, 1) = (f, 0) o (id, 1), so the flip is applied first."""
    w = to_word(x.base)
    if not x.flip:
        return w
    return f"r{x.src}" if w == f"id{x.src}" else f"{w} r{x.src}"


def parse_morphism(text: str) -> CyclicMorphism | DihedralMorphism:
    """Either a value list ``[n]->[m]:v0,...`` (optionally followed by `` r``) or a word."""
    text = text.strip()
    if "->" in text:
        flip = text.endswith(" r")
        f = from_values(text[:-2] if flip else text)
        return DihedralMorphism(f, 1) if flip else f
    return from_word(text)


def from_values(text: str) -> CyclicMorphism:
    """Parse ``[n]->[m]:v0,v1,...``."""
    mt = re.fullmatch(r"\s*\[(\d+)\]\s*->\s*\[(\d+)\]\s*:\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*", text)
    if not mt:
        raise MorphismError(f"cannot parse {text!r}")
    return CyclicMorphism(int(mt.group(1)), int(mt.group(2)), tuple(int(x) for x in mt.group(3).split(",")))


# -- the dihedral category ---------------------------------------------------------------

@dataclass(frozen=True)
class DihedralMorphism:
    """A pair (f, flip) in the Grothendieck construction of the reversal action;
    composition is (g, e) o (f, d) = (g o r^e(f), d + e)."""

    base: CyclicMorphism
    flip: int = 0

    def __post_init__(self) -> None:
        if self.flip not in (0, 1):
            raise MorphismError("flip is 0 or 1")

    @property
    def src(self) -> int:
        return self.base.src

    @property
    def dst(self) -> int:
        return self.base.dst

    def __matmul__(self, other: DihedralMorphism) -> DihedralMorphism:
        return compose_dihedral(other, self)

    def __str__(self) -> str:
        return f"{self.base}" + (" r" if self.flip else "")

    @property
    def degeneracy_free(self) -> bool:
        return self.base.degeneracy_free


def compose_dihedral(f: DihedralMorphism, g: DihedralMorphism) -> DihedralMorphism:
    """g o f."""
    fb = reversal(f.base) if g.flip else f.base
    return DihedralMorphism(compose(fb, g.base), (f.flip + g.flip) % 2)


def dihedral_identity(n: int) -> DihedralMorphism:
    return DihedralMorphism(identity(n), 0)


def dihedral_morphisms(n: int, m: int, degeneracy_free: bool = True) -> list[DihedralMorphism]:
    return [DihedralMorphism(f, e) for e in (0, 1) for f in morphisms(n, m, degeneracy_free)]


def dihedral_automorphisms(n: int) -> list[DihedralMorphism]:
    return [DihedralMorphism(f, e) for e in (0, 1) for f in automorphisms(n)]


def face_composites(n: int, m: int) -> list[CyclicMorphism]:
    """Composites of faces [n] -> [m]: strictly increasing maps inside 0..m."""
    return [CyclicMorphism(n, m, c) for c in itertools.combinations(range(m + 1), n + 1)]


def relation_failures(max_n: int = 5) -> list[tuple[str, tuple]]:
    """Check the simplicial and cyclic relations for all valid indices up to ``max_n``.

    Returns (relation name, indices) for every relation that does not hold.
    """
    d, s, t = face, degeneracy, cyclic
    bad = []

    def check(name, idx, lhs, rhs):
        if lhs != rhs:
            bad.append((name, idx))

    for n in range(0, max_n + 1):
        check("tau^(n+1)=id", (n,), power(t(n), n + 1), identity(n))
        for i in range(n + 1):
            for j in range(i, n + 1):
                # faces [n-2] -> [n], degeneracies [n+2] -> [n]
                if n >= 2 and i < j:
                    check("dd", (n, i, j), d(j, n) @ d(i, n - 1), d(i, n) @ d(j - 1, n - 1))
                check("ss", (n, i, j), s(j, n) @ s(i, n + 1), s(i, n) @ s(j + 1, n + 1))
        for j in range(n + 1):
            for i in range(n + 2):
                # [n] -> [n+1] -> [n]
                lhs = s(j, n) @ d(i, n + 1)
                if i < j:
                    rhs = d(i, n) @ s(j - 1, n - 1) if n >= 1 else None
                elif i in (j, j + 1):
                    rhs = identity(n)
                else:
                    rhs = d(i - 1, n) @ s(j, n - 1) if n >= 1 else None
                if rhs is not None:
                    check("sd", (n, i, j), lhs, rhs)
        if n >= 1:
            for i in range(1, n + 1):
                check("t.d_i", (n, i), t(n) @ d(i, n), d(i - 1, n) @ t(n - 1))
            check("t.d_0", (n,), t(n) @ d(0, n), d(n, n))
        for i in range(1, n + 1):
            check("t.s_i", (n, i), t(n) @ s(i, n), s(i - 1, n) @ t(n + 1))
        check("t.s_0", (n,), t(n) @ s(0, n), s(n, n) @ power(t(n + 1), 2))
    return bad


# -- the functor to genus-one graphs ------------------------------------------------------

def psi_object(n: int) -> Graph:
    """A circle with n + 1 bivalent vertices labelled 0..n."""
    return circle(n + 1)


def psi(x: DihedralMorphism | CyclicMorphism) -> GraphMap:
    """Image of a degeneracy-free dihedral morphism f: [m] -> [n] as a graph map
    psi([n]) -> psi([m]) (the functor is contravariant in this direction).

    Vertex v of the source circle goes to the j with ``f(j-1) < v <= f(j)``
    cyclically; the edge (v, v+1) survives exactly when v is some ``f(j)``, and
    then becomes the edge (j, j+1).  The flip sends vertex i to ``-i``.
    """
    if isinstance(x, CyclicMorphism):
        x = DihedralMorphism(x, 0)
    f = x.base
    if not f.degeneracy_free:
        raise MorphismError(f"{f} uses a degeneracy")
    m, n = f.src, f.dst
    vmap, hmap = {}, {}
    for j in range(m + 1):
        for v in range(f(j - 1) + 1, f(j) + 1):
            vmap[v % (n + 1)] = j
    for v in range(n + 1):
        hmap[(v, 0)] = hmap[((v + 1) % (n + 1), 1)] = None
    for j in range(m + 1):
        v = f(j) % (n + 1)
        hmap[(v, 0)] = (j, 0)
        hmap[((v + 1) % (n + 1), 1)] = ((j + 1) % (m + 1), 1)
    out = GraphMap.make(vmap, hmap)
    if x.flip:
        out = out.then(reflection(m))
    return out


def reflection(n: int) -> GraphMap:
    """Vertex i -> -i on psi([n]); half-edge (v, s) -> (-v, 1 - s)."""
    k = n + 1
    return GraphMap.make({v: (-v) % k for v in range(k)},
                         {(v, s): ((-v) % k, 1 - s) for v in range(k) for s in (0, 1)})


def generators_from(n: int) -> list[CyclicMorphism]:
    """Every face, degeneracy and cyclic generator with source [n]."""
    out = [cyclic(n)]
    out += [face(i, n + 1) for i in range(n + 2)]
    if n >= 1:
        out += [degeneracy(j, n - 1) for j in range(n)]
    return out


def reversal_failures(max_n: int = 3) -> list[tuple[str, str]]:
    """r is involutive on every morphism and r(g f) = r(g) r(f) for every generator g."""
    bad = []
    for n in range(max_n + 1):
        for m in range(max_n + 1):
            for f in morphisms(n, m):
                if reversal(reversal(f)) != f:
                    bad.append(("involutive", str(f)))
                for g in generators_from(m):
                    if reversal(g @ f) != reversal(g) @ reversal(f):
                        bad.append(("functorial", f"{g} after {f}"))
    return bad


def factorizations(f: DihedralMorphism) -> list[tuple[CyclicMorphism, DihedralMorphism]]:
    """All ways of writing f as a face composite after an automorphism."""
    return [(delta, u) for u in dihedral_automorphisms(f.src) for delta in face_composites(f.src, f.dst)
            if DihedralMorphism(delta, 0) @ u == f]


def circle_automorphism_count(n: int) -> int:
    from .graph_core import isomorphisms

    return sum(1 for _ in isomorphisms(psi_object(n), psi_object(n)))


def suite(max_n: int = 5, max_hom: int = 3) -> list[tuple[str, bool, str]]:
    """(check, passed, detail) rows for the whole cyclic/dihedral verification."""
    from .graph_core import collapse_morphisms

    rows = []
    bad = relation_failures(max_n)
    rows.append((f"relations n<={max_n}", not bad, f"{len(bad)} failures" + (f", first {bad[0]}" if bad else "")))
    bad = reversal_failures(min(max_n, max_hom))
    rows.append(("reversal involutive functor", not bad, f"{len(bad)} failures"))
    for n in range(max_n + 1):
        k = len(dihedral_automorphisms(n))
        ok = k == 2 * (n + 1) and all(f @ inverse_dihedral(f) == dihedral_identity(n) for f in dihedral_automorphisms(n))
        rows.append((f"|Aut[{n}]|", ok, f"{k} (expected {2 * (n + 1)})"))
        if n <= max_hom:
            g = circle_automorphism_count(n)
            rows.append((f"|Aut psi[{n}]|", g == k, f"{g} graph automorphisms"))
    for m in range(max_hom + 1):
        for n in range(max_hom + 1):
            homs = dihedral_morphisms(m, n)
            unique = all(len(factorizations(f)) == 1 for f in homs)
            rows.append((f"factorization [{m}]->[{n}]", unique, f"{len(homs)} morphisms"))
            maps = collapse_morphisms(psi_object(n), psi_object(m))
            images = {psi(f) for f in homs}
            ok = len(maps) == len(homs) == len(images) and images == set(maps)
            rows.append((f"hom [{m}]->[{n}] vs graphs", ok, f"{len(homs)} vs {len(maps)}"))
    return rows


def inverse_dihedral(f: DihedralMorphism) -> DihedralMorphism:
    for g in dihedral_automorphisms(f.dst):
        if g @ f == dihedral_identity(f.src):
            return g
    raise MorphismError(f"{f} is not invertible")
