"""The Z x Z/2 action on the solid-torus block of pointed data.

The block has one basis vector per group element ``a`` (the summand
``X_abar (x) X_a`` of F, with ``abar = a0 / a``).  The waist twist T acts by
``theta(a)``; the half-turn R sends ``a`` to ``abar`` with coefficient
``c(abar, a) * theta(a)``, where ``c`` is the braiding of the normalised
skeleton attached to the cyclic decomposition of G.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import ZERO, Cyclotomic, Matrix, identity_matrix, matmul, matrices_equal
from .gv_data import PointedDatum, ValidationReport


@dataclass(frozen=True)
class TorusRep:
    basis: tuple[int, ...]
    T: Matrix
    R: Matrix


def torus_block_basis(p: PointedDatum) -> tuple[int, ...]:
    return tuple(p.group.elements)


def _exp(f: Fraction) -> Cyclotomic:
    f %= 1
    return Cyclotomic.zeta(f.numerator, f.denominator)


def braiding_exponent(p: PointedDatum, a: int, b: int) -> Fraction:
    """Exponent of c(a, b) in units of a full turn.

    With coordinates x, y of a, b in the cyclic decomposition ``e_1, ..., e_k``:
    ``c(a, b) = prod_i B(e_i, e_i)^(x_i y_i / 2) * prod_{i<j} B(e_i, e_j)^(x_i y_j)``,
    the square root taken on the representative exponent in [0, 1).
    """
    g = p.group
    gens = [e for e, _ in g.cyclic_decomposition]
    x, y = g.coordinates[a], g.coordinates[b]
    out = Fraction(0)
    for i, ei in enumerate(gens):
        out += p.double_braiding_exponent(ei, ei) / 2 * x[i] * y[i]
        for j in range(i + 1, len(gens)):
            out += p.double_braiding_exponent(ei, gens[j]) * x[i] * y[j]
    return out % 1


def braiding_scalar(p: PointedDatum, a: int, b: int) -> Cyclotomic:
    return _exp(braiding_exponent(p, a, b))


def r_coefficient(p: PointedDatum, a: int) -> Cyclotomic:
    """Coefficient of R on the summand indexed by a."""
    return _exp(braiding_exponent(p, p.dual(a), a) + p.theta_exponent(a))


def t_matrix(p: PointedDatum, side: str = "right") -> Matrix:
    """diag(theta(a)); ``side="left"`` twists the dual factor instead, diag(theta(abar))."""
    if side not in ("left", "right"):
        raise ValueError("side is 'left' or 'right'")
    basis = torus_block_basis(p)
    val = {a: p.theta(a if side == "right" else p.dual(a)) for a in basis}
    return tuple(tuple(val[a] if a == b else ZERO for b in basis) for a in basis)


def r_matrix(p: PointedDatum) -> Matrix:
    basis = torus_block_basis(p)
    pos = {a: i for i, a in enumerate(basis)}
    rows = [[ZERO] * len(basis) for _ in basis]
    for a in basis:
        rows[pos[p.dual(a)]][pos[a]] = r_coefficient(p, a)
    return tuple(map(tuple, rows))


def torus_rep(p: PointedDatum) -> TorusRep:
    return TorusRep(torus_block_basis(p), t_matrix(p), r_matrix(p))


def monomial_inverse(m: Matrix) -> Matrix:
    """Inverse of a monomial matrix whose entries are roots of unity (conjugate transpose)."""
    n = len(m)
    return tuple(tuple(m[j][i].conjugate() for j in range(n)) for i in range(n))


def evaluate(rep: TorusRep, twists: int, flip: int) -> Matrix:
    """Image T^twists R^flip of the group element (twists, flip)."""
    n = len(rep.basis)
    step = rep.T if twists >= 0 else monomial_inverse(rep.T)
    out = identity_matrix(n)
    for _ in range(abs(twists)):
        out = matmul(out, step)
    return matmul(out, rep.R) if flip % 2 else out


def check_relations(p: PointedDatum, words: int = 20, max_length: int = 6, seed: int = 0) -> ValidationReport:
    """TR = RT, R^2 = 1, T diagonal with entries theta, both twist conventions agree,
    and words in the generators multiply like elements of Z x Z/2."""
    rep = torus_rep(p)
    report = ValidationReport()
    n = len(rep.basis)
    one = identity_matrix(n)
    TR, RT = matmul(rep.T, rep.R), matmul(rep.R, rep.T)
    if not matrices_equal(TR, RT):
        report.add("TR=RT", (), "equal", "differ")
    if not matrices_equal(matmul(rep.R, rep.R), one):
        report.add("R^2=1", (), "identity", "not identity")
    for i, a in enumerate(rep.basis):
        if rep.T[i][i] != p.theta(a):
            report.add("T=theta", (a,), p.theta(a).to_json(), rep.T[i][i].to_json())
    if not matrices_equal(t_matrix(p, "left"), rep.T):
        report.add("T_left=T_right", (), "equal", "differ")
    rng = random.Random(seed)
    gens = {"T": (rep.T, (1, 0)), "t": (monomial_inverse(rep.T), (-1, 0)), "R": (rep.R, (0, 1))}
    for _ in range(words):
        word = "".join(rng.choice("TtR") for _ in range(rng.randint(1, max_length)))
        mat, m, e = one, 0, 0
        for ch in word:
            g, (dm, de) = gens[ch]
            mat = matmul(mat, g)
            m, e = m + dm, (e + de) % 2
        if not matrices_equal(mat, evaluate(rep, m, e)):
            report.add("homomorphism", (word,), (m, e), "mismatch")
    return report


def sl2z_shadow() -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Images of T and R in SL(2, Z)."""
    return ((1, 0), (1, 1)), ((-1, 0), (0, -1))


def exponent_table(m: Matrix) -> list[list[list[int] | None]]:
    """Entries as [k, M] for zeta_M^k, None for zero; other entries raise."""
    out = []
    for row in m:
        r = []
        for x in row:
            if x == ZERO:
                r.append(None)
                continue
            root = x.root_of_unity()
            if root is None:
                raise ValueError(f"{x!r} is not a root of unity")
            r.append(list(root))
        out.append(r)
    return out

