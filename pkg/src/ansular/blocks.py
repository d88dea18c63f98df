"""Dimensions of conformal blocks on handlebodies.

Several independent routes to the same integers:

* ``handlebody_dim``: multiplicity of the dualizing label in
  ``X_1 (x) ... (x) X_n (x) F^g`` with ``F = sum_a X_abar (x) X_a``;
* ``handlebody_dim_bruteforce``: the literal sum over g-tuples of labels;
* ``graph_glue_dim``: label every internal edge of a graph and multiply
  genus-zero multiplicities at the vertices;
* ``pointed_dim``: the closed form for group-graded data;
* ``orbit_oracle``: Burnside count of simultaneous conjugation orbits.
"""

from __future__ import annotations

import functools
import itertools
import string
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .gv_data import FusionDatum, PointedDatum
from .graph_core import EnvelopeObject, Graph
from .groups import FiniteGroup


class LabelError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class HandlebodySignature:
    genus: int
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise LabelError("genus must be nonnegative")
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))


@dataclass(frozen=True)
class BlockResult:
    signature: HandlebodySignature
    dimension: int
    method: str


def _check_labels(d: FusionDatum, labels: Sequence[int]) -> None:
    for x in labels:
        if not 0 <= x < d.rank:
            raise LabelError(f"label {x} is not a simple of a rank-{d.rank} datum")


def _product_vector(d: FusionDatum, labels: Sequence[int]) -> np.ndarray:
    """Multiplicity vector of X_{l1} (x) ... (x) X_{lk}, starting from the unit."""
    N = d.tensor()
    v = np.zeros(d.rank, dtype=object)
    v[0] = 1
    for x in labels:
        v = v @ N[:, x, :].astype(object)
    return v


def genus_zero_dim(d: FusionDatum, labels: Sequence[int]) -> int:
    _check_labels(d, labels)
    return int(_product_vector(d, labels)[d.kappa])


def coend_vector(d: FusionDatum) -> np.ndarray:
    """Multiplicities of the simples in F."""
    N = d.tensor()
    return sum(N[d.bar[a], a, :] for a in d.labels).astype(object)


def handlebody_dim(d: FusionDatum, s: HandlebodySignature) -> BlockResult:
    _check_labels(d, s.labels)
    N = d.tensor().astype(object)
    right_F = np.einsum("b,abc->ac", coend_vector(d), N)
    v = _product_vector(d, s.labels)
    for _ in range(s.genus):
        v = v @ right_F
    return BlockResult(s, int(v[d.kappa]), "coend")


def handlebody_dim_bruteforce(d: FusionDatum, s: HandlebodySignature, budget: int | None = None) -> BlockResult:
    """Sum of genus-zero multiplicities over every g-tuple of labels (n^g terms)."""
    _check_labels(d, s.labels)
    if budget is not None and d.rank ** s.genus > budget:
        raise BudgetExceeded(f"{d.rank}^{s.genus} terms exceed the budget {budget}")
    total = 0
    for alphas in itertools.product(d.labels, repeat=s.genus):
        extra = [x for a in alphas for x in (d.bar[a], a)]
        total += genus_zero_dim(d, list(s.labels) + extra)
    return BlockResult(s, total, "sum")


def genus_two_formula(d: FusionDatum) -> int:
    """sum over a, a', b of N_{abar a}^b N_{a'bar a'}^{bbar}, as a plain loop."""
    total = 0
    for a, a2, b in itertools.product(d.labels, repeat=3):
        total += d.N[d.bar[a]][a][b] * d.N[d.bar[a2]][a2][d.bar[b]]
    return total


# -- gluing along graphs ---------------------------------------------------------------

@functools.lru_cache(maxsize=256)
def vertex_tensor(d: FusionDatum, valence: int) -> np.ndarray:
    """T[l1, ..., lk] = genus_zero_dim(d, [l1, ..., lk])."""
    N = d.tensor()
    t = np.zeros(d.rank, dtype=np.int64)
    t[0] = 1
    for _ in range(valence):
        t = np.tensordot(t, N, axes=([t.ndim - 1], [0]))
    return t[..., d.kappa]


def _graph_of(gamma: EnvelopeObject | Graph) -> Graph:
    return gamma.graph if isinstance(gamma, EnvelopeObject) else gamma


def _leg_values(d: FusionDatum, g: Graph, leg_labels: Mapping) -> dict:
    if set(leg_labels) != set(g.leg_map):
        raise LabelError(f"leg labels {sorted(leg_labels)} do not match the graph legs {sorted(g.leg_map)}")
    _check_labels(d, list(leg_labels.values()))
    return {g.leg_map[lab]: int(x) for lab, x in leg_labels.items()}


@functools.lru_cache(maxsize=4096)
def graph_tensor(d: FusionDatum, g: Graph) -> np.ndarray:
    """Glued multiplicities with one free index per leg, legs in sorted label order.

    One vertex tensor per vertex; each internal edge (h, h') carries a on h and
    abar on h'.
    """
    letters = iter(string.ascii_letters)
    index = {h: next(letters) for h in g.half_edges}
    operands, subscripts = [], []
    for v in g.vertices:
        hs = g.half_edges_at[v]
        operands.append(vertex_tensor(d, len(hs)))
        subscripts.append("".join(index[h] for h in hs))
    bar = np.zeros((d.rank, d.rank), dtype=np.int64)
    for a in d.labels:
        bar[a, d.bar[a]] = 1
    for h, k in g.edges:
        operands.append(bar)
        subscripts.append(index[h] + index[k])
    out = "".join(index[g.leg_map[lab]] for lab in sorted(g.leg_map))
    return np.einsum(",".join(subscripts) + "->" + out, *operands, optimize="greedy")


def graph_glue_dim(d: FusionDatum, gamma: EnvelopeObject | Graph, leg_labels: Mapping | None = None) -> BlockResult:
    g = _graph_of(gamma)
    legs = _leg_values(d, g, leg_labels or {})
    labels = tuple(legs[g.leg_map[lab]] for lab in sorted(g.leg_map))
    value = graph_tensor(d, g)[labels]
    return BlockResult(HandlebodySignature(g.betti, labels), int(value), "graph")


def graph_glue_dim_bruteforce(d: FusionDatum, gamma: EnvelopeObject | Graph, leg_labels: Mapping | None = None,
                              flip: Sequence[bool] = ()) -> int:
    """Same sum by explicit loops.  ``flip[i]`` reverses the orientation of edge i."""
    g = _graph_of(gamma)
    legs = _leg_values(d, g, leg_labels or {})
    edges = [((k, h) if i < len(flip) and flip[i] else (h, k)) for i, (h, k) in enumerate(g.edges)]
    total = 0
    for alphas in itertools.product(d.labels, repeat=len(edges)):
        lab = dict(legs)
        for (h, k), a in zip(edges, alphas):
            lab[h], lab[k] = a, d.bar[a]
        term = 1
        for v in g.vertices:
            term *= genus_zero_dim(d, [lab[h] for h in g.half_edges_at[v]])
            if not term:
                break
        total += term
    return total


# -- pointed data and group oracles ------------------------------------------------------

def pointed_dim(p: PointedDatum, s: HandlebodySignature) -> BlockResult:
    grp = p.group
    for x in s.labels:
        if not 0 <= x < grp.order:
            raise LabelError(f"{x} is not an element of a group of order {grp.order}")
    total = grp.product(list(s.labels) + [p.a0] * s.genus)
    return BlockResult(s, grp.order ** s.genus if total == p.a0 else 0, "pointed")


def orbit_oracle(group: FiniteGroup, genus: int) -> int:
    """Number of orbits of simultaneous conjugation on G^genus (Burnside)."""
    if genus < 0:
        raise LabelError("genus must be nonnegative")
    total = sum(group.centralizer_size(x) ** genus for x in group.elements)
    q, r = divmod(total, group.order)
    assert r == 0, "Burnside sum must be divisible by |G|"
    return q


def orbit_count_bruteforce(group: FiniteGroup, genus: int) -> int:
    """Orbits of simultaneous conjugation on G^genus, by explicit union of orbits."""
    seen: set = set()
    orbits = 0
    inv = group.inverses
    for tup in itertools.product(group.elements, repeat=genus):
        if tup in seen:
            continue
        orbits += 1
        for x in group.elements:
            seen.add(tuple(group.mul(group.mul(x, t), inv[x]) for t in tup))
    return orbits
