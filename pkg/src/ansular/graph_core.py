"""Half-edge graphs with legs and the category of graphs built from them.

A :class:`Graph` is a set of vertices, a set of half-edges each attached to a
vertex, a fixed-point-free partial involution pairing half-edges into internal
edges, and a labelling of the remaining (unpaired) half-edges, the legs.

Vertex ids are ints, half-edge ids are ``(vertex, slot)`` tuples when they come
from JSON or from the enumerator; operations keep half-edge ids stable so
that morphism data can refer to them.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

HalfEdge = Hashable


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    attach: tuple  # sorted (half_edge, vertex) pairs
    edges: tuple  # sorted (h, h') pairs with h < h'
    legs: tuple  # sorted (label, half_edge) pairs

    @classmethod
    def build(cls, vertices: Iterable, attach: Mapping, edges: Iterable = (), legs: Mapping | None = None) -> Graph:
        edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        legs = tuple(sorted((legs or {}).items()))
        return cls(tuple(sorted(set(vertices))), tuple(sorted(attach.items())), edges, legs)

    def __post_init__(self) -> None:
        verts = set(self.vertices)
        if len(verts) != len(self.vertices):
            raise GraphError("duplicate vertex")
        att = dict(self.attach)
        if len(att) != len(self.attach):
            raise GraphError("half-edge attached twice")
        for h, v in att.items():
            if v not in verts:
                raise GraphError(f"half-edge {h!r} attached to unknown vertex {v!r}")
        used: list = [h for e in self.edges for h in e] + [h for _, h in self.legs]
        for e in self.edges:
            if len(e) != 2 or e[0] == e[1]:
                raise GraphError(f"edge {e!r} is not a pair of distinct half-edges")
        if len(set(used)) != len(used):
            raise GraphError("half-edge used by two edges/legs")
        if set(used) != set(att):
            raise GraphError("every half-edge must be either paired or a labelled leg")
        if len({lab for lab, _ in self.legs}) != len(self.legs):
            raise GraphError("duplicate leg label")

    # -- lookups ----------------------------------------------------------
    @cached_property
    def attach_map(self) -> dict:
        return dict(self.attach)

    @cached_property
    def leg_map(self) -> dict:
        """label -> half-edge"""
        return dict(self.legs)

    @cached_property
    def leg_labels(self) -> dict:
        """half-edge -> label"""
        return {h: lab for lab, h in self.legs}

    @cached_property
    def partner(self) -> dict:
        out = {}
        for a, b in self.edges:
            out[a], out[b] = b, a
        return out

    @property
    def half_edges(self) -> list:
        return [h for h, _ in self.attach]

    @cached_property
    def half_edges_at(self) -> dict:
        out: dict = {v: [] for v in self.vertices}
        for h, v in self.attach:
            out[v].append(h)
        return out

    def valence(self, v) -> int:
        return len(self.half_edges_at[v])

    @cached_property
    def components(self) -> tuple[frozenset, ...]:
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        att = self.attach_map
        for a, b in self.edges:
            ra, rb = find(att[a]), find(att[b])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups = defaultdict(set)
        for v in self.vertices:
            groups[find(v)].add(v)
        return tuple(sorted((frozenset(g) for g in groups.values()), key=min))

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def betti(self) -> int:
        return len(self.edges) - len(self.vertices) + len(self.components)

    def edge_of(self, h) -> tuple:
        if h not in self.partner:
            raise GraphError(f"{h!r} is not an internal half-edge")
        return tuple(sorted((h, self.partner[h])))

    def multigraph(self) -> tuple[Counter, dict]:
        """Adjacency counts keyed by sorted vertex pairs, and leg label -> vertex."""
        att = self.attach_map
        adj = Counter(tuple(sorted((att[a], att[b]))) for a, b in self.edges)
        return adj, {lab: att[h] for lab, h in self.legs}

    def __repr__(self) -> str:
        return f"Graph(V={list(self.vertices)}, E={len(self.edges)}, legs={[lab for lab, _ in self.legs]})"


# -- constructors -------------------------------------------------------------

@dataclass(frozen=True)
class Corolla:
    legs: tuple = ()
    id: int = 0

    def __post_init__(self) -> None:
        if len(set(self.legs)) != len(self.legs):
            raise GraphError("corolla legs must be distinct")

    def graph(self) -> Graph:
        return corolla(self.legs, self.id)


def corolla(legs: Sequence = (), vertex: int = 0) -> Graph:
    legs = list(legs)
    return Graph.build([vertex], {(vertex, i): vertex for i in range(len(legs))},
                       legs={lab: (vertex, i) for i, lab in enumerate(legs)})


def T(n: int) -> Corolla:
    """The corolla with n + 1 legs labelled "0", ..., "n"."""
    return Corolla(tuple(str(i) for i in range(n + 1)))


BULLET = Corolla(())


def disjoint_union(*graphs: Graph) -> Graph:
    verts, att, edges, legs = [], {}, [], {}
    for g in graphs:
        verts.extend(g.vertices)
        att.update(g.attach_map)
        edges.extend(g.edges)
        for lab, h in g.legs:
            if lab in legs:
                raise GraphError(f"leg label {lab!r} occurs twice")
            legs[lab] = h
    if len(set(verts)) != len(verts) or len(att) != sum(len(g.attach) for g in graphs):
        raise GraphError("graphs are not disjoint")
    return Graph.build(verts, att, edges, legs)


def circle(k: int, legs: Mapping | None = None) -> Graph:
    """Cycle with k >= 1 vertices; half-edge (v, 0) points to v+1, (v, 1) comes from v-1."""
    att = {(v, s): v for v in range(k) for s in (0, 1)}
    edges = [((v, 0), ((v + 1) % k, 1)) for v in range(k)]
    leg_map = {}
    for lab, v in (legs or {}).items():
        h = (v, 2 + sum(1 for u in leg_map.values() if u[0] == v))
        att[h] = v
        leg_map[lab] = h
    return Graph.build(range(k), att, edges, leg_map)


def half_edge_label(h) -> str:
    return ":".join(map(str, h)) if isinstance(h, tuple) else str(h)


# -- nu, pi0, contraction -----------------------------------------------------

def nu(g: Graph) -> Graph:
    """Cut every internal edge: a disjoint union of corollas on the same half-edges."""
    legs = dict(g.legs)
    for a, b in g.edges:
        for h in (a, b):
            lab = half_edge_label(h)
            if lab in legs:
                raise GraphError(f"label {lab!r} of a severed half-edge clashes with a leg")
            legs[lab] = h
    return Graph.build(g.vertices, g.attach_map, (), legs)


def pi0(g: Graph) -> Graph:
    """Contract every internal edge: one corolla per component, named by its least vertex."""
    rep = {v: min(c) for c in g.components for v in c}
    att = {h: rep[g.attach_map[h]] for _, h in g.legs}
    return Graph.build(set(rep.values()), att, (), dict(g.legs))


def contract_edge(g: Graph, e) -> Graph:
    """Contract the internal edge ``e`` (a half-edge or a pair); the merged vertex keeps the smaller id."""
    if e in g.partner:
        a, b = g.edge_of(e)
    elif isinstance(e, tuple) and tuple(sorted(e)) in set(g.edges):
        a, b = sorted(e)
    else:
        raise GraphError(f"{e!r} is not an internal edge")
    u, w = g.attach_map[a], g.attach_map[b]
    if u == w:
        raise GraphError("cannot contract a self-loop")
    keep, drop = min(u, w), max(u, w)
    att = {h: (keep if v == drop else v) for h, v in g.attach if h not in (a, b)}
    edges = [x for x in g.edges if x != (a, b)]
    return Graph.build([v for v in g.vertices if v != drop], att, edges, dict(g.legs))


@dataclass(frozen=True)
class CollapseResult:
    graph: Graph
    steps: tuple  # (collapsed vertex, absorbing vertex, edge)
    one_leg_exception: bool


def is_reduced(g: Graph) -> bool:
    """No vertex of valence one, except for the one-leg corolla itself."""
    if _is_one_leg_corolla(g):
        return True
    return all(g.valence(v) != 1 for v in g.vertices)


def _is_one_leg_corolla(g: Graph) -> bool:
    return len(g.vertices) == 1 and not g.edges and len(g.legs) == 1


def collapse_reduced(g: Graph) -> CollapseResult:
    """Collapse univalent vertices into their neighbours until the graph is reduced."""
    if not g.is_connected:
        raise GraphError("collapse_reduced needs a connected graph")
    steps = []
    while True:
        pend = [v for v in g.vertices if g.valence(v) == 1 and g.half_edges_at[v][0] in g.partner]
        if not pend:
            break
        v = pend[0]
        h = g.half_edges_at[v][0]
        w = g.attach_map[g.partner[h]]
        edge = g.edge_of(h)
        g = contract_edge(g, edge)
        steps.append((v, w, edge))
    return CollapseResult(g, tuple(steps), _is_one_leg_corolla(g))


# -- isomorphism ---------------------------------------------------------------

def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Multigraph isomorphism respecting leg labels, by trying every vertex bijection."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return False
    adj1, legs1 = g1.multigraph()
    adj2, legs2 = g2.multigraph()
    if set(legs1) != set(legs2):
        return False
    for perm in itertools.permutations(g2.vertices):
        phi = dict(zip(g1.vertices, perm))
        if any(phi[legs1[lab]] != legs2[lab] for lab in legs1):
            continue
        if Counter({tuple(sorted((phi[a], phi[b]))): c for (a, b), c in adj1.items()}) == adj2:
            return True
    return False


def isomorphisms(g1: Graph, g2: Graph) -> Iterator[tuple[dict, dict]]:
    """All isomorphisms g1 -> g2 at the half-edge level, as (vertex map, half-edge map).

    Leg labels are preserved; loops contribute both orientations and parallel
    edges all matchings.
    """
    if (len(g1.vertices), len(g1.attach), len(g1.edges)) != (len(g2.vertices), len(g2.attach), len(g2.edges)):
        return
    if {lab for lab, _ in g1.legs} != {lab for lab, _ in g2.legs}:
        return
    adj1, legs1 = g1.multigraph()
    adj2, legs2 = g2.multigraph()
    att1, att2 = g1.attach_map, g2.attach_map
    by_pair1, by_pair2 = defaultdict(list), defaultdict(list)
    for e in g1.edges:
        by_pair1[tuple(sorted((att1[e[0]], att1[e[1]])))].append(e)
    for e in g2.edges:
        by_pair2[tuple(sorted((att2[e[0]], att2[e[1]])))].append(e)

    for perm in itertools.permutations(g2.vertices):
        phi = dict(zip(g1.vertices, perm))
        if any(g1.valence(v) != g2.valence(phi[v]) for v in g1.vertices):
            continue
        if any(phi[legs1[lab]] != legs2[lab] for lab in legs1):
            continue
        if Counter({tuple(sorted((phi[a], phi[b]))): c for (a, b), c in adj1.items()}) != adj2:
            continue
        choices = []
        for pair, es in by_pair1.items():
            tgt = by_pair2[tuple(sorted((phi[pair[0]], phi[pair[1]])))]
            options = []
            for matched in itertools.permutations(tgt):
                flips = [(0, 1)] * len(es) if pair[0] == pair[1] else [(0,)] * len(es)
                for orient in itertools.product(*flips):
                    hm = {}
                    for (a, b), (c, d), o in zip(es, matched, orient):
                        if pair[0] != pair[1]:
                            # orientation forced by endpoints
                            if phi[att1[a]] != att2[c]:
                                c, d = d, c
                        elif o:
                            c, d = d, c
                        hm[a], hm[b] = c, d
                    options.append(hm)
            choices.append(options)
        leg_part = {g1.leg_map[lab]: g2.leg_map[lab] for lab in legs1}
        for combo in itertools.product(*choices):
            hm = dict(leg_part)
            for part in combo:
                hm.update(part)
            yield dict(phi), hm


# -- canonical form and enumeration -------------------------------------------------

def _vertex_invariants(n: int, adj: Mapping, legs: Mapping, rounds: int = 3) -> list:
    legs_at = defaultdict(list)
    for lab, v in legs.items():
        legs_at[v].append(lab)
    nbr = defaultdict(dict)
    for (a, b), c in adj.items():
        nbr[a][b] = nbr[a].get(b, 0) + c
        if a != b:
            nbr[b][a] = nbr[b].get(a, 0) + c
    inv = [(tuple(sorted(legs_at[v])), nbr[v].get(v, 0),
            sum(c for w, c in nbr[v].items() if w != v) + 2 * nbr[v].get(v, 0) + len(legs_at[v]))
           for v in range(n)]
    for _ in range(rounds):
        inv = [(inv[v], tuple(sorted((c, inv[w]) for w, c in nbr[v].items() if w != v))) for v in range(n)]
    return inv


def canonical_key(n: int, adj: Mapping, legs: Mapping) -> tuple:
    """Lexicographically least encoding over vertex orderings compatible with refined invariants.

    ``adj`` maps sorted pairs ``(i, j)`` of vertices in ``range(n)`` to edge
    multiplicities; ``legs`` maps leg labels to vertices.
    """
    inv = _vertex_invariants(n, adj, legs)
    order = sorted(range(n), key=lambda v: inv[v])
    classes = [list(grp) for _, grp in itertools.groupby(order, key=lambda v: inv[v])]
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in classes)):
        pos = {v: i for i, v in enumerate(itertools.chain.from_iterable(perms))}
        key = (n,
               tuple(sorted((lab, pos[v]) for lab, v in legs.items())),
               tuple(sorted((tuple(sorted((pos[a], pos[b]))), c) for (a, b), c in adj.items() if c)))
        if best is None or key < best:
            best = key
    return best


def canonical_form(g: Graph) -> tuple:
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj, legs = g.multigraph()
    return canonical_key(len(idx), {tuple(sorted((idx[a], idx[b]))): c for (a, b), c in adj.items()},
                         {lab: idx[v] for lab, v in legs.items()})


def graph_from_key(key: tuple) -> Graph:
    """Materialise a canonical key; slots list legs (by label) before edges (by pair order)."""
    n, legs, edges = key
    att, leg_map, pairs = {}, {}, []
    slot = Counter()

    def new(v):
        h = (v, slot[v])
        slot[v] += 1
        att[h] = v
        return h

    for lab, v in legs:
        leg_map[lab] = new(v)
    for (a, b), c in edges:
        for _ in range(c):
            pairs.append((new(a), new(b)))
    return Graph.build(range(n), att, pairs, leg_map)


def _set_partitions(items: list) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


@dataclass(frozen=True)
class EnvelopeObject:
    """A connected graph whose legs are identified with those of the corolla ``over``."""

    over: Corolla
    graph: Graph

    def __post_init__(self) -> None:
        if not self.graph.is_connected:
            raise GraphError("envelope objects have connected graphs")
        if sorted(self.graph.leg_map) != sorted(self.over.legs):
            raise GraphError("graph legs do not match the corolla")

    @property
    def genus(self) -> int:
        return self.graph.betti

    @property
    def morphism(self) -> GraphMorphism:
        g, t = self.graph, self.over.graph()
        return GraphMorphism(
            source=nu(g), target=t, witness=g,
            nu_vertex={v: v for v in g.vertices}, nu_half={h: h for h in g.half_edges},
            pi0_vertex={v: self.over.id for v in g.vertices},
            pi0_leg={h: t.leg_map[lab] for lab, h in g.legs})


def enumerate_reduced(over: Corolla, genus: int, max_vertices: int) -> list[EnvelopeObject]:
    """Connected reduced graphs with legs identified with ``over`` and first Betti
    number ``genus``, at most ``max_vertices`` vertices, one per isomorphism class."""
    if max_vertices < 1:
        raise ValueError("max_vertices must be >= 1")
    labels = sorted(over.legs)
    found: dict[tuple, None] = {}
    for nv in range(1, max_vertices + 1):
        ne = genus + nv - 1
        if ne < 0:
            continue
        if nv == 1:
            found[canonical_key(1, {(0, 0): ne} if ne else {}, {lab: 0 for lab in labels})] = None
            continue
        for blocks in _set_partitions(labels):
            if len(blocks) > nv:
                continue
            for key in _fill_adjacency(nv, ne, sorted(blocks, key=min)):
                found[key] = None
    keys = sorted(found)
    return [EnvelopeObject(over, graph_from_key(k)) for k in keys]


def _fill_adjacency(nv: int, ne: int, blocks: list[list]) -> Iterator[tuple]:
    """Adjacency matrices with ``ne`` edges whose vertices all have valence >= 2.

    Vertices ``0..len(blocks)-1`` carry the leg blocks, the rest carry none;
    leg-free vertices are interchangeable, so their valences are forced to be
    non-increasing.
    """
    nlegs = [len(b) for b in blocks] + [0] * (nv - len(blocks))
    legs = {lab: i for i, b in enumerate(blocks) for lab in b}
    pairs = [(i, j) for i in range(nv) for j in range(i, nv)]
    row_end = {i: pairs.index((i, nv - 1)) for i in range(nv)}
    counts = [0] * len(pairs)
    deg = list(nlegs)
    final = [0] * nv

    def rec(k: int, left: int):
        if k == len(pairs):
            if left == 0:
                adj = {p: c for p, c in zip(pairs, counts) if c}
                if _connected(nv, adj):
                    yield canonical_key(nv, adj, legs)
            return
        i, j = pairs[k]
        for c in range(left + 1):
            counts[k] = c
            deg[i] += 2 * c if i == j else c
            if i != j:
                deg[j] += c
            ok = True
            if k == row_end[i]:
                ok = deg[i] >= 2 and not (i > len(blocks) and deg[i] > final[i - 1])
                final[i] = deg[i]
            if ok:
                yield from rec(k + 1, left - c)
            deg[i] -= 2 * c if i == j else c
            if i != j:
                deg[j] -= c
        counts[k] = 0

    yield from rec(0, ne)


def _connected(n: int, adj: Mapping) -> bool:
    seen, stack = {0}, [0]
    nbr = defaultdict(set)
    for a, b in adj:
        nbr[a].add(b)
        nbr[b].add(a)
    while stack:
        for w in nbr[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


# -- maps between graphs (collapse followed by isomorphism) ---------------------------

@dataclass(frozen=True)
class GraphMap:
    """A morphism of connected graphs given on vertices and half-edges; contracted half-edges map to None."""

    vertex_map: tuple
    half_map: tuple

    @classmethod
    def make(cls, vertex_map: Mapping, half_map: Mapping) -> GraphMap:
        return cls(tuple(sorted(vertex_map.items())), tuple(sorted(half_map.items(), key=lambda x: x[0])))

    def then(self, other: GraphMap) -> GraphMap:
        """``other`` after ``self``."""
        vm, hm = dict(other.vertex_map), dict(other.half_map)
        return GraphMap.make({v: vm[w] for v, w in self.vertex_map},
                             {h: (None if k is None else hm[k]) for h, k in self.half_map})


def collapse_morphisms(source: Graph, target: Graph) -> list[GraphMap]:
    """Every subtree collapse of ``source`` followed by an isomorphism onto ``target``."""
    k = len(source.vertices) - len(target.vertices)
    out = []
    if k < 0:
        return out
    for subset in itertools.combinations(source.edges, k):
        parent = {v: v for v in source.vertices}

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        forest = True
        for a, b in subset:
            ra, rb = find(source.attach_map[a]), find(source.attach_map[b])
            if ra == rb:
                forest = False
                break
            parent[max(ra, rb)] = min(ra, rb)
        if not forest:
            continue
        q = source
        for e in subset:
            q = contract_edge(q, e)
        gone = {h for e in subset for h in e}
        for vmap, hmap in isomorphisms(q, target):
            out.append(GraphMap.make({v: vmap[find(v)] for v in source.vertices},
                                     {h: (None if h in gone else hmap[h]) for h in source.half_edges}))
    return out


# -- the category Graphs --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GraphMorphism:
    """A morphism source -> target of disjoint unions of corollas: a witness graph
    with identifications nu(witness) = source and pi0(witness) = target."""

    source: Graph
    target: Graph
    witness: Graph
    nu_vertex: Mapping
    nu_half: Mapping
    pi0_vertex: Mapping
    pi0_leg: Mapping

    def __post_init__(self) -> None:
        s, t, w = self.source, self.target, self.witness
        if s.edges or t.edges:
            raise GraphError("source and target must be disjoint unions of corollas")
        if sorted(self.nu_vertex) != list(w.vertices) or sorted(self.nu_vertex.values()) != list(s.vertices):
            raise GraphError("nu identification is not a bijection on vertices")
        if set(self.nu_half) != set(w.attach_map) or sorted(self.nu_half.values()) != sorted(s.attach_map):
            raise GraphError("nu identification is not a bijection on half-edges")
        for h, v in w.attach:
            if s.attach_map[self.nu_half[h]] != self.nu_vertex[v]:
                raise GraphError("nu identification does not respect corollas")
        comp_img = []
        for comp in w.components:
            imgs = {self.pi0_vertex[v] for v in comp}
            if len(imgs) != 1:
                raise GraphError("pi0 identification is not constant on a component")
            comp_img.append(imgs.pop())
        if sorted(comp_img) != list(t.vertices):
            raise GraphError("pi0 identification is not a bijection on components")
        legs = set(w.leg_labels)
        if set(self.pi0_leg) != legs or sorted(self.pi0_leg.values()) != sorted(t.attach_map):
            raise GraphError("pi0 identification is not a bijection on legs")
        for h in legs:
            if t.attach_map[self.pi0_leg[h]] != self.pi0_vertex[w.attach_map[h]]:
                raise GraphError("pi0 identification does not respect components")

    def canonical(self) -> tuple:
        """The witness transported to source names; equal morphisms have equal canonical data."""
        pairs = frozenset(frozenset((self.nu_half[a], self.nu_half[b])) for a, b in self.witness.edges)
        vm = frozenset((self.nu_vertex[v], self.pi0_vertex[v]) for v in self.witness.vertices)
        lm = frozenset((self.nu_half[h], self.pi0_leg[h]) for h in self.pi0_leg)
        return self.source, self.target, pairs, vm, lm

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphMorphism):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())


def glue(source: Graph, pairs: Iterable = ()) -> GraphMorphism:
    """The morphism out of ``source`` whose witness pairs the given legs; the
    target is pi0 of the witness (legs keep their ids and labels)."""
    if source.edges:
        raise GraphError("source must be a disjoint union of corollas")
    pairs = [tuple(p) for p in pairs]
    paired = {h for p in pairs for h in p}
    legs = {lab: h for lab, h in source.legs if h not in paired}
    w = Graph.build(source.vertices, source.attach_map, pairs, legs)
    t = pi0(w)
    rep = {v: min(c) for c in w.components for v in c}
    return GraphMorphism(source, t, w, {v: v for v in w.vertices}, {h: h for h in w.half_edges},
                         rep, {h: h for h in w.leg_labels})


def identity_morphism(source: Graph) -> GraphMorphism:
    return glue(source, ())


def permute_legs(source: Graph, perm: Mapping) -> GraphMorphism:
    """Automorphism of ``source`` sending leg half-edge h to perm[h] (same vertex)."""
    f = glue(source, ())
    return GraphMorphism(source, source, f.witness, f.nu_vertex, f.nu_half, f.pi0_vertex,
                         {h: perm.get(h, h) for h in f.pi0_leg})


def compose(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """``g`` after ``f``: substitute the witness of f into the vertices of the witness of g."""
    if f.target != g.source:
        raise GraphError("target of f does not match source of g")
    nu_inv = {v: k for k, v in g.nu_half.items()}
    nu_vinv = {v: k for k, v in g.nu_vertex.items()}
    leg_inv = {v: k for k, v in f.pi0_leg.items()}
    w = f.witness
    new_edges = list(w.edges)
    for a, b in g.witness.edges:
        new_edges.append((leg_inv[g.nu_half[a]], leg_inv[g.nu_half[b]]))
    g_legs = g.witness.leg_labels
    legs = {lab: h for lab, h in w.legs if nu_inv[f.pi0_leg[h]] in g_legs}
    witness = Graph.build(w.vertices, w.attach_map, new_edges, legs)
    pi0_vertex = {v: g.pi0_vertex[nu_vinv[f.pi0_vertex[v]]] for v in w.vertices}
    pi0_leg = {h: g.pi0_leg[nu_inv[f.pi0_leg[h]]] for h in legs.values()}
    return GraphMorphism(f.source, g.target, witness, dict(f.nu_vertex), dict(f.nu_half), pi0_vertex, pi0_leg)


# -- JSON -----------------------------------------------------------------------------

def to_json(g: Graph) -> dict:
    """``{"vertices": [...], "edges": [[h, h'], ...], "legs": {label: [vertex, slot]}}``
    with half-edges written as ``[vertex, slot]``."""
    slot = {}
    for v, hs in g.half_edges_at.items():
        for i, h in enumerate(sorted(hs)):
            slot[h] = [v, i]
    edges = sorted(sorted([slot[a], slot[b]]) for a, b in g.edges)
    return {"vertices": list(g.vertices), "edges": edges,
            "legs": {str(lab): slot[h] for lab, h in g.legs}}


def from_json(obj: Mapping) -> Graph:
    try:
        verts = [int(v) for v in obj["vertices"]]
        att, edges, legs = {}, [], {}

        def half(x):
            v, s = int(x[0]), int(x[1])
            att[(v, s)] = v
            return (v, s)

        for a, b in obj.get("edges", []):
            edges.append((half(a), half(b)))
        for lab, x in obj.get("legs", {}).items():
            legs[str(lab)] = half(x)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise GraphError(f"bad graph JSON: {exc!r}") from None
    for v in set(att.values()):
        slots = sorted(s for (u, s) in att if u == v)
        if slots != list(range(len(slots))):
            raise GraphError(f"slots at vertex {v} are not 0..{len(slots) - 1}")
    return Graph.build(verts, att, edges, legs)
