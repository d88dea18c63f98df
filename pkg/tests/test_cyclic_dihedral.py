from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ansular.cyclic_dihedral import (CyclicMorphism, DihedralMorphism, MorphismError, automorphisms, compose,
                                     cyclic, degeneracy, dihedral_automorphisms, dihedral_identity,
                                     dihedral_morphisms, dihedral_word, face, factorizations, from_values,
                                     generator, identity, morphisms, parse_morphism, power, psi, psi_object,
                                     reflection, relation_failures, reversal, reversal_failures, suite, to_word)
from ansular.graph_core import circle, collapse_morphisms, contract_edge

objects = st.integers(0, 3)


@st.composite
def cyclic_morphisms(draw, src=None, dst=None, degeneracy_free=False):
    n = draw(objects) if src is None else src
    m = draw(objects) if dst is None else dst
    homs = morphisms(n, m, degeneracy_free)
    if not homs:
        n, m = n, max(n, m)
        homs = morphisms(n, m, degeneracy_free)
    return draw(st.sampled_from(homs))


@st.composite
def dihedral_chains(draw):
    a, b, c = sorted(draw(st.lists(objects, min_size=3, max_size=3)))
    f = draw(st.sampled_from(dihedral_morphisms(a, b)))
    g = draw(st.sampled_from(dihedral_morphisms(b, c)))
    return f, g


def test_generator_examples():
    assert power(cyclic(1), 2) == identity(1)
    assert cyclic(1) @ face(0, 1) == face(1, 1)
    assert degeneracy(0, 0).values == (0, 0)
    assert generator("δ", 2, 1) == face(1, 2)
    assert generator("τ", 3) == cyclic(3)


@pytest.mark.parametrize("kind,n,i", [("d", 2, 3), ("d", 0, 0), ("s", 1, 2), ("s", -1, 0)])
def test_generator_indices_checked(kind, n, i):
    with pytest.raises(MorphismError):
        generator(kind, n, i)


def test_normalisation():
    f = CyclicMorphism(1, 2, (3, 5))
    assert f.values == (0, 2)
    with pytest.raises(MorphismError):
        CyclicMorphism(1, 1, (1, 0))
    with pytest.raises(MorphismError):
        CyclicMorphism(1, 1, (0, 3))


def test_all_relation_families_hold():
    assert relation_failures(5) == []


@pytest.mark.parametrize("n", range(5))
def test_hom_set_sizes(n):
    # |Hom([n], [m])| = (m + 1) * C(n + m + 1, n) in the cyclic category
    for m in range(4):
        assert len(morphisms(n, m)) == (m + 1) * comb(n + m + 1, n)


@given(cyclic_morphisms())
def test_unit_laws(f):
    assert identity(f.dst) @ f == f
    assert f @ identity(f.src) == f


@given(st.data())
def test_associativity(data):
    f = data.draw(cyclic_morphisms())
    g = data.draw(cyclic_morphisms(src=f.dst))
    h = data.draw(cyclic_morphisms(src=g.dst))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_reversal_examples():
    for n in range(5):
        assert reversal(identity(n)) == identity(n)
        assert reversal(cyclic(n)) == power(cyclic(n), -1)
    assert reversal_failures(3) == []


@given(st.data())
def test_reversal_is_a_functor(data):
    f = data.draw(cyclic_morphisms())
    g = data.draw(cyclic_morphisms(src=f.dst))
    assert reversal(g @ f) == reversal(g) @ reversal(f)
    assert reversal(reversal(f)) == f


@given(cyclic_morphisms())
def test_word_round_trip(f):
    word = to_word(f)
    assert parse_morphism(word) == f
    assert from_values(str(f)) == f


@given(dihedral_chains())
def test_dihedral_composition_is_associative(fg):
    f, g = fg
    for h in dihedral_automorphisms(g.dst)[:3]:
        assert (h @ g) @ f == h @ (g @ f)
    assert dihedral_identity(g.dst) @ g == g


@given(dihedral_chains())
def test_dihedral_word_round_trip(fg):
    for f in fg:
        back = parse_morphism(dihedral_word(f))
        if not isinstance(back, DihedralMorphism):
            back = DihedralMorphism(back, 0)
        assert back == f


@pytest.mark.parametrize("n", range(6))
def test_automorphism_groups(n):
    auts = dihedral_automorphisms(n)
    assert len(auts) == 2 * (n + 1)
    assert len(automorphisms(n)) == n + 1
    # dihedral: the flip conjugates the rotation to its inverse
    r = DihedralMorphism(identity(n), 1)
    t = DihedralMorphism(cyclic(n), 0)
    assert r @ t @ r == DihedralMorphism(power(cyclic(n), -1), 0)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
def test_unique_factorisation(m, n):
    for f in dihedral_morphisms(m, n):
        assert len(factorizations(f)) == 1


def test_psi_objects_and_faces():
    assert len(psi_object(0).vertices) == 1 and len(psi_object(0).edges) == 1
    # the face [0] -> [1] read backwards contracts the 2-circle to the 1-circle
    img = psi(face(0, 1))
    assert img in collapse_morphisms(circle(2), circle(1))
    contracted = [h for h, k in img.half_map if k is None]
    assert len(contracted) == 2
    assert contract_edge(circle(2), contracted[0]).betti == 1


def test_psi_rejects_degeneracies():
    with pytest.raises(MorphismError):
        psi(degeneracy(0, 1))


@pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
def test_psi_is_a_bijection_on_hom_sets(m, n):
    homs = dihedral_morphisms(m, n)
    maps = collapse_morphisms(circle(n + 1), circle(m + 1))
    images = [psi(f) for f in homs]
    assert len(set(images)) == len(homs) == len(maps)
    assert set(images) == set(maps)


@given(dihedral_chains())
def test_psi_is_a_contravariant_functor(fg):
    f, g = fg
    assert psi(g @ f) == psi(g).then(psi(f))


def test_reflection_is_an_involution():
    for n in range(5):
        r = reflection(n)
        assert r.then(r) == psi(dihedral_identity(n))


def test_suite_passes():
    assert all(ok for _, ok, _ in suite(4, 3))
