from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from ansular.cyclotomic import ONE, ZERO, Cyclotomic, cyclotomic_polynomial, zeta

roots = st.builds(zeta, st.integers(-30, 30), st.integers(1, 24))
elements = st.lists(st.tuples(st.integers(-3, 3), roots), max_size=4).map(
    lambda ts: sum((Cyclotomic.coerce(c) * r for c, r in ts), ZERO))


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_relations_between_roots():
    assert zeta(1, 4) * zeta(1, 4) == -1
    assert zeta(0, 3) + zeta(1, 3) + zeta(2, 3) == 0
    assert zeta(1, 6) == zeta(1, 3) + 1
    assert zeta(3, 12) == zeta(1, 4)
    assert zeta(1, 8) ** 8 == ONE


@given(roots)
def test_roots_have_modulus_one(r):
    assert r * r.conjugate() == ONE
    assert abs(abs(complex(r)) - 1) < 1e-12


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == ZERO


@given(elements)
def test_complex_embedding_is_faithful(a):
    assert a.is_zero() == (abs(complex(a)) < 1e-9)


@given(st.integers(-50, 50), st.integers(1, 30))
def test_root_of_unity_recovers_exponent(k, m):
    f = Fraction(k, m) % 1
    assert zeta(k, m).root_of_unity() == (f.numerator, f.denominator)


def test_root_of_unity_after_cancellation():
    # -zeta_3 is a sixth root of unity even though it is written with conductor 3
    assert (-zeta(1, 3)).root_of_unity() == (5, 6)
    assert (ONE + ONE).root_of_unity() is None
    assert ZERO.root_of_unity() is None


def test_json_form():
    x = Cyclotomic.coerce(Fraction(1, 2)) * zeta(1, 4) - 3
    assert x.to_json() == [[-3, 1, 0, 1], [1, 2, 1, 4]]
