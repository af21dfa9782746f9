"""Integer polynomial arithmetic: ring axioms and evaluation."""

from hypothesis import given
from hypothesis import strategies as st

from matchperm.poly import ONE, ZERO, Poly

coeff_lists = st.lists(st.integers(-50, 50), max_size=6)
polys = coeff_lists.map(Poly)


def test_trailing_zeros_stripped():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0, 0]).is_zero()
    assert Poly([]).degree() == -1


def test_basic_arithmetic():
    x = Poly([0, 1])
    assert x * x == Poly([0, 0, 1])
    assert (x + ONE) * (x - ONE) == Poly([-1, 0, 1])
    assert Poly.x_power(3) == Poly([0, 0, 0, 1])
    assert ONE - ONE == ZERO


def test_evaluation():
    p = Poly([1, 2, 3])
    assert p(0) == 1
    assert p(2) == 1 + 4 + 12
    assert ZERO(5) == 0


def test_coeff_access():
    p = Poly([7, 0, 5])
    assert p.coeff(0) == 7
    assert p.coeff(1) == 0
    assert p.coeff(2) == 5
    assert p.coeff(9) == 0


def test_int_interop():
    p = Poly([1, 1])
    assert p * 2 == Poly([2, 2])
    assert p + 1 == Poly([2, 1])


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a * ZERO == ZERO


@given(polys, polys, st.integers(-10, 10))
def test_evaluation_is_homomorphism(a, b, t):
    assert (a + b)(t) == a(t) + b(t)
    assert (a * b)(t) == a(t) * b(t)


@given(polys)
def test_hash_consistent(a):
    assert hash(a) == hash(Poly(list(a.coeffs)))
