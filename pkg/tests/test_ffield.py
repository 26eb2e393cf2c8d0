import pytest
from hypothesis import given, strategies as st

from ingleton_groups.errors import FieldError, FieldMismatchError
from ingleton_groups.ffield import Field, field_make, field_of_order, is_prime, prime_power, smallest_irreducible

ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(8) == (2, 3)
    assert prime_power(13) == (13, 1)
    for bad in (1, 6, 12, 0):
        with pytest.raises(FieldError):
            prime_power(bad)
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_moduli():
    # coefficient tuples, constant term first
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)  # x^3 + x + 1
    assert smallest_irreducible(3, 2) == (1, 0, 1)  # x^2 + 1
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert field_make(5).q == 5 and field_make(5).m == 1


def test_prime_field_is_integers_mod_p():
    f = field_make(5)
    assert f.mul(2, 3) == 1
    for a in range(5):
        for b in range(5):
            assert f.add(a, b) == (a + b) % 5
            assert f.mul(a, b) == (a * b) % 5


def test_f8_and_f9_products():
    f8 = field_make(2, 3)
    x, x2 = 2, 4  # indices of x and x^2
    assert f8.mul(x, x2) == 3  # x^3 = x + 1
    f9 = field_make(3, 2)
    x = 3
    assert f9.inv(x) == 6  # 2x
    assert f9.mul(x, 6) == 1


def test_primitive_elements():
    assert field_make(2).primitive == 1
    assert field_make(5).primitive == 2
    assert field_make(7).primitive == 3
    assert field_of_order(4).primitive == 2
    assert field_of_order(9).primitive == 4  # x + 1


def test_format_and_parse():
    f9 = field_of_order(9)
    assert f9.fmt(7) == "21"  # 2x + 1
    assert f9.parse("21") == 7
    assert f9.parse("-1") == 2
    for a in range(9):
        assert f9.parse(f9.fmt(a)) == a


def test_field_elements():
    f = field_of_order(7)
    a, b = f.element(3), f.element(5)
    assert (a * b).index == 1
    assert (a + 4).index == 0
    assert (a / b * b) == a
    assert a.order() == 6
    with pytest.raises(FieldMismatchError):
        a + field_of_order(5).element(1)


def test_cap():
    with pytest.raises(FieldError):
        field_of_order(2048)


field_strategy = st.sampled_from(ORDERS).map(field_of_order)


@st.composite
def field_triple(draw):
    f = draw(field_strategy)
    el = st.integers(0, f.q - 1)
    return f, draw(el), draw(el), draw(el)


@given(field_triple())
def test_field_axioms(t):
    f, a, b, c = t
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    assert f.mul(a, 1) == a
    if a:
        assert f.mul(a, f.inv(a)) == 1
        assert f.power(a, f.q - 1) == 1


@given(field_strategy)
def test_primitive_generates(f):
    t = f.primitive
    assert {f.power(t, k) for k in range(f.q - 1)} == set(range(1, f.q))
    # the smallest index of full order
    assert all(f.order(a) < f.q - 1 for a in range(1, t))


@given(field_strategy)
def test_frobenius_is_additive(f):
    p = f.p
    for a in range(f.q):
        for b in range(0, f.q, max(1, f.q // 5)):
            assert f.power(f.add(a, b), p) == f.add(f.power(a, p), f.power(b, p))


def test_field_equality():
    assert Field(3, 2) == field_of_order(9)
    assert Field(3, 2) != field_of_order(8)
