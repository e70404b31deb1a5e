import itertools

import pytest
from hypothesis import given, settings, strategies as st

from jointenum import Alphabet, AlphabetError, Cyclotomic, F, Z, make_alphabet
from jointenum.algebra import cyclotomic_polynomial, is_irreducible_mod_p

from oracles import coeff_value, field_is_domain, root_of_unity

ALPHABETS = [F(2), F(3), F(4), F(5), F(7), F(8), F(9), Z(2), Z(3), Z(4), Z(6), Z(8)]


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 8, 12])
def test_root_sum_vanishes(m):
    z = sum((Cyclotomic.eta(m, j) for j in range(m)), Cyclotomic(m))
    assert z.is_zero()
    assert z == 0


def test_eta_squares():
    i = Cyclotomic.eta(4)
    assert i * i == -1
    w = Cyclotomic.eta(3)
    assert 1 + w + w * w == 0
    assert w**3 == 1
    assert (Cyclotomic.eta(6) ** 3) == -1


def test_as_integer():
    w = Cyclotomic.eta(3)
    assert (w + w * w).as_integer() == -1
    assert w.as_integer() is None
    assert Cyclotomic.from_int(5, 7).as_integer() == 7


def test_lift_and_mixed_orders():
    a = Cyclotomic.eta(2)
    b = a.lift(4)
    assert b == Cyclotomic.eta(4) ** 2
    assert a == -1
    assert hash(Cyclotomic.from_int(3, 4)) == hash(4)


def test_integer_only():
    with pytest.raises(TypeError):
        Cyclotomic(3, [0.5])


@settings(max_examples=60, deadline=None)
@given(m=st.sampled_from([2, 3, 4, 5, 6, 8]),
       a=st.lists(st.integers(-5, 5), min_size=1, max_size=8),
       b=st.lists(st.integers(-5, 5), min_size=1, max_size=8))
def test_cyclotomic_matches_complex(m, a, b):
    x, y = Cyclotomic(m, a), Cyclotomic(m, b)
    assert abs(coeff_value(x * y) - coeff_value(x) * coeff_value(y)) < 1e-6
    assert abs(coeff_value(x + y) - coeff_value(x) - coeff_value(y)) < 1e-6
    assert abs(coeff_value(x.conjugate()) - coeff_value(x).conjugate()) < 1e-6
    assert (x - x).is_zero()
    assert x * (y + 1) == x * y + x


@pytest.mark.parametrize("A", ALPHABETS, ids=str)
def test_tables_are_a_ring(A):
    els = list(A.elements)
    for a, b in itertools.product(els, repeat=2):
        assert A.add(a, b) == A.add(b, a)
        assert A.mul(a, b) == A.mul(b, a)
        assert A.sub(A.add(a, b), b) == a
    for a, b, c in itertools.islice(itertools.product(els, repeat=3), 2000):
        assert A.mul(a, A.add(b, c)) == A.add(A.mul(a, b), A.mul(a, c))
        assert A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25, 27])
def test_fields_have_no_zero_divisors(q):
    assert field_is_domain(F(q))


def test_z4_has_zero_divisors():
    assert Z(4).mul(2, 2) == 0


def test_f4_element_encoding():
    A = F(4)
    t = 2  # index of the generator t
    assert A.mul(t, t) == 3  # t^2 = t + 1
    assert A.power(t, 3) == 1
    assert A.trace(t) == 1 and A.trace(1) == 0


def test_reducible_modulus_rejected():
    with pytest.raises(AlphabetError, match="reducible"):
        Alphabet("field", p=2, e=2, modulus=[1, 0, 1])
    assert is_irreducible_mod_p([1, 1, 1], 2)
    assert not is_irreducible_mod_p([0, 1, 1], 2)


def test_bad_descriptions():
    with pytest.raises(AlphabetError, match="prime"):
        make_alphabet({"kind": "field", "p": 6})
    with pytest.raises(AlphabetError, match="'k'"):
        make_alphabet({"kind": "ring"})
    with pytest.raises(AlphabetError, match="kind"):
        make_alphabet({"kind": "group"})
    with pytest.raises(AlphabetError, match="modulus"):
        make_alphabet({"kind": "field", "p": 2, "e": 2})


def test_json_round_trip():
    for A in ALPHABETS:
        assert make_alphabet(A.to_json()) == A
    assert make_alphabet("F3") == F(3)
    assert make_alphabet("Z6") == Z(6)
    assert make_alphabet("F4") == F(4)
    with pytest.raises(AlphabetError):
        make_alphabet("F6")


@pytest.mark.parametrize("A", ALPHABETS, ids=str)
def test_character_is_additive_and_orthogonal(A):
    """chi(a + b) = chi(a) chi(b) and sum_b chi(ab) = |A| [a = 0] (fields)."""
    m = A.char_order
    for a, b in itertools.product(A.elements, repeat=2):
        assert A.character(A.add(a, b)) == A.character(a) * A.character(b)
    for a in A.elements:
        total = sum((A.character(A.mul(a, b)) for b in A.elements), Cyclotomic(m))
        if A.is_field or a == 0:
            assert total == (A.size if a == 0 else 0)
    # numerically too
    for a in A.elements:
        assert abs(coeff_value(A.character(a)) - root_of_unity(m, A.character_exponent(a))) < 1e-9


def test_additive_order():
    assert Z(4).additive_order((2, 0)) == 2
    assert Z(4).additive_order((1, 2)) == 4
    assert Z(6).additive_order((2, 3)) == 6
    assert F(9).additive_order((0, 5)) == 3
    assert F(4).additive_order((0, 0)) == 1
