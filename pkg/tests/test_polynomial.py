import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jointenum import Cyclotomic, SparsePoly, linear_substitute, poly_from_json, poly_to_json
from jointenum.polynomial import (PolynomialError, format_xindex, render, xindex_from_rows,
                                  xindex_to_rows)

X00, X01, X10, X11 = ((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))
VARS = [X00, X01, X10, X11]


def x(v):
    return SparsePoly.var(v)


coeffs = st.builds(Fraction, st.integers(-8, 8), st.integers(1, 4))
monos = st.lists(st.tuples(st.sampled_from(VARS), st.integers(1, 3)), max_size=3)
polys = st.lists(st.tuples(monos, coeffs), max_size=5).map(lambda ts: SparsePoly(ts))


@settings(max_examples=60, deadline=None)
@given(p=polys, q=polys, r=polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(p=polys)
def test_json_round_trip(p):
    d = poly_to_json(p, 1, 2)
    assert poly_from_json(json.loads(json.dumps(d))) == p


@settings(max_examples=40, deadline=None)
@given(p=polys, vals=st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_evaluate_is_a_homomorphism(p, vals):
    env = dict(zip(VARS, vals))
    q = p * p + 3
    assert q.evaluate(env) == p.evaluate(env) ** 2 + 3


def test_canonical_form_merges_and_drops_zeros():
    p = SparsePoly([([(X00, 1), (X10, 1)], 1), ([(X10, 1), (X00, 1)], 1), ([(X01, 2)], 0)])
    assert p.terms() == [(((X00, 1), (X10, 1)), 2)]
    assert SparsePoly([([(X00, 1), (X00, 1)], 1)]) == x(X00) ** 2


def test_coefficients_normalise():
    p = x(X00).scale(Fraction(4, 2))
    assert type(p.coefficient([(X00, 1)])) is int
    assert p.domain == "integer"
    assert x(X00).scale(Fraction(1, 2)).domain == "rational"
    assert x(X00).scale(Cyclotomic.eta(3)).domain == "cyclotomic"


def test_rationalize():
    w = Cyclotomic.eta(3)
    p = SparsePoly([([(X00, 1)], w + w * w)])
    assert p.rationalize() == -x(X00)
    with pytest.raises(PolynomialError):
        SparsePoly([([(X00, 1)], w)]).rationalize()


def test_rational_cyclotomic_mix_rejected():
    with pytest.raises(PolynomialError):
        SparsePoly([([(X00, 1)], Fraction(1, 2))]) + SparsePoly([([(X00, 1)], Cyclotomic.eta(3))])


def test_family_mismatch():
    s = SparsePoly.var((0, 1), family="s")
    with pytest.raises(PolynomialError):
        s + x(X00)


def test_linear_substitute():
    rule = {X00: x(X00) + x(X10), X10: x(X00) - x(X10)}
    p = x(X00) ** 2 + x(X10) ** 2
    assert linear_substitute(p, rule) == (x(X00) ** 2 + x(X10) ** 2).scale(2)
    with pytest.raises(PolynomialError, match="missing"):
        linear_substitute(x(X01), rule)


def test_linear_substitute_with_roots_of_unity():
    w = Cyclotomic.eta(3)
    rule = lambda v: SparsePoly([([(v, 1)], w)])
    p = x(X00) ** 3 + x(X01) * x(X10)
    out = linear_substitute(p, rule)
    assert out.coefficient([(X00, 3)]) == 1
    assert out.coefficient([(X01, 1), (X10, 1)]) == w * w


def test_xindex_layout():
    v = ((0, 1), (1, 1))  # two columns of an l=2 matrix
    assert xindex_to_rows(v) == [[0, 1], [1, 1]]
    assert xindex_from_rows([[0, 1], [1, 1]]) == v
    assert format_xindex(v) == "01|11"
    with pytest.raises(PolynomialError):
        xindex_from_rows([[0, 1], [1]])


def test_render():
    p = x(X00) ** 2 + 2 * x(X00) * x(X10) - x(X11)
    assert render(p) == "x_{00}^2 + 2 x_{00} x_{10} - x_{11}"
    assert render(SparsePoly()) == "0"
    assert render(SparsePoly.constant(Fraction(1, 3))) == "1/3"


def test_json_cyclotomic_coefficients():
    p = SparsePoly([([(X00, 1)], Cyclotomic.eta(4))])
    d = poly_to_json(p)
    assert d["terms"][0]["coeff"] == {"order": 4, "coeffs": [0, 1, 0, 0]}
    assert poly_from_json(d) == p


def test_json_errors():
    with pytest.raises(PolynomialError, match="'terms'"):
        poly_from_json({"vars": "x"})
    with pytest.raises(PolynomialError, match="'coeff'"):
        poly_from_json({"terms": [{"monomial": []}]})
    with pytest.raises(PolynomialError, match="coefficient"):
        poly_from_json({"terms": [{"coeff": "abc", "monomial": []}]})


def test_hash_consistent_with_eq():
    a = x(X00) + x(X01)
    b = x(X01) + x(X00)
    assert a == b and hash(a) == hash(b)
