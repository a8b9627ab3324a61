import json

import pytest
from hypothesis import given, strategies as st

from permpoly.polynomial import (
    ONE,
    ZERO,
    IntPolynomial,
    format_poly,
    parse_poly,
    poly_add,
    poly_from_json,
    poly_mul,
    poly_scale,
)

from conftest import poly

coeffs = st.lists(st.integers(-10**30, 10**30), max_size=8)
polys = coeffs.map(IntPolynomial)


def test_canonical_zero_is_empty():
    assert IntPolynomial([0, 0]).coeffs == ()
    assert ZERO.degree == -1
    assert IntPolynomial([1, 0, 2, 0]).coeffs == (1, 0, 2)


def test_add_examples():
    assert poly_add(poly(1, 0, 1), poly(1, 0, 0)) == poly(2, 0, 1)
    p = poly(3, 2, 1)
    assert poly_add(p, ZERO) == p
    # phi_p(C4) + 4 * phi_p(empty graph) = pi(C4)
    assert poly_add(poly(1, 0, 4, 0, 0), IntPolynomial([4])) == poly(1, 0, 4, 0, 4)


def test_mul_examples():
    x = IntPolynomial([0, 1])
    assert poly_mul(x, poly(1, 0, 4, 0, 4)) == poly(1, 0, 4, 0, 4, 0)
    p = poly(2, -1, 5)
    assert poly_mul(p, ONE) == p
    assert poly_mul(p, ZERO) == ZERO


def test_scale_examples():
    assert poly_scale(poly(3, 0, 11, 0, 10, 0, 2), 4) == poly(12, 0, 44, 0, 40, 0, 8)
    p = poly(1, 1)
    assert poly_scale(p, 1) == p
    assert poly_scale(p, 0) == ZERO


def test_format_examples():
    assert format_poly(poly(1, 0, 4, 0, 4)) == "x^4+4x^2+4"
    assert format_poly(ZERO) == "0"
    assert format_poly(poly(1, 0, -1), "coeff_list") == "[-1, 0, 1]"
    assert format_poly(poly(-1, 2, -1, 0)) == "-x^3+2x^2-x"
    assert json.loads(format_poly(poly(1, 0, -1), "json")) == {"coeffs_ascending": ["-1", "0", "1"]}


def test_big_integers_survive_json():
    p = IntPolynomial([2**200, -(3**150)])
    assert poly_from_json(json.loads(format_poly(p, "json"))) == p


@pytest.mark.parametrize("bad", ["", "x^", "3x^2 4", "++x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


@given(polys, polys)
def test_add_mul_commute(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_degree_of_product(p, q):
    if not p.is_zero() and not q.is_zero():
        assert (p * q).degree == p.degree + q.degree


@given(polys)
def test_format_parse_round_trip(p):
    text = format_poly(p)
    assert parse_poly(text) == p
    assert format_poly(parse_poly(text)) == text


@given(polys)
def test_sub_is_inverse_of_add(p):
    assert (p - p).is_zero()
    assert -(-p) == p
