"""Free-algebra word order, arithmetic and parser tests."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfbench.freealg import FreeAlgebra, compare_deglex, nc_combine, nc_mul
from hopfbench.gf import make_field


def alg(p=2, k=1, names=("z", "y", "x", "h", "g")):
    return FreeAlgebra(make_field(p, k), list(names))


# -- order -------------------------------------------------------------------


def test_deglex_basic():
    A = alg()
    assert compare_deglex("x", "xx", A) == "less"
    assert compare_deglex("g", "x", A) == "greater"  # g listed last: largest
    assert compare_deglex("gx", "xg", A) == "greater"
    assert compare_deglex("xg", "xg", A) == "equal"
    assert compare_deglex("1", "z", A) == "less"
    # longer beats larger letters
    assert compare_deglex("zzz", "gg", A) == "greater"


def test_compare_deglex_accepts_plain_alphabet():
    assert compare_deglex((0,), (1,), ["a", "b"]) == "less"
    assert compare_deglex("b", "a", ["a", "b"]) == "greater"


words = st.lists(st.integers(0, 4), min_size=0, max_size=6).map(tuple)


@given(w1=words, w2=words, w3=words)
@settings(max_examples=200, deadline=None)
def test_deglex_total_order_properties(w1, w2, w3):
    A = alg()
    c12 = compare_deglex(w1, w2, A)
    c21 = compare_deglex(w2, w1, A)
    assert (c12 == "equal") == (w1 == w2)
    assert (c12 == "less") == (c21 == "greater")
    if c12 == "less" and compare_deglex(w2, w3, A) == "less":
        assert compare_deglex(w1, w3, A) == "less"


@given(w1=words, w2=words, u=words, v=words)
@settings(max_examples=200, deadline=None)
def test_deglex_multiplicative_monotonicity(w1, w2, u, v):
    A = alg()
    if compare_deglex(w1, w2, A) == "less":
        assert compare_deglex(u + w1 + v, u + w2 + v, A) == "less"


# -- arithmetic ---------------------------------------------------------------


def small_polys(q=4):
    coeff = st.integers(1, q - 1)
    return st.dictionaries(words, coeff, max_size=4)


@given(f=small_polys(), g=small_polys(), h=small_polys())
@settings(max_examples=120, deadline=None)
def test_mul_associative_distributive(f, g, h):
    A = alg(2, 2)
    assert nc_mul(nc_mul(f, g, A), h, A) == nc_mul(f, nc_mul(g, h, A), A)
    lhs = nc_mul(f, nc_combine("add", g, h, A), A)
    rhs = nc_combine("add", nc_mul(f, g, A), nc_mul(f, h, A), A)
    assert lhs == rhs


@given(f=small_polys())
@settings(max_examples=60, deadline=None)
def test_add_cancellation_and_scale(f):
    A = alg(2, 2)
    assert nc_combine("add", f, A.neg(f), A) == {}
    assert nc_combine("scale", 0, f, A) == {}
    assert nc_combine("scale", 1, f, A) == f
    tw = nc_combine("scale", 2, nc_combine("scale", 3, f, A), A)  # t*(t+1) = 1
    assert tw == f


def test_mul_is_word_concatenation():
    A = alg()
    gx = nc_mul(A.parse_poly("g"), A.parse_poly("x"), A)
    assert gx == A.parse_poly("gx")
    assert A.parse_poly("gx") != A.parse_poly("xg")


def test_nc_combine_rejects_unknown_op():
    A = alg()
    with pytest.raises(ValueError):
        nc_combine("mul", {}, {}, A)


# -- parsing and formatting -----------------------------------------------------


def test_parse_word_forms():
    A = alg()
    w = A.parse_word("g^3hx")
    g, h, x = A.index["g"], A.index["h"], A.index["x"]
    assert w == (g, g, g, h, x)
    assert A.parse_word("1") == ()
    assert A.format_word(w) == "g^3hx"
    assert A.parse_word(A.format_word(w)) == w


def test_parse_poly_round_trip():
    A = alg(2, 2)
    p = A.parse_poly("2*gx + x^2 + 1")
    assert p[A.parse_word("gx")] == 2
    assert p[A.parse_word("x^2")] == 1
    assert p[()] == 1
    assert A.parse_poly(A.format_poly(p)) == p
    assert A.format_poly({}) == "0"


def test_parse_poly_minus_parens_env():
    A = alg(2, 2)
    assert A.parse_poly("g - g") == {}
    p = A.parse_poly("x(1 - g^2)")
    assert p == A.parse_poly("x + xg^2")
    q = A.parse_poly("lam*(1-g^2)", env={"lam": 3})
    assert q == {(): 3, A.parse_word("g^2"): 3}
    assert A.parse_poly("lam*x", env={"lam": 0}) == {}
    assert A.parse_poly("-x + x") == {}


def test_parse_poly_coefficient_encoding_is_raw():
    A = alg(2, 2)
    assert A.parse_poly("3*x") == {A.parse_word("x"): 3}
    with pytest.raises(ValueError):
        A.parse_poly("4*x")  # out of range for GF(4)
    B = alg(3, 1, names=("x",))
    assert B.parse_poly("2x^2") == {(0, 0): 2}


def test_parse_poly_errors():
    A = alg()
    for bad in ["g +", "(g", "g)", "q", "g^", ""]:
        with pytest.raises(ValueError):
            A.parse_poly(bad)
    with pytest.raises(ValueError):
        A.parse_word("g + h")


def test_longest_name_match():
    f = make_field(2, 1)
    B = FreeAlgebra(f, ["x", "x1"])
    w = B.parse_word("x1x")
    assert w == (1, 0)
    p = B.parse_poly("x1 + x")
    assert len(p) == 2


def test_leading_word():
    A = alg()
    p = A.parse_poly("gx + xg + x")
    assert A.format_word(A.leading_word(p)) == "gx"
