import pytest
from hypothesis import given, settings, strategies as st

from secondtype.formparse import parse_poly as P
from secondtype.polyring import (
    INF, Parameterization, Poly1, Poly2, intersection_number, poly_gcd, substitute,
    total_order, weighted_order,
)

monomials = st.tuples(st.integers(0, 4), st.integers(0, 4))
small = st.integers(-4, 4)


@st.composite
def polys(draw, min_terms=1, max_terms=5):
    terms = draw(st.dictionaries(monomials, small.filter(bool),
                                 min_size=min_terms, max_size=max_terms))
    return Poly2(terms)


@pytest.mark.parametrize("f, g, expected", [
    ("x", "y", 1),
    ("y^2 - x^3", "y", 3),
    ("x*y + y^2", "x^2", 4),
    ("y^2 - x^3", "2*y", 3),
    ("x*y", "y^6 - x^3", 9),
    ("y*(y - 1)", "x + y - 1", 0),  # meets only away from the origin
    ("x + 1", "y", 0),
])
def test_intersection_oracle(f, g, expected):
    assert intersection_number(P(f), P(g)) == expected


def test_intersection_common_component_is_infinite():
    assert intersection_number(P("y^2 - x^3"), P("y^2 - x^3")) == INF
    assert intersection_number(P("x*y"), P("x^2 + x*y")) == INF
    assert intersection_number(Poly2(), P("x")) == INF


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_intersection_is_symmetric(f, g):
    assert intersection_number(f, g) == intersection_number(g, f)


@settings(max_examples=30, deadline=None)
@given(polys(max_terms=3), polys(max_terms=3), polys(max_terms=3))
def test_intersection_is_additive(f, g, h):
    a, b = intersection_number(f, h), intersection_number(g, h)
    assert intersection_number(f * g, h) == a + b


def test_gcd_examples():
    g = poly_gcd(P("x^2*y - x*y^2"), P("x^2 - y^2"))
    assert g.normalized() == P("x - y").normalized()
    assert poly_gcd(P("x"), P("y")).degree() == 0


@settings(max_examples=15, deadline=None)
@given(polys(max_terms=3), polys(max_terms=3), polys(max_terms=3))
def test_gcd_divides_and_recovers_common_factor(f, g, h):
    A, B = f * h, g * h
    d = poly_gcd(A, B)
    assert not divmod(A, d)[1]
    assert not divmod(B, d)[1]
    assert not divmod(d, h)[1]


@given(polys(), polys())
def test_ring_laws(f, g):
    assert f * g == g * f
    assert (f + g) - g == f
    assert (f * g).diff_x() == f.diff_x() * g + f * g.diff_x()


@given(polys(), st.integers(-3, 3))
def test_translate_matches_compose(f, c):
    assert f.translate_y(c) == f.compose(Poly2.x(), Poly2.y() + c)


@given(polys())
def test_chart_pullbacks_match_compose(f):
    x, y = Poly2.x(), Poly2.y()
    assert f.pullback_chart1() == f.compose(x, x * y)
    assert f.pullback_chart2() == f.compose(x * y, y)


def test_orders():
    assert total_order(P("x^3 + x*y")) == 2
    assert total_order(Poly2()) == INF
    assert weighted_order(P("y^3 + x^2*y"), 2, 3) == 7
    assert weighted_order(P("x*y"), 6, 3) == 3


def test_parameterization_substitution():
    t = Poly1({1: 1})
    g = Parameterization(t ** 2, t ** 3)
    assert not substitute(P("y^2 - x^3"), g)
    assert substitute(P("x*y"), g).order() == 5
    with pytest.raises(ValueError):
        Parameterization(t + 1, t)


def test_exact_division():
    f = P("x^2 - y^2")
    assert f // P("x - y") == P("x + y")
    _, r = divmod(P("x^2 + 1"), P("x"))
    assert r
