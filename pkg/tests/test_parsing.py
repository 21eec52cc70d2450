from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from infinitesimal.basefield import QQ, field_make
from infinitesimal.errors import ParseError
from infinitesimal.parsing import parse_eps_x_poly, parse_mpoly, parse_puiseux, parse_qpoly
from infinitesimal.projective import ProjPointK, ProjPointL, parse_point
from infinitesimal.puiseux import INF, PuiseuxElement

QI = field_make([1, 0, 1])


def test_polynomial_in_xyz():
    p = parse_mpoly("y*z - x^2", QQ, ("x", "y", "z"))
    assert p.terms == {(0, 1, 1): QQ(1), (2, 0, 0): QQ(-1)}


def test_rational_literals_and_parentheses():
    p = parse_mpoly("1/2*(x + 3)^2", QQ, ("x",))
    assert list(p.to_poly("x").coeffs) == [QQ(Fraction(9, 2)), QQ(3), QQ(Fraction(1, 2))]


def test_field_generator():
    p = parse_mpoly("x^2 + t*y^2", QI, ("x", "y"))
    assert p.terms[(0, 2)] == QI.gen()
    with pytest.raises(ParseError):
        parse_mpoly("t*x", QQ, ("x",))


@pytest.mark.parametrize("bad", ["", "x +", "x ** 2", "x^y", "x^(1/2)", "2.5*x", "w", "x; y", "__import__('os')"])
def test_rejects_malformed(bad):
    with pytest.raises(ParseError):
        parse_mpoly(bad, QQ, ("x", "y"))


def test_puiseux_literal_with_order_term():
    x = parse_puiseux("2 + eps^(3/2) - 1/2*eps^2 + O(eps^4)")
    assert x.terms == ((0, QQ(2)), (Fraction(3, 2), QQ(1)), (2, QQ(Fraction(-1, 2))))
    assert x.trunc == 4
    assert str(x) == "2 + eps^(3/2) - 1/2*eps^2 + O(eps^4)"


def test_puiseux_negative_exponent():
    x = parse_puiseux("eps^(-1) + 3")
    assert x.val() == -1 and x.trunc == INF


def test_minpoly_parsing():
    assert parse_qpoly("t^2 + 1").coeffs_q() == [1, 0, 1]


def test_eps_x_polynomial():
    F = parse_eps_x_poly("x^2 - (1 + eps)*x + eps")
    assert F.gens == ("eps", "X")
    assert F.terms[(1, 1)] == QQ(-1)


def test_points():
    p = parse_point("[2 : 4 : 0]")
    assert isinstance(p, ProjPointL) and p.coords == (QQ(1), QQ(2), QQ(0))
    k = parse_point("[eps : 1 + eps]")
    assert isinstance(k, ProjPointK)
    with pytest.raises(ParseError):
        parse_point("[0 : 0]")
    with pytest.raises(ParseError):
        parse_point("1 : 2")


exponents = st.fractions(min_value=-5, max_value=5, max_denominator=6)
coeffs = st.fractions(min_value=-50, max_value=50, max_denominator=7).filter(lambda q: q != 0)


@settings(max_examples=300)
@given(st.dictionaries(exponents, coeffs, max_size=5), st.one_of(st.none(), st.integers(6, 12)))
def test_puiseux_text_round_trip(terms, trunc):
    x = PuiseuxElement(QQ, terms.items(), INF if trunc is None else trunc)
    assert parse_puiseux(str(x)) == x


@settings(max_examples=200)
@given(st.dictionaries(st.integers(0, 6), st.lists(st.integers(-9, 9), min_size=2, max_size=2), max_size=4))
def test_gaussian_text_round_trip(terms):
    x = PuiseuxElement(QI, [(Fraction(e, 2), QI(c)) for e, c in terms.items()])
    assert parse_puiseux(str(x), QI) == x
