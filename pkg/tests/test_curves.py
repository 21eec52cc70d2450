import random

import pytest

from infinitesimal.basefield import QQ, field_make
from infinitesimal.curves import (
    apply_matrix,
    common_points,
    coordinate_change,
    incidence,
    inverse_matrix,
    monomials,
    parse_curve,
    perturb,
    random_unimodular,
)
from infinitesimal.errors import (
    CommonComponent,
    NotHomogeneous,
    ParseError,
    SingularMatrix,
    UnrepresentablePoint,
)
from infinitesimal.projective import ProjPointL, parse_point, specialize

from corpus import CORPUS, GAUSSIAN, point_text

QI = field_make(GAUSSIAN)
ID = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_parse_examples():
    c = parse_curve("y")
    assert c.degree == 1 and c.params == ProjPointL([0, 1, 0])
    c = parse_curve("y*z - x^2")
    assert c.degree == 2 and len(c.params.coords) == 6 and c.ambient_dim == 5
    with pytest.raises(NotHomogeneous):
        parse_curve("x + y^2")
    with pytest.raises(ParseError):
        parse_curve("x + w")


def test_monomial_order():
    assert monomials(2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert parse_curve("y*z - x^2").params == ProjPointL([1, 0, 0, 0, -1, 0])


def test_incidence_examples():
    c = parse_curve("y*z - x^2")
    assert incidence(c, parse_point("[0 : 0 : 1]"))
    assert incidence(c, parse_point("[1 : 1 : 1]"))
    assert not incidence(parse_curve("y"), parse_point("[1 : 1 : 1]"))
    assert incidence(c, parse_point("[eps : eps^2 : 1]"))


def test_perturb_examples():
    y = parse_curve("y")
    assert perturb(y, 1).jitter != perturb(y, 2).jitter
    assert perturb(y, 1).jitter == perturb(y, 1).jitter
    p = perturb(parse_curve("y*z - x^2"), 7)
    assert len(p.jitter) == 6
    assert all(-100 <= r <= 100 for r in p.jitter)


@pytest.mark.parametrize("name,f,g,field,points", CORPUS, ids=[c[0] for c in CORPUS])
def test_perturbation_specialises_back(name, f, g, field, points):
    K = field_make(field)
    for text in (f, g):
        c = parse_curve(text, K)
        for seed in range(5):
            assert specialize(perturb(c, seed).params) == c.params


@pytest.mark.parametrize("name,f,g,field,points", CORPUS, ids=[c[0] for c in CORPUS])
def test_common_points_corpus(name, f, g, field, points):
    K = field_make(field)
    c1, c2 = parse_curve(f, K), parse_curve(g, K)
    found = common_points(c1, c2)
    expected = sorted((parse_point(point_text(p), K) for p in points), key=ProjPointL.sort_key)
    assert found == expected
    for p in found:
        assert incidence(c1, p) and incidence(c2, p)


def test_common_points_needs_extension():
    with pytest.raises(UnrepresentablePoint) as info:
        common_points(parse_curve("x^2 + y^2 - z^2"), parse_curve("x^2 + y^2 - 2*z^2"))
    assert str(info.value.factor) == "t^2 + 1"


def test_common_component():
    with pytest.raises(CommonComponent):
        common_points(parse_curve("x*y"), parse_curve("x*z"))


def test_coordinate_change_examples():
    c = parse_curve("y")
    assert coordinate_change(c, ID) == c
    assert coordinate_change(c, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]) == parse_curve("x")
    with pytest.raises(SingularMatrix):
        coordinate_change(c, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])


def _mul(g, h):
    return [[sum(g[i][k] * h[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def test_coordinate_change_is_an_action():
    rng = random.Random(70)
    c = parse_curve("y^2*z - x^3 + x*z^2 + 2*x*y*z")
    for _ in range(100):
        g, h = random_unimodular(rng), random_unimodular(rng)
        assert coordinate_change(c, _mul(g, h)) == coordinate_change(coordinate_change(c, g), h)


def test_coordinate_change_inverse_round_trip():
    rng = random.Random(71)
    c = parse_curve("x^2 + 3*y*z - z^2")
    for _ in range(20):
        g = random_unimodular(rng)
        gi = [[int(x.rational()) for x in row] for row in inverse_matrix([[QQ(a) for a in r] for r in g])]
        assert coordinate_change(coordinate_change(c, g), gi) == c


def test_change_moves_points():
    rng = random.Random(72)
    c = parse_curve("y*z - x^2")
    p = parse_point("[1 : 1 : 1]")
    for _ in range(20):
        g = random_unimodular(rng)
        gi = inverse_matrix([[QQ(a) for a in r] for r in g])
        # p on c  <=>  g^-1 p on c o g
        assert incidence(coordinate_change(c, g), apply_matrix(gi, p))


def test_gaussian_points_need_field():
    c1, c2 = parse_curve("x^2 + y^2 - z^2", QI), parse_curve("x^2 + y^2 - 2*z^2", QI)
    assert [str(p) for p in common_points(c1, c2)] == ["[1 : -t : 0]", "[1 : t : 0]"]
