import random
from fractions import Fraction

import pytest

from infinitesimal.basefield import QQ, field_make
from infinitesimal.errors import IndeterminateValuation, NotInValuationRing
from infinitesimal.parsing import parse_puiseux
from infinitesimal.puiseux import INF, PuiseuxElement, in_M, in_O, p_arith, random_puiseux, residue, val

QI = field_make([1, 0, 1])
E = PuiseuxElement.eps(QQ)


def S(text, field=QQ):
    return parse_puiseux(text, field)


# -- examples ---------------------------------------------------------------------------


def test_val_examples():
    assert val(S("eps^(3/2) + eps^2")) == Fraction(3, 2)
    assert val(PuiseuxElement.zero(QQ)) == INF
    with pytest.raises(IndeterminateValuation):
        val(PuiseuxElement.zero(QQ, 8))


def test_residue_examples():
    assert residue(S("2 + eps")) == QQ(2)
    assert residue(S("eps^(1/2)")) == QQ(0)
    with pytest.raises(NotInValuationRing):
        residue(S("eps^(-1)"))


def test_arith_examples():
    h = S("eps^(1/2)")
    assert val(p_arith(h, h, "mul")) == 1
    inv = p_arith(S("1 + eps"), op="inv", prec=4)
    assert inv == S("1 - eps + eps^2 - eps^3 + O(eps^4)")
    back = S("1 + eps") * inv
    assert back.terms == ((0, QQ(1)),) and back.trunc >= 4
    assert S("1 + eps") + S("-1 + eps") == S("2*eps")


def test_membership_examples():
    assert in_O(S("3 + eps^2")) and not in_M(S("3 + eps^2"))
    assert in_O(S("eps^(1/3)")) and in_M(S("eps^(1/3)"))
    assert not in_O(S("eps^(-2)")) and not in_M(S("eps^(-2)"))


def test_truncation_propagation():
    x = S("1 + eps + O(eps^3)")
    y = S("eps^2 + O(eps^5)")
    assert (x + y).trunc == 3
    # min(3 + v(y), 5 + v(x)) = min(5, 5)
    assert (x * y).trunc == 5


def test_cancellation_to_indeterminate():
    x = S("eps + O(eps^2)")
    d = x - S("eps")
    assert d.terms == () and d.trunc == 2
    with pytest.raises(IndeterminateValuation):
        d.is_zero()
    with pytest.raises(IndeterminateValuation):
        d.inverse()


def test_canonical_form_invariants():
    rng = random.Random(3)
    for _ in range(200):
        x = random_puiseux(rng) * random_puiseux(rng) + random_puiseux(rng)
        exps = [e for e, _ in x.terms]
        assert exps == sorted(set(exps))
        assert all(not c.is_zero() for _, c in x.terms)
        assert all(e < x.trunc for e in exps)
        assert all((e * x.ramification()).denominator == 1 for e in exps)


# -- valuation properties ---------------------------------------------------------------


@pytest.mark.parametrize("field", [QQ, QI], ids=["Q", "Q(i)"])
def test_valuation_axioms(field):
    rng = random.Random(21)
    for _ in range(1000):
        x, y = random_puiseux(rng, field), random_puiseux(rng, field)
        assert val(x * y) == val(x) + val(y)
        s = x + y
        if s.terms:
            assert val(s) >= min(val(x), val(y))
        if val(x) != val(y):
            assert val(s) == min(val(x), val(y))


@pytest.mark.parametrize("field", [QQ, QI], ids=["Q", "Q(i)"])
def test_residue_is_homomorphism_fixing_constants(field):
    rng = random.Random(22)
    done = 0
    while done < 1000:
        x = random_puiseux(rng, field, min_exp=0)
        y = random_puiseux(rng, field, min_exp=0)
        assert residue(x + y) == residue(x) + residue(y)
        assert residue(x * y) == residue(x) * residue(y)
        c = field([rng.randint(-9, 9) for _ in range(field.degree)])
        assert residue(PuiseuxElement.const(field, c)) == c
        done += 1


def test_inverse_round_trip():
    rng = random.Random(23)
    for _ in range(300):
        x = random_puiseux(rng, QI)
        inv = x.inverse(prec=-x.val() + 12)
        prod = x * inv
        assert prod.terms == ((0, QI.one),)
        assert prod.trunc >= 12


def test_rescale_is_automorphism():
    rng = random.Random(24)
    for _ in range(200):
        x, y = random_puiseux(rng), random_puiseux(rng)
        assert (x * y).rescale(3) == x.rescale(3) * y.rescale(3)
        assert (x + y).rescale(3) == x.rescale(3) + y.rescale(3)
        assert val(x.rescale(3)) == 3 * val(x)


def test_power():
    assert (1 + E) ** 3 == S("1 + 3*eps + 3*eps^2 + eps^3")
    assert E ** -2 == S("eps^(-2)")
