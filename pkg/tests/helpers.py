"""Independent oracles for the test suite (sympy over Q)."""

from fractions import Fraction

import sympy as sp

from infinitesimal.basefield import QQ
from infinitesimal.poly import MPoly, Poly


def to_sympy(p, symbols):
    """MPoly or Poly over Q -> sympy expression."""
    if isinstance(p, Poly):
        (s,) = symbols
        return sum((sp.Rational(c.rational().numerator, c.rational().denominator) * s**i
                    for i, c in enumerate(p.coeffs)), sp.Integer(0))
    expr = sp.Integer(0)
    for e, c in p.terms.items():
        q = c.rational()
        mono = sp.Integer(1)
        for s, k in zip(symbols, e):
            mono *= s**k
        expr += sp.Rational(q.numerator, q.denominator) * mono
    return expr


def from_sympy(expr, gens, symbols, field=QQ):
    poly = sp.Poly(sp.expand(expr), *symbols)
    terms = {}
    for mon, c in poly.terms():
        c = sp.Rational(c)
        terms[tuple(mon)] = field(Fraction(int(c.p), int(c.q)))
    return MPoly(field, gens, terms)


def random_poly(rng, deg, bound=5, var="x", field=QQ):
    coeffs = [rng.randint(-bound, bound) for _ in range(deg + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = 1
    return Poly(field, coeffs, var)


def random_bipoly(rng, dx, dy, bound=4, density=0.6, gens=("x", "y"), field=QQ):
    terms = {}
    for i in range(dx + 1):
        for j in range(dy + 1):
            if rng.random() < density:
                c = rng.randint(-bound, bound)
                if c:
                    terms[(i, j)] = c
    terms[(rng.randint(0, dx), dy)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return MPoly(field, gens, terms)


# -- independent multiplicity oracle --------------------------------------------------

SX, SY, SZ = sp.symbols("x y z")


def _sympy_frames():
    import random

    yield sp.eye(3)
    rng = random.Random("independent-oracle")
    while True:
        m = sp.Matrix(3, 3, lambda i, j: rng.randint(-3, 3))
        if m.det() != 0:
            yield m


def sympy_mult(f_text, g_text, point):
    """Order of vanishing of Res_y at ``point`` in a generic frame, computed
    entirely in sympy (``i`` may appear in coordinates as ``I``)."""
    F, G = sp.sympify(f_text.replace("^", "**")), sp.sympify(g_text.replace("^", "**"))
    p = sp.Matrix([sp.sympify(c) for c in point])
    d, e = sp.Poly(F, SX, SY, SZ).total_degree(), sp.Poly(G, SX, SY, SZ).total_degree()
    for _, g in zip(range(200), _sympy_frames()):
        sub = dict(zip((SX, SY, SZ), g * sp.Matrix([SX, SY, SZ])))
        Fg, Gg = sp.expand(F.subs(sub, simultaneous=True)), sp.expand(G.subs(sub, simultaneous=True))
        if sp.Poly(Fg, SY).degree() != d or sp.Poly(Gg, SY).degree() != e:
            continue
        if sp.Poly(Fg, SX, SY, SZ).coeff_monomial(SY**d) == 0 or sp.Poly(Gg, SX, SY, SZ).coeff_monomial(SY**e) == 0:
            continue
        q = g.inv() * p
        if sp.simplify(q[2]) == 0:
            continue
        a = sp.simplify(q[0] / q[2])
        f, h = Fg.subs(SZ, 1), Gg.subs(SZ, 1)
        R = sp.expand(sp.resultant(f, h, SY))
        if sp.Poly(R, SX, extension=True).degree() != d * e:
            continue
        fixed = sp.gcd(sp.Poly(f.subs(SX, a), SY, extension=True), sp.Poly(h.subs(SX, a), SY, extension=True))
        if sp.sqf_part(fixed).degree() != 1:
            continue
        Rp, lin = sp.Poly(R, SX, extension=True), sp.Poly(SX - a, SX, extension=True)
        k = 0
        while True:
            quo, rem = sp.div(Rp, lin)
            if not rem.is_zero:
                return k
            Rp, k = quo, k + 1
    raise RuntimeError("no generic frame")
