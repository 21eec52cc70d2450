"""Plane projective curves, their parameter points, and intersection points.

A curve of degree ``d`` is a nonzero ternary form; its coefficient vector, read
in graded lexicographic order with ``x > y > z``, is a point of
``P^(d(d+3)/2)``. Perturbing every coefficient ``c_i`` to ``c_i + eps*r_i``
gives a K-curve whose parameter point specialises back to the original.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .basefield import QQ
from .errors import (
    CommonComponent,
    DegenerateCoordinates,
    NotHomogeneous,
    SingularMatrix,
    UnrepresentablePoint,
)
from .parsing import parse_mpoly
from .poly import MPoly, Poly, det, mat_inverse, poly_gcd, poly_squarefree, resultant
from .projective import ProjPointK, ProjPointL, specialize
from .puiseux import PuiseuxElement

XYZ = ("x", "y", "z")
XYZE = ("x", "y", "z", "eps")
JITTER_BOUND = 100
FRAME_ATTEMPTS = 60


def monomials(d):
    """Exponent triples of degree ``d`` in graded lex order, ``x > y > z``."""
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


class PlaneCurve:
    """A degree-``d`` plane curve given by a homogeneous form in x, y, z."""

    __slots__ = ("form", "degree", "field")

    def __init__(self, form):
        if form.gens != XYZ:
            form = form.reorder(XYZ)
        if form.is_zero():
            raise ValueError("the zero form defines no curve")
        if not form.is_homogeneous():
            raise NotHomogeneous(f"{form} is not homogeneous")
        self.form = form
        self.degree = form.degree()
        self.field = form.field
        if self.degree < 1:
            raise ValueError("curves need positive degree")

    @property
    def params(self):
        """Coefficient vector as a point of P^(d(d+3)/2)."""
        z = self.field.zero
        return ProjPointL([self.form.terms.get(e, z) for e in monomials(self.degree)], field=self.field)

    @property
    def ambient_dim(self):
        return self.degree * (self.degree + 3) // 2

    def __eq__(self, other):
        return isinstance(other, PlaneCurve) and self.params == other.params

    def __hash__(self):
        return hash(self.params)

    def __repr__(self):
        return str(self.form)

    def __call__(self, point):
        return _evaluate_form(self.form, point)


def parse_curve(text, field=QQ):
    return PlaneCurve(parse_mpoly(text, field, XYZ))


def _evaluate_form(form, point):
    if isinstance(point, ProjPointL):
        return form.evaluate(list(point.coords))
    one = PuiseuxElement.const(form.field, 1)
    return form.evaluate(list(point.coords), one=one)


@dataclass(frozen=True)
class PerturbedCurve:
    """``base`` with each coefficient ``c_i`` moved to ``c_i + eps * jitter[i]``."""

    base: PlaneCurve
    jitter: tuple
    form_eps: MPoly

    @property
    def params(self):
        f = self.base.field
        z = f.zero
        coeffs = []
        for e, r in zip(monomials(self.base.degree), self.jitter):
            c = self.base.form.terms.get(e, z)
            coeffs.append(PuiseuxElement(f, [(0, c), (1, r)]))
        return ProjPointK(coeffs)

    def __call__(self, point):
        f = self.base.field
        if isinstance(point, ProjPointL):
            point = point.to_K()
        one = PuiseuxElement.const(f, 1)
        return self.form_eps.evaluate(list(point.coords) + [PuiseuxElement.eps(f)], one=one)


def perturb(c, seed):
    """First-order jitter of every coefficient with integers from [-100, 100]."""
    rng = random.Random(seed)
    mons = monomials(c.degree)
    jitter = tuple(rng.randint(-JITTER_BOUND, JITTER_BOUND) for _ in mons)
    terms = {}
    for e, r in zip(mons, jitter):
        if e in c.form.terms:
            terms[e + (0,)] = c.form.terms[e]
        if r:
            terms[e + (1,)] = r
    return PerturbedCurve(c, jitter, MPoly(c.field, XYZE, terms))


def incidence(c, p):
    """Whether ``p`` lies on ``c``; undecidable K-values raise IndeterminateValuation."""
    v = c(p)
    if isinstance(v, PuiseuxElement):
        return v.is_zero()
    return v.is_zero()


def linear_substitution(form, g):
    """``form(g * (x, y, z)^T)`` for a 3x3 matrix ``g`` over the constant field."""
    f = form.field
    X = [MPoly.var(f, form.gens, v) for v in XYZ]
    images = {}
    for i, v in enumerate(XYZ):
        acc = MPoly(f, form.gens)
        for j in range(3):
            if g[i][j]:
                acc = acc + X[j].scale(g[i][j])
        images[v] = acc
    return form.subs(images)


def coordinate_change(c, g):
    """The curve ``F o g``: a point ``p`` lies on it iff ``g p`` lies on ``c``."""
    g = [[c.field(a) for a in row] for row in g]
    if det(g, c.field).is_zero():
        raise SingularMatrix("coordinate change must be invertible")
    return PlaneCurve(linear_substitution(c.form, g))


def apply_matrix(g, p):
    """``g * p`` for an L-point or K-point."""
    if isinstance(p, ProjPointL):
        return ProjPointL([sum((g[i][j] * p.coords[j] for j in range(3)), p.field.zero) for i in range(3)],
                          field=p.field)
    out = []
    for i in range(3):
        acc = PuiseuxElement.zero(p.field)
        for j in range(3):
            if g[i][j]:
                acc = acc + p.coords[j] * g[i][j]
        out.append(acc)
    return ProjPointK(out)


def random_unimodular(rng, bound=2):
    """Integer matrix of determinant +-1: permutation times unit-triangular factors."""
    lower = [[1, 0, 0], [rng.randint(-bound, bound), 1, 0], [rng.randint(-bound, bound), rng.randint(-bound, bound), 1]]
    upper = [[1, rng.randint(-bound, bound), rng.randint(-bound, bound)], [0, 1, rng.randint(-bound, bound)], [0, 0, 1]]
    perm = rng.choice([(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)])
    lu = [[sum(lower[i][k] * upper[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    return [lu[perm[i]] for i in range(3)]


def frames(seed=0):
    """Deterministic sequence of candidate coordinate changes, identity first."""
    yield [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    rng = random.Random(f"frame/{seed}")
    for attempt in range(1, FRAME_ATTEMPTS):
        yield random_unimodular(rng, bound=1 + attempt // 10)


def dehomogenize(form, x="x", y="y"):
    """Set ``z = 1``; returns an MPoly in ``(x, y)``."""
    f = form.subs({"z": 1})
    return f.reorder((x, y)) if (x, y) == ("x", "y") else f.rename((x, y, "z")).reorder((x, y))


def y_leading_ok(form, d):
    """``[0:1:0]`` is off the curve iff the ``y^d`` coefficient is nonzero."""
    return (0, d, 0) in form.terms


def _fixed_y(f, g, a):
    """``gcd(f(a, y), g(a, y))`` as a Poly in y."""
    fa = f.subs({"x": a}).to_poly("y")
    ga = g.subs({"x": a}).to_poly("y")
    return poly_gcd(fa, ga)


def nice_field_poly(h):
    """A recognisable defining polynomial for the field generated by a root of ``h``.

    Over Q, quadratics become ``t^2 - D`` with ``D`` a square-free integer and
    anything else is returned monic in ``t``. Over a proper extension ``t``
    already names the field generator, so the factor is written in ``s``.
    """
    h = h.monic()
    if h.degree == 2 and h.field.is_rational:
        from sympy.ntheory.factor_ import core

        b, c = h.coeffs[1].rational(), h.coeffs[0].rational()
        disc = b * b - 4 * c
        num = disc.numerator * disc.denominator
        sign = -1 if num < 0 else 1
        d = sign * core(abs(num), 2)
        return Poly(QQ, [-d, 0, 1], "t")
    return Poly(h.field, h.coeffs, "t" if h.field.is_rational else "s")


def common_points(c1, c2):
    """All intersection points with coordinates in the constant field.

    Works in a coordinate frame where ``[0:1:0]`` is on neither curve, nothing
    lies on ``z = 0`` and distinct points have distinct ``x``; the resultant in
    ``y`` then has degree ``d*e`` and its roots are the points' x-coordinates.
    An irreducible factor of degree > 1 means some point needs a field
    extension (:class:`UnrepresentablePoint`).
    """
    if c1.field != c2.field:
        raise ValueError("curves over different constant fields")
    d, e = c1.degree, c2.degree
    for g in frames():
        F = linear_substitution(c1.form, g)
        G = linear_substitution(c2.form, g)
        if not (y_leading_ok(F, d) and y_leading_ok(G, e)):
            continue
        f, gg = dehomogenize(F), dehomogenize(G)
        R = resultant(f, gg, "y").to_poly("x")
        if R.is_zero():
            raise CommonComponent("the curves share a component")
        if R.degree != d * e:
            continue
        factors = R.factor()
        for h, _ in factors:
            if h.degree > 1:
                raise UnrepresentablePoint(nice_field_poly(h))
        points = []
        degenerate = False
        total = 0
        for h, mult in factors:
            a = -h.coeffs[0]
            ys = poly_squarefree(_fixed_y(f, gg, a))
            if ys.degree != 1:
                degenerate = True
                break
            b = -ys.monic().coeffs[0]
            points.append(apply_matrix(g, ProjPointL([a, b, 1], field=c1.field)))
            total += mult
        if degenerate or total != d * e:
            continue
        return sorted(points, key=ProjPointL.sort_key)
    raise DegenerateCoordinates("no generic coordinate frame found")


def identity_matrix():
    return [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def inverse_matrix(g, field=QQ):
    return mat_inverse(g, field)


__all__ = [
    "PerturbedCurve",
    "PlaneCurve",
    "apply_matrix",
    "common_points",
    "coordinate_change",
    "dehomogenize",
    "frames",
    "incidence",
    "monomials",
    "parse_curve",
    "perturb",
    "random_unimodular",
    "specialize",
]
