"""Projective points over K and L, the specialisation map, and variety predicates.

The specialisation of a K-point multiplies every coordinate by ``eps^-mu``
(``mu`` the least coordinate valuation) so that all coordinates land in the
valuation ring with at least one unit, then applies the residue map
coordinatewise. Any other scalar that achieves this differs by a unit and
gives the same L-point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .basefield import QQ, FieldElement
from .errors import IndeterminateValuation, NotHomogeneous, ParseError
from .parsing import parse_puiseux, split_point
from .poly import MPoly, nullspace
from .puiseux import INF, PuiseuxElement


class ProjPointL:
    """Point of P^n(L), stored with its first nonzero coordinate equal to 1."""

    __slots__ = ("field", "coords")

    def __init__(self, coords, field=None):
        if field is None:
            field = next((c.field for c in coords if isinstance(c, FieldElement)), QQ)
        cs = [field(c) for c in coords]
        lead = next((c for c in cs if c), None)
        if lead is None:
            raise ValueError("all coordinates are zero")
        inv = lead.inverse()
        self.field = field
        self.coords = tuple(c * inv for c in cs)

    @property
    def n(self):
        return len(self.coords) - 1

    def __eq__(self, other):
        return isinstance(other, ProjPointL) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + "]"

    def sort_key(self):
        return [c.c for c in self.coords]

    def to_K(self):
        return ProjPointK([PuiseuxElement.const(self.field, c) for c in self.coords])


class ProjPointK:
    """Point of P^n(K) in homogeneous coordinates (raw representative).

    Equality up to scaling is tested with :func:`same_point`; the canonical
    representative is :meth:`normalized`.
    """

    __slots__ = ("field", "coords")

    def __init__(self, coords, field=None):
        cs = []
        for c in coords:
            if isinstance(c, PuiseuxElement):
                cs.append(c)
            else:
                f = field or (c.field if isinstance(c, FieldElement) else QQ)
                cs.append(PuiseuxElement.const(f, c))
        if not any(c.terms for c in cs):
            raise IndeterminateValuation(message="no coordinate is certifiably nonzero")
        self.field = cs[0].field
        self.coords = tuple(cs)

    @property
    def n(self):
        return len(self.coords) - 1

    def valuations(self):
        return [c.val() for c in self.coords]

    def normalized(self):
        """Divide by the first coordinate of least valuation (which becomes 1)."""
        vals = self.valuations()
        mu = min(vals)
        pivot = self.coords[vals.index(mu)]
        inv = pivot.inverse()
        out = [c * inv if c is not pivot else PuiseuxElement.const(self.field, 1) for c in self.coords]
        return ProjPointK(out)

    def scaled(self, lam):
        return ProjPointK([c * lam for c in self.coords])

    def __repr__(self):
        return "[" + " : ".join(str(c) for c in self.coords) + "]"


def same_point(p, q):
    """Equality in P^n(K) via 2x2 minors; raises if some minor is undecidable."""
    if len(p.coords) != len(q.coords):
        return False
    for i, j in itertools.combinations(range(len(p.coords)), 2):
        if not (p.coords[i] * q.coords[j] - p.coords[j] * q.coords[i]).is_zero():
            return False
    return True


def specialize(p):
    """The specialisation P^n(K) -> P^n(L) attached to the order valuation."""
    if isinstance(p, ProjPointL):
        return p
    vals = p.valuations()
    mu = min(vals)
    return ProjPointL([c.shift(-mu).residue() if v != INF else p.field.zero for c, v in zip(p.coords, vals)],
                      field=p.field)


def embed(p):
    """``[x0 : ... : xn] -> [x0 : ... : xn : 0]``."""
    if isinstance(p, ProjPointL):
        return ProjPointL(p.coords + (p.field.zero,), field=p.field)
    return ProjPointK(p.coords + (PuiseuxElement.zero(p.field),))


def segre(p, q):
    """All products ``x_i * y_j`` in row-major order."""
    if len(p.coords) != len(q.coords):
        raise ValueError("Segre map needs points of the same ambient dimension")
    prods = [a * b for a in p.coords for b in q.coords]
    if isinstance(p, ProjPointL) and isinstance(q, ProjPointL):
        return ProjPointL(prods, field=p.field)
    if isinstance(p, ProjPointL):
        p = p.to_K()
    if isinstance(q, ProjPointL):
        q = q.to_K()
    return ProjPointK([a * b for a in p.coords for b in q.coords])


def parse_point(text, field=QQ):
    """Parse ``[a : b : c]``; returns a :class:`ProjPointL` when no coordinate
    involves ``eps``, else a :class:`ProjPointK`."""
    coords = [parse_puiseux(s, field) for s in split_point(text)]
    if all(c.is_exact() and all(e == 0 for e, _ in c.terms) for c in coords):
        vals = [c.terms[0][1] if c.terms else field.zero for c in coords]
        if not any(vals):
            raise ParseError(f"all coordinates of {text!r} are zero")
        return ProjPointL(vals, field=field)
    return ProjPointK(coords)


# -- variety predicates -------------------------------------------------------------


@dataclass(frozen=True)
class VarietyPredicate:
    """Closed subvariety of ``(P^n)^m`` cut out by multi-homogeneous equations.

    ``gens`` lists the ``m*(n+1)`` coordinate names block by block.
    """

    m: int
    n: int
    equations: tuple
    gens: tuple
    name: str = ""

    def __post_init__(self):
        if len(self.gens) != self.m * (self.n + 1):
            raise ValueError("gens must hold m blocks of n+1 names")
        for eq in self.equations:
            if eq.gens != tuple(self.gens):
                raise ValueError("equation generators do not match the predicate")
            for b in range(self.m):
                if not eq.is_homogeneous(self.block(b)):
                    raise NotHomogeneous(f"{eq} is not homogeneous in block {b}")

    def block(self, b):
        k = self.n + 1
        return self.gens[b * k:(b + 1) * k]


def variety(m, n, equations, gens=None, field=QQ, name=""):
    """Build a predicate from equation strings or MPolys.

    Default names are ``x0_0 ... x0_n, x1_0, ...`` (block, coordinate).
    """
    from .parsing import parse_mpoly

    if gens is None:
        gens = tuple(f"x{b}_{i}" for b in range(m) for i in range(n + 1))
    gens = tuple(gens)
    eqs = []
    for e in equations:
        if isinstance(e, str):
            e = parse_mpoly(e, field, gens)
        eqs.append(e)
    return VarietyPredicate(m, n, tuple(eqs), gens, name)


def variety_holds(V, points):
    """Whether the tuple ``points`` satisfies every equation of ``V`` exactly.

    For K-points a value that is zero only up to truncation raises
    :class:`IndeterminateValuation`.
    """
    if len(points) != V.m:
        raise ValueError(f"expected {V.m} points, got {len(points)}")
    for p in points:
        if len(p.coords) != V.n + 1:
            raise ValueError(f"point {p} does not lie in P^{V.n}")
    over_k = any(isinstance(p, ProjPointK) for p in points)
    values = []
    for p in points:
        if over_k and isinstance(p, ProjPointL):
            p = p.to_K()
        values.extend(p.coords)
    for eq in V.equations:
        if over_k:
            one = PuiseuxElement.const(eq.field, 1)
            r = eq.evaluate(values, one=one)
            if not r.is_zero():
                return False
        else:
            if eq.evaluate(values):
                return False
    return True


def _monomials(nvars, degree):
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        yield tuple(e)


def variety_through(points, degrees, rng, field=None):
    """A random multi-homogeneous hypersurface over L containing ``points``.

    ``degrees`` gives the degree in each block. The coefficient vector is a
    random element of the kernel of the linear conditions "vanish at the
    tuple", so the hypothesis "V holds at the tuple" is true by construction.
    Returns ``None`` when the kernel is trivial.
    """
    m = len(points)
    n = points[0].n
    field = field or points[0].field
    pts = [p if isinstance(p, ProjPointK) else p.to_K() for p in points]
    block_monos = [list(_monomials(n + 1, d)) for d in degrees]
    monos = [tuple(itertools.chain.from_iterable(ms)) for ms in itertools.product(*block_monos)]
    one = PuiseuxElement.const(field, 1)
    cols = []
    for e in monos:
        v = one
        for k, p in enumerate(pts):
            for i, c in enumerate(p.coords):
                exp = e[k * (n + 1) + i]
                if exp:
                    v = v * c**exp
        if not v.is_exact():
            raise ValueError("variety_through needs exact coordinates")
        cols.append(dict(v.terms))
    exps = sorted({e for col in cols for e in col})
    matrix = [[col.get(e, field.zero) for col in cols] for e in exps]
    if not matrix:
        matrix = [[field.zero] * len(monos)]
    basis = nullspace(matrix, field)
    if not basis:
        return None
    coef = [field.zero] * len(monos)
    while not any(coef):
        for b in basis:
            r = rng.randint(-5, 5)
            coef = [c + r * x for c, x in zip(coef, b)]
    gens = tuple(f"x{b}_{i}" for b in range(m) for i in range(n + 1))
    eq = MPoly(field, gens, dict(zip(monos, coef)))
    return VarietyPredicate(m, n, (eq,), gens, "random")
