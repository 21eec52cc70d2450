"""Puiseux roots of ``F(eps, X)`` by Newton-polygon iteration.

Each edge of the Newton polygon of ``F = sum a_i(eps) X^i`` gives a leading
exponent ``mu`` and a characteristic polynomial whose roots ``c`` are the
possible leading coefficients. The substitution ``X = eps^mu (c + X1)`` is
repeated while ``c`` is a multiple root; once ``c`` is simple the branch is
isolated and is lifted to the requested precision by Newton iteration, which
converges quadratically because the derivative is then a unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import NotSquareFree, RequiresExtension, TruncationInsufficient
from .poly import MPoly, Poly, field_extension, is_squarefree_in
from .puiseux import INF, TRUNCATION_CAP, PuiseuxElement

MAX_DEPTH = 64


@dataclass(frozen=True)
class BranchRequest:
    """``F`` is an MPoly in the generators ``("eps", "X")``."""

    F: MPoly
    target_truncation: Fraction = Fraction(16)
    positive_valuation_only: bool = False
    extend_field: bool = False

    def __post_init__(self):
        if self.F.gens != ("eps", "X"):
            raise ValueError(f"expected generators ('eps', 'X'), got {self.F.gens}")
        if self.F.is_zero() or self.F.degree("X") < 1:
            raise ValueError("F must have positive degree in X")
        object.__setattr__(self, "target_truncation", Fraction(self.target_truncation))


@dataclass(frozen=True)
class Branch:
    """One Puiseux root.

    With ``extend_field`` the series may live over an extension of the
    constant field; it then stands for ``conjugates`` distinct roots (its
    images under the embeddings of that extension), and ``embed`` maps the
    constant field of ``F`` into the series' field.
    """

    series: PuiseuxElement
    multiplicity_hint: int = 1
    conjugates: int = 1
    embed: object = field(default=None, compare=False, repr=False)


def x_coefficients(F):
    """``[a_0, a_1, ...]`` as exact Puiseux elements in eps."""
    out = []
    for c in F.coeff_list("X"):
        out.append(PuiseuxElement(F.field, [(e[0], v) for e, v in c.terms.items()]))
    return out


def evaluate(coeffs, x):
    """Horner evaluation of ``sum coeffs[i] x^i`` in truncated arithmetic."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def newton_polygon(coeffs):
    """Lower-hull edges as ``(i1, i2, mu)``, ``mu`` being the root valuation.

    Edges are listed left to right, i.e. by decreasing ``mu``.
    """
    pts = [(i, c.val()) for i, c in enumerate(coeffs) if c.terms]
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] unless it lies strictly below the chord to p
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    edges = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        edges.append((i1, i2, Fraction(v1 - v2) / (i2 - i1)))
    return edges


def _characteristic(coeffs, i1, i2, mu):
    field = coeffs[0].field
    m = coeffs[i1].val() + i1 * mu
    phi = [field.zero] * (i2 - i1 + 1)
    for i in range(i1, i2 + 1):
        c = coeffs[i]
        if c.terms and c.val() + i * mu == m:
            phi[i - i1] = c.terms[0][1]
    return Poly(field, phi, "t"), m


def _substitute(coeffs, mu, c, m):
    """Coefficients of ``eps^-m * P(eps^mu (c + X1))`` as a polynomial in X1."""
    n = len(coeffs) - 1
    scaled = [coeffs[i].shift(i * mu - m) for i in range(n + 1)]
    out = []
    for j in range(n + 1):
        acc = PuiseuxElement.zero(coeffs[0].field)
        cpow = c.field.one
        for i in range(j, n + 1):
            if scaled[i].terms:
                acc = acc + scaled[i].scale(comb(i, j) * cpow)
            cpow = cpow * c
        out.append(acc)
    while len(out) > 1 and not out[-1].terms:
        out.pop()
    return out


def _field_roots(phi, extend=False):
    """Nonzero roots of ``phi`` with multiplicities, as ``(root, mult, ext)``.

    ``ext`` is ``None`` for a root in the constant field. With ``extend``, each
    irreducible factor of degree ``k > 1`` contributes one root in a new field,
    ``ext = (k, embed)``, standing for its ``k`` conjugates.
    """
    roots = []
    for f, mult in phi.factor():
        if f.degree == 1:
            r = -f.coeffs[0]
            if r:
                roots.append((r, mult, None))
        elif extend:
            _, embed, beta = field_extension(f)
            roots.append((beta, mult, (f.degree, embed)))
        else:
            raise RequiresExtension(f)
    roots.sort(key=lambda rm: (rm[2] is not None, rm[0].field.degree, rm[0].c))
    return roots


def _embed_series(x, K2, embed):
    return PuiseuxElement(K2, [(e, embed(c)) for e, c in x.terms], x.trunc)


def _compose(f, g):
    if f is None or g is None:
        return f or g
    return lambda c: g(f(c))


def _lift_simple(coeffs, precision):
    """Newton iteration for the unique root of positive valuation.

    Requires ``coeffs[0]`` to have positive valuation and ``coeffs[1]`` to be a
    unit, so the root is known to ``precision`` after O(log) steps.
    """
    field = coeffs[0].field
    deriv = [coeffs[i].scale(i) for i in range(1, len(coeffs))] or [PuiseuxElement.zero(field)]
    if not coeffs[0].terms:
        return PuiseuxElement.zero(field)
    p = coeffs[0].val()
    x = PuiseuxElement.zero(field)
    while p < precision:
        p = min(2 * p, precision)
        cut = [c.truncate(p) for c in coeffs]
        r = evaluate(cut, x).truncate(p)
        d = evaluate([c.truncate(p) for c in deriv], x).truncate(p)
        step = (r * d.inverse()).truncate(p)
        x = PuiseuxElement._raw(field, (x - step).truncate(p).terms, INF)
    return x.truncate(precision)


def _solve(coeffs, positive_only, need, depth, extend=False):
    """Roots of ``sum coeffs[i] X^i`` (exact coefficients).

    ``need`` is the relative precision required of each returned root and of
    the residual. Returns ``(root, conjugates, embed)`` triples; ``embed`` maps
    the field of ``coeffs`` into the root's field (``None`` if unchanged).
    """
    if depth > MAX_DEPTH:
        raise TruncationInsufficient(f"branches not separated after {MAX_DEPTH} Newton steps")
    field = coeffs[0].field
    roots = []
    if not coeffs[0].terms:
        roots.append((PuiseuxElement.zero(field), 1, None))
        coeffs = coeffs[1:]
    if len(coeffs) < 2:
        return roots
    for i1, i2, mu in newton_polygon(coeffs):
        if positive_only and mu <= 0:
            continue
        phi, m = _characteristic(coeffs, i1, i2, mu)
        for c, mult, ext in _field_roots(phi, extend):
            cs, weight, embed = coeffs, 1, None
            if ext is not None:
                weight, embed = ext
                cs = [_embed_series(a, c.field, embed) for a in coeffs]
            sub = _substitute(cs, mu, c, m)
            rel = max(need - mu, need - m, Fraction(1))
            if mult == 1:
                tails = [(_lift_simple(sub, rel), 1, None)]
            else:
                tails = _solve(sub, True, rel, depth + 1, extend)
            for t, w, inner in tails:
                lead = PuiseuxElement(t.field, [(0, c if inner is None else inner(c))])
                roots.append(((lead + t).shift(mu), weight * w, _compose(embed, inner)))
    return roots


def _branch_key(x):
    return (x.field.degree, x.field.minpoly or (), [(e, c.c) for e, c in x.terms])


def puiseux_roots(req):
    """Every Puiseux root of ``req.F`` (only those of positive valuation when
    ``req.positive_valuation_only``), each verified by back-substitution.

    Raises :class:`RequiresExtension` when a characteristic equation has no
    root in the constant field (unless ``req.extend_field``),
    :class:`NotSquareFree` if ``F`` has a repeated factor in ``X`` and
    :class:`TruncationInsufficient` if branches cannot be separated or
    verified within the truncation cap.
    """
    F = req.F
    target = req.target_truncation
    if not is_squarefree_in(F, "X"):
        raise NotSquareFree(f"{F} is not square-free in X")
    coeffs = x_coefficients(F)
    margin = Fraction(0)
    while True:
        need = target + margin
        if need > TRUNCATION_CAP + target:
            raise TruncationInsufficient(f"back-substitution did not reach eps^{target}")
        roots = _solve(coeffs, req.positive_valuation_only, need, 0, req.extend_field)
        ok = True
        for x, _, embed in roots:
            if x.trunc < target:
                ok = False
                break
            cs = coeffs if embed is None else [_embed_series(a, x.field, embed) for a in coeffs]
            r = evaluate(cs, x)
            if (r.terms and r.terms[0][0] < target) or r.trunc < target:
                ok = False
                break
        if ok:
            break
        margin = max(2 * margin, target)
    roots.sort(key=lambda r: _branch_key(r[0]))
    return [Branch(x, 1, w, embed) for x, w, embed in roots]


def residual(F, x):
    """``F(eps, x)`` for a branch ``x`` (used by callers' witness checks)."""
    return evaluate(x_coefficients(F), x)
