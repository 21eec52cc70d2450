"""Intersection multiplicity by counting deformed intersection points.

``mult_nonstandard`` perturbs both curves infinitesimally and counts the
intersection points of the perturbed pair that specialise to ``l``, each one
an explicit pair of Puiseux series. ``mult_oracle`` is the classical order of
vanishing of the resultant in a generic frame. The two must agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .curves import (
    PlaneCurve,
    apply_matrix,
    common_points,
    dehomogenize,
    frames,
    linear_substitution,
    perturb,
    y_leading_ok,
    _fixed_y,
)
from .errors import (
    CommonComponent,
    DegenerateCoordinates,
    IndeterminateValuation,
    NondeterministicCount,
    NotSquareFree,
    TruncationInsufficient,
)
from .newton_puiseux import BranchRequest, puiseux_roots
from .poly import MPoly, is_squarefree_in, mat_inverse, poly_squarefree, resultant, subresultant1
from .projective import ProjPointK, ProjPointL, specialize
from .puiseux import PuiseuxElement


DISPLAY_TRUNCATION = 4


@dataclass(frozen=True)
class MultConfig:
    truncation_start: Fraction = Fraction(16)
    truncation_cap: Fraction = Fraction(1024)
    seeds: tuple = (1, 2)
    retry_limit: int = 5

    def __post_init__(self):
        object.__setattr__(self, "truncation_start", Fraction(self.truncation_start))
        object.__setattr__(self, "truncation_cap", Fraction(self.truncation_cap))
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if not 0 < self.truncation_start <= self.truncation_cap:
            raise ValueError("need 0 < truncation_start <= truncation_cap")
        if not self.seeds:
            raise ValueError("at least one seed is required")
        if self.retry_limit < 1:
            raise ValueError("retry_limit must be positive")


@dataclass(frozen=True)
class Witness:
    """A deformed intersection point ``[x : y : z]`` over K, in the input frame.

    When its coefficients lie in an extension of the constant field it stands
    for ``conjugates`` distinct points, its images under the embeddings of
    that extension; ``embed`` maps the constant field into it.
    """

    point: ProjPointK
    x_local: PuiseuxElement
    y_local: PuiseuxElement
    conjugates: int = 1
    embed: object = dc_field(default=None, compare=False, repr=False)

    def to_dict(self, precision=DISPLAY_TRUNCATION):
        shown = "[" + " : ".join(str(c.truncate(precision)) for c in self.point.coords) + "]"
        return {"point": shown, "field": self.point.field.describe(), "conjugates": self.conjugates}

    def __str__(self):
        return str(self.point)


@dataclass
class MultReport:
    l: ProjPointL
    mult_nonstandard: int
    mult_oracle: int
    branches: list = dc_field(default_factory=list)
    truncation_used: Fraction = Fraction(0)

    @property
    def agree(self):
        return self.mult_nonstandard == self.mult_oracle

    def to_dict(self):
        return {
            "l": format_point(self.l),
            "mult_nonstandard": self.mult_nonstandard,
            "mult_oracle": self.mult_oracle,
            "agree": self.agree,
            "witnesses": [w.to_dict() for w in self.branches],
        }


@dataclass
class BezoutReport:
    entries: list
    expected: int
    reports: list = dc_field(default_factory=list)

    @property
    def sum(self):
        return sum(m for _, m in self.entries)

    @property
    def verdict(self):
        return self.sum == self.expected and all(r.agree for r in self.reports)


def format_point(p):
    return "[" + ":".join(str(c) for c in p.coords) + "]"


# -- the generic frame ----------------------------------------------------------------


@dataclass
class Frame:
    """Coordinates ``p = g p'`` in which ``l' = [a : b : 1]`` is the only
    intersection point on the line ``x = a``, ``[0:1:0]`` is on neither curve
    and the resultant in ``y`` has full degree ``d*e``."""

    g: list
    F: MPoly
    G: MPoly
    a: object
    b: object
    R: object


def find_frame(c1, c2, l):
    if c1.field != c2.field or l.field != c1.field:
        raise ValueError("curves and point must share the constant field")
    if len(l.coords) != 3:
        raise ValueError("the point must lie in P^2")
    if not (c1(l).is_zero() and c2(l).is_zero()):
        raise ValueError(f"{format_point(l)} is not a common point of the curves")
    d, e = c1.degree, c2.degree
    field = c1.field
    for g in frames():
        F = linear_substitution(c1.form, g)
        G = linear_substitution(c2.form, g)
        if not (y_leading_ok(F, d) and y_leading_ok(G, e)):
            continue
        gi = mat_inverse([[field(x) for x in row] for row in g], field)
        lp = [sum((gi[i][j] * l.coords[j] for j in range(3)), field.zero) for i in range(3)]
        if lp[2].is_zero():
            continue
        a, b = lp[0] / lp[2], lp[1] / lp[2]
        f, gg = dehomogenize(F), dehomogenize(G)
        R = resultant(f, gg, "y").to_poly("x")
        if R.is_zero():
            raise CommonComponent("the curves share a component")
        if R.degree != d * e:
            continue
        if poly_squarefree(_fixed_y(f, gg, a)).degree != 1:
            continue
        return Frame(g, F, G, a, b, R)
    raise DegenerateCoordinates("no generic coordinate frame found")


def mult_oracle(c1, c2, l):
    """Order of vanishing of ``Res_y`` at the x-coordinate of ``l`` in a generic frame."""
    fr = find_frame(c1, c2, l)
    return fr.R.root_multiplicity(fr.a)


# -- the deformed count ---------------------------------------------------------------


def _local_form(pc, a, b):
    """``F_eps(X + a, Y + b, 1)`` as an MPoly in ``(X, Y, eps)``."""
    f = pc.form_eps
    gens = ("X", "Y", "z", "eps")
    f = f.rename(gens)
    X = MPoly.var(f.field, gens, "X")
    Y = MPoly.var(f.field, gens, "Y")
    f = f.subs({"X": X + a, "Y": Y + b, "z": 1})
    return f.reorder(("X", "Y", "eps"))


class _Regenerate(Exception):
    """Perturbation not generic enough; try another."""


def _embed_mpoly(p, K2, embed):
    return MPoly(K2, p.gens, {e: embed(c) for e, c in p.terms.items()})


def _count_once(fr, seed, attempt, T):
    p1 = perturb(PlaneCurve(fr.F), f"{seed}/{attempt}/1")
    p2 = perturb(PlaneCurve(fr.G), f"{seed}/{attempt}/2")
    f = _local_form(p1, fr.a, fr.b)
    g = _local_form(p2, fr.a, fr.b)
    if f.degree("Y") < 1 or g.degree("Y") < 1:
        raise _Regenerate()
    R = resultant(f, g, "Y").reorder(("eps", "X"))
    if R.is_zero() or R.degree("X") < 1 or not is_squarefree_in(R, "X"):
        raise _Regenerate()
    s11, s10 = subresultant1(f, g, "Y")
    s11, s10 = s11.reorder(("eps", "X")), s10.reorder(("eps", "X"))
    target = T
    for _ in range(8):
        try:
            branches = puiseux_roots(BranchRequest(R, target, positive_valuation_only=True, extend_field=True))
        except NotSquareFree:
            raise _Regenerate() from None
        witnesses = []
        short = None
        for br in branches:
            X = br.series
            field = X.field
            if br.embed is None:
                fe, ge, s11e, s10e, a, b = f, g, s11, s10, fr.a, fr.b
            else:
                fe, ge, s11e, s10e = (_embed_mpoly(q, field, br.embed) for q in (f, g, s11, s10))
                a, b = br.embed(fr.a), br.embed(fr.b)
            one = PuiseuxElement.const(field, 1)
            eps = PuiseuxElement.eps(field)
            den = s11e.evaluate([eps, X], one=one)
            num = s10e.evaluate([eps, X], one=one)
            if not den.terms:
                if den.is_exact():
                    raise _Regenerate()
                short = T
                break
            Y = -(num * den.inverse())
            if not Y.terms and not Y.is_exact():
                short = T
                break
            if Y.terms and Y.val() <= 0:
                raise _Regenerate()
            worst = None
            for h in (fe, ge):
                r = h.evaluate([X, Y, eps], one=one)
                if r.terms and r.terms[0][0] < T:
                    if r.terms[0][0] < r.trunc:
                        raise TruncationInsufficient("branch residual does not vanish")
                    worst = r.terms[0][0] if worst is None else min(worst, r.terms[0][0])
                elif r.trunc < T:
                    worst = r.trunc if worst is None else min(worst, r.trunc)
            if worst is not None:
                short = worst if short is None else min(short, worst)
                continue
            local = ProjPointK([X + a, Y + b, one])
            witnesses.append(Witness(apply_matrix(fr.g, local), X, Y, br.conjugates, br.embed))
        if short is None:
            return sum(w.conjugates for w in witnesses), witnesses
        target = target + (T - short) + 1
    raise TruncationInsufficient(f"witness residuals do not reach eps^{T}")


def _count_at_truncation(fr, seed, cfg, T):
    for attempt in range(cfg.retry_limit):
        try:
            return _count_once(fr, seed, attempt, T)
        except _Regenerate:
            continue
    raise NondeterministicCount(f"no generic perturbation for seed {seed} after {cfg.retry_limit} attempts")


def _nonstandard(c1, c2, l, cfg):
    fr = find_frame(c1, c2, l)
    T = cfg.truncation_start
    while True:
        try:
            results = [_count_at_truncation(fr, s, cfg, T) for s in cfg.seeds]
            break
        except (TruncationInsufficient, IndeterminateValuation):
            if T >= cfg.truncation_cap:
                raise TruncationInsufficient(f"truncation cap eps^{cfg.truncation_cap} reached") from None
            T = min(2 * T, cfg.truncation_cap)
    counts = {r[0] for r in results}
    if len(counts) != 1:
        raise NondeterministicCount(f"seeds {list(cfg.seeds)} give counts {[r[0] for r in results]}")
    n, witnesses = results[0]
    for w in witnesses:
        target = l if w.embed is None else ProjPointL([w.embed(c) for c in l.coords], field=w.point.field)
        if specialize(w.point) != target:
            raise AssertionError(f"witness {w} does not specialise to {format_point(l)}")
    return n, witnesses, T


def mult_nonstandard(c1, c2, l, cfg=None):
    """Number of deformed intersection points specialising to ``l``.

    Returns ``(count, witnesses)``; each witness is a K-point lying on both
    perturbed curves to the working truncation.
    """
    n, witnesses, _ = _nonstandard(c1, c2, l, cfg or MultConfig())
    return n, witnesses


def mult_geq(c1, c2, l, n, cfg=None):
    if n <= 0:
        return True
    return mult_nonstandard(c1, c2, l, cfg)[0] >= n


def mult_report(c1, c2, l, cfg=None):
    cfg = cfg or MultConfig()
    n, witnesses, T = _nonstandard(c1, c2, l, cfg)
    return MultReport(l, n, mult_oracle(c1, c2, l), witnesses, T)


def bezout_check(c1, c2, cfg=None):
    cfg = cfg or MultConfig()
    reports = [mult_report(c1, c2, l, cfg) for l in common_points(c1, c2)]
    entries = [(r.l, r.mult_nonstandard) for r in reports]
    return BezoutReport(entries, c1.degree * c2.degree, reports)


def _trunc_text(T):
    return str(T.numerator) if T.denominator == 1 else str(T)


def report_dict(c1, c2, reports, cfg, expected=None):
    """The JSON schema shared by the CLI and the tests."""
    total = sum(r.mult_nonstandard for r in reports)
    expected = c1.degree * c2.degree if expected is None else expected
    used = max((r.truncation_used for r in reports), default=cfg.truncation_start)
    return {
        "curve1": str(c1.form),
        "curve2": str(c2.form),
        "field": c1.field.describe(),
        "points": [r.to_dict() for r in reports],
        "sum": total,
        "expected": expected,
        "verdict": total == expected and all(r.agree for r in reports),
        "seeds": list(cfg.seeds),
        "truncation_used": _trunc_text(used),
    }


def dumps(report):
    return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False)


__all__ = [
    "BezoutReport",
    "MultConfig",
    "MultReport",
    "Witness",
    "bezout_check",
    "find_frame",
    "mult_geq",
    "mult_nonstandard",
    "mult_oracle",
    "mult_report",
    "report_dict",
]
