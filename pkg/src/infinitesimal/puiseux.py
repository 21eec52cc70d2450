"""Truncated Puiseux series in ``eps`` with the order valuation.

A :class:`PuiseuxElement` is a finite list of terms ``c * eps^e`` with rational
exponents, plus a truncation ``O(eps^r)`` (``r`` may be infinite, in which case
the element is exact: a Puiseux polynomial). The order valuation is the lowest
exponent present; the valuation ring is ``val >= 0`` and its maximal ideal is
``val > 0``; the residue map reads off the ``eps^0`` coefficient.

Zero-testing is three-valued. An element with no terms but a finite
truncation might be zero or not, and asking for its valuation raises
:class:`IndeterminateValuation` instead of guessing.

>>> from infinitesimal.basefield import QQ
>>> e = PuiseuxElement.eps(QQ)
>>> x = 1 + e
>>> x.inverse(prec=4)
1 - eps + eps^2 - eps^3 + O(eps^4)
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from .basefield import QQ, FieldElement
from .errors import IndeterminateValuation, NonInvertible, NotInValuationRing

INF = math.inf

#: truncation used when an exact element has to be inverted
DEFAULT_TRUNCATION = Fraction(32)
#: ceiling for adaptive truncation escalation in the engines
TRUNCATION_CAP = Fraction(1024)


def _integral(terms, den):
    """Terms as ``(int exponent * den, int coordinates)`` over one common denominator."""
    D = 1
    for _, c in terms:
        for q in c.c:
            if q.denominator != 1:
                D = _lcm(D, q.denominator)
    return [(int(e * den), [q.numerator * (D // q.denominator) for q in c.c]) for e, c in terms], D


def _reduce(row, field):
    """Reduce an integer coefficient row modulo the (monic) minimal polynomial."""
    d = field.degree
    if d == 1:
        return row
    m = field.minpoly
    row = list(row)
    if all(q.denominator == 1 for q in m):
        mi = [int(q) for q in m]
        for k in range(2 * d - 2, d - 1, -1):
            coef = row[k]
            if coef:
                for i in range(d):
                    row[k - d + i] -= coef * mi[i]
        return row[:d]
    row = [Fraction(x) for x in row]
    for k in range(2 * d - 2, d - 1, -1):
        coef = row[k]
        if coef:
            for i in range(d):
                row[k - d + i] -= coef * m[i]
    return row[:d]


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _denom(q):
    return 1 if q == INF else q.denominator


class PuiseuxElement:
    """Immutable truncated Puiseux series over a constant field.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs with strictly
    increasing :class:`~fractions.Fraction` exponents, all below ``trunc``.
    """

    __slots__ = ("field", "terms", "trunc")

    def __init__(self, field, terms=(), trunc=INF):
        if isinstance(terms, dict):
            terms = terms.items()
        if trunc != INF:
            trunc = Fraction(trunc)
        acc = {}
        for e, c in terms:
            e = Fraction(e)
            if e >= trunc:
                continue
            c = field(c)
            acc[e] = acc[e] + c if e in acc else c
        self.field = field
        self.terms = tuple((e, acc[e]) for e in sorted(acc) if not acc[e].is_zero())
        self.trunc = trunc

    @classmethod
    def _raw(cls, field, terms, trunc):
        obj = cls.__new__(cls)
        obj.field = field
        obj.terms = terms
        obj.trunc = trunc
        return obj

    @classmethod
    def const(cls, field, c):
        return cls(field, [(0, c)])

    @classmethod
    def eps(cls, field=QQ, exponent=1):
        return cls(field, [(exponent, 1)])

    @classmethod
    def zero(cls, field=QQ, trunc=INF):
        return cls._raw(field, (), trunc if trunc == INF else Fraction(trunc))

    # -- valuation -------------------------------------------------------------

    def is_exact(self):
        return self.trunc == INF

    def val(self):
        """Order of the lowest term; ``INF`` for exact zero."""
        if self.terms:
            return self.terms[0][0]
        if self.trunc == INF:
            return INF
        raise IndeterminateValuation(self.trunc)

    def _vlow(self):
        """A lower bound for the valuation that never raises."""
        return self.terms[0][0] if self.terms else self.trunc

    def is_zero(self):
        """True for exact zero, False if some term survives; raises if undecidable."""
        return self.val() == INF

    def lead(self):
        if not self.terms:
            self.val()
            raise ValueError("zero has no leading term")
        return self.terms[0]

    def coeff(self, exponent):
        exponent = Fraction(exponent)
        if exponent >= self.trunc:
            raise IndeterminateValuation(self.trunc, f"coefficient of eps^{exponent} lies beyond the truncation")
        for e, c in self.terms:
            if e == exponent:
                return c
        return self.field.zero

    def residue(self):
        v = self.val()
        if v < 0:
            raise NotInValuationRing(f"{self} has negative valuation {v}")
        return self.coeff(0) if v == 0 else self.field.zero

    def in_O(self):
        return self.val() >= 0

    def in_M(self):
        return self.val() > 0

    def ramification(self):
        """Common denominator of the exponents (and truncation)."""
        d = _denom(self.trunc)
        for e, _ in self.terms:
            d = _lcm(d, e.denominator)
        return d

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PuiseuxElement):
            if other.field != self.field:
                raise ValueError(f"mixing series over {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Rational, FieldElement)):
            c = self.field(other)
            return PuiseuxElement._raw(self.field, ((Fraction(0), c),) if c else (), INF)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        trunc = min(self.trunc, o.trunc)
        acc = {}
        for e, c in self.terms:
            if e < trunc:
                acc[e] = c
        for e, c in o.terms:
            if e < trunc:
                acc[e] = acc[e] + c if e in acc else c
        return PuiseuxElement._raw(
            self.field, tuple((e, acc[e]) for e in sorted(acc) if acc[e]), trunc
        )

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxElement._raw(self.field, tuple((e, -c) for e, c in self.terms), self.trunc)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if (not self.terms and self.trunc == INF) or (not o.terms and o.trunc == INF):
            return PuiseuxElement._raw(self.field, (), INF)
        trunc = min(self.trunc + o._vlow(), o.trunc + self._vlow())
        if len(self.terms) == 1 and self.terms[0][0] == 0 and self.trunc == INF:
            c = self.terms[0][1]
            return PuiseuxElement._raw(self.field, tuple((e, c * d) for e, d in o.terms if e < trunc), trunc)
        # integer exponents in units of 1/den keep the inner loop cheap
        den = 1
        for x in (self, o):
            den = _lcm(den, x.ramification())
        if trunc != INF:
            den = _lcm(den, trunc.denominator)
            cut = int(trunc * den)
        else:
            cut = None
        a, da = _integral(self.terms, den)
        b, db = _integral(o.terms, den)
        d = self.field.degree
        acc = {}
        for ea, ca in a:
            for eb, cb in b:
                k = ea + eb
                if cut is not None and k >= cut:
                    break
                row = acc.get(k)
                if row is None:
                    row = acc[k] = [0] * (2 * d - 1)
                for i, x in enumerate(ca):
                    if x:
                        for j, y in enumerate(cb):
                            if y:
                                row[i + j] += x * y
        field = self.field
        D = da * db
        terms = []
        for k in sorted(acc):
            c = _reduce(acc[k], field)
            if c is not None and any(c):
                terms.append((Fraction(k, den), FieldElement(field, tuple(Fraction(x, D) for x in c))))
        return PuiseuxElement._raw(field, tuple(terms), trunc)

    __rmul__ = __mul__

    def shift(self, mu):
        """Multiply by ``eps^mu`` exactly."""
        mu = Fraction(mu)
        return PuiseuxElement._raw(
            self.field,
            tuple((e + mu, c) for e, c in self.terms),
            self.trunc + mu if self.trunc != INF else INF,
        )

    def scale(self, c):
        c = self.field(c)
        if not c:
            return PuiseuxElement._raw(self.field, (), INF)
        return PuiseuxElement._raw(self.field, tuple((e, d * c) for e, d in self.terms), self.trunc)

    def truncate(self, r):
        """Drop information at and above ``eps^r``."""
        if r == INF or r >= self.trunc:
            return self
        r = Fraction(r)
        return PuiseuxElement._raw(self.field, tuple(t for t in self.terms if t[0] < r), r)

    def inverse(self, prec=None):
        """Multiplicative inverse.

        A truncated input keeps its relative precision. An exact input that is
        not a monomial is expanded up to the absolute exponent ``prec``
        (default: valuation of the inverse plus :data:`DEFAULT_TRUNCATION`).
        """
        a = self.val()
        if a == INF:
            raise NonInvertible("inverse of exact zero")
        lead_c = self.terms[0][1]
        inv_c = lead_c.inverse()
        if len(self.terms) == 1 and self.trunc == INF:
            return PuiseuxElement._raw(self.field, ((-a, inv_c),), INF)
        if self.trunc != INF:
            rel = self.trunc - a
        else:
            target = -a + DEFAULT_TRUNCATION if prec is None else Fraction(prec)
            rel = target + a
        if rel <= 0:
            return PuiseuxElement._raw(self.field, (), -a + rel)
        # x = lead * eps^a * (1 + u) with val(u) > 0
        unit = self.shift(-a).scale(inv_c).truncate(rel)
        u = unit - 1
        if not u.terms:
            y = PuiseuxElement._raw(self.field, ((Fraction(0), self.field.one),), rel)
        else:
            step = u.terms[0][0]
            y = PuiseuxElement._raw(self.field, ((Fraction(0), self.field.one),), INF)
            prec_now = step
            while True:
                prec_now = min(2 * prec_now, rel)
                err = (unit.truncate(prec_now) * y).truncate(prec_now)
                # the iterate is only known to prec_now, but Newton's step
                # must treat it as exact to double the precision
                y = PuiseuxElement._raw(self.field, (y * (2 - err)).truncate(prec_now).terms, INF)
                if prec_now >= rel:
                    break
            y = y.truncate(rel)
        return y.scale(inv_c).shift(-a)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = PuiseuxElement._raw(self.field, ((Fraction(0), self.field.one),), INF)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def rescale(self, k):
        """Substitute ``eps -> eps^k`` (a field automorphism for rational ``k > 0``)."""
        k = Fraction(k)
        return PuiseuxElement._raw(
            self.field,
            tuple((e * k, c) for e, c in self.terms),
            self.trunc * k if self.trunc != INF else INF,
        )

    # -- comparisons and text ----------------------------------------------------

    def __eq__(self, other):
        """Structural equality (same terms and same truncation)."""
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms and self.trunc == o.trunc

    def __hash__(self):
        return hash((self.terms, self.trunc))

    def __repr__(self):
        return format_puiseux(self)

    __str__ = __repr__


def _fmt_exp(e):
    if e.denominator == 1:
        return str(e.numerator) if e >= 0 else f"({e.numerator})"
    return f"({e.numerator}/{e.denominator})"


def format_puiseux(x):
    parts = []
    for e, c in x.terms:
        mono = "" if e == 0 else ("eps" if e == 1 else f"eps^{_fmt_exp(e)}")
        if c.is_rational():
            q = c.c[0]
            mag = abs(q)
            neg = q < 0
            cs = str(mag) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        else:
            neg = False
            cs = f"({c})"
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    if x.trunc != INF:
        o = f"O(eps^{_fmt_exp(x.trunc)})"
        parts.append(f" + {o}" if parts else o)
    return "".join(parts) or "0"


# -- module-level operations ------------------------------------------------------


def val(x):
    return x.val()


def residue(x):
    return x.residue()


def in_O(x):
    return x.in_O()


def in_M(x):
    return x.in_M()


def p_arith(x, y=None, op="add", prec=None):
    """Dispatch ``add``/``mul``/``neg``/``inv`` on Puiseux elements."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse(prec=prec)
    raise ValueError(f"unknown operation {op!r}")


def lift(field, c):
    """Include a constant-field element into K."""
    return PuiseuxElement.const(field, c)


def from_eps_poly(p):
    """Exact series from a :class:`~infinitesimal.poly.Poly` in ``eps``."""
    return PuiseuxElement(p.field, [(k, c) for k, c in enumerate(p.coeffs)])


def random_puiseux(rng, field=QQ, max_terms=4, min_exp=-2, max_exp=3, denominators=(1, 2, 3), coeff_bound=9):
    """A random exact nonzero Puiseux polynomial (for sampling and self-tests)."""
    q = rng.choice(denominators)
    nterms = rng.randint(1, max_terms)
    exps = rng.sample(range(min_exp * q, max_exp * q + 1), nterms)
    terms = []
    for e in exps:
        coords = [rng.randint(-coeff_bound, coeff_bound) for _ in range(field.degree)]
        if not any(coords):
            coords[0] = rng.choice([-1, 1]) * rng.randint(1, coeff_bound)
        terms.append((Fraction(e, q), field(coords)))
    return PuiseuxElement(field, terms)
