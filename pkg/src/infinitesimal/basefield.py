"""The constant field: Q, or a simple extension Q(t) = Q[t]/(m(t)).

Elements are stored as coordinate tuples of :class:`fractions.Fraction` in the
power basis ``1, t, ..., t^(d-1)`` and are always fully reduced.

>>> F = field_make([1, 0, 1])       # t^2 + 1
>>> i = F.gen()
>>> i * i == F(-1)
True
>>> (1 + i).inverse()
1/2 - 1/2*t
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import NonInvertible, NotSquareFree, RedundantExtension

# -- dense polynomials over Q, coefficient lists low-to-high ---------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _qsub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _qdivmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = [Fraction(x) for x in a]
    lb = b[-1]
    while len(r) >= len(b):
        coef = r[-1] / lb
        shift = len(r) - len(b)
        q[shift] = coef
        for i, bi in enumerate(b):
            r[shift + i] -= coef * bi
        r = _trim(r)
    return _trim(q), r


def _qmonic(a):
    return [x / a[-1] for x in a]


def _qgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return _qmonic(a) if a else []


def _qxgcd(a, b):
    """Return ``(g, s)`` with ``s*a == g (mod b)`` and ``g`` monic."""
    r0, r1 = _trim(a), _trim(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qsub(s0, _qmul(q, s1))
    lead = r0[-1]
    return [x / lead for x in r0], [x / lead for x in s0]


def _qderiv(a):
    return _trim([i * a[i] for i in range(1, len(a))])


def _qeval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _rational_root(p):
    """Some rational root of ``p``, or ``None``."""
    from sympy import Poly as SPoly, QQ as SQQ, Rational, Symbol

    p = _trim(p)
    if len(p) < 2:
        return None
    if p[0] == 0:
        return Fraction(0)
    sp = SPoly([SQQ(c.numerator, c.denominator) for c in reversed(p)], Symbol("t"), domain=SQQ)
    for f, _ in sp.factor_list()[1]:
        if f.degree() == 1:
            a, b = f.all_coeffs()
            r = -Rational(b) / Rational(a)
            return Fraction(int(r.p), int(r.q))
    return None


# -- the field ------------------------------------------------------------------


class Field:
    """Q, or Q[t]/(m) for a monic square-free ``m`` without rational roots.

    Instances compare equal when their defining polynomials agree. Calling a
    field coerces ints, Fractions and coordinate sequences into elements.
    """

    __slots__ = ("minpoly", "degree", "_zero", "_one", "_cache")

    def __init__(self, minpoly=None):
        if minpoly is None:
            self.minpoly = None
            self.degree = 1
        else:
            self.minpoly = tuple(Fraction(c) for c in minpoly)
            self.degree = len(self.minpoly) - 1
        self._cache = {}
        self._zero = FieldElement(self, (Fraction(0),) * self.degree)
        self._one = FieldElement(self, (Fraction(1),) + (Fraction(0),) * (self.degree - 1))

    def __eq__(self, other):
        return isinstance(other, Field) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(("Field", self.minpoly))

    def __repr__(self):
        if self.minpoly is None:
            return "QQ"
        return f"QQ[t]/({format_qpoly(self.minpoly)})"

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, (int, Rational)):
            v = Fraction(value)
            if v == 0:
                return self._zero
            return FieldElement(self, (v,) + (Fraction(0),) * (self.degree - 1))
        coords = [Fraction(c) for c in value]
        if len(coords) > self.degree:
            coords = _qdivmod(coords, list(self.minpoly))[1] if self.minpoly else coords
        coords = list(coords) + [Fraction(0)] * (self.degree - len(coords))
        return FieldElement(self, tuple(coords))

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def gen(self):
        """The adjoined generator ``t`` (requires a proper extension)."""
        if self.minpoly is None:
            raise ValueError("QQ has no adjoined generator")
        return self([0, 1])

    @property
    def is_rational(self):
        return self.minpoly is None

    def describe(self):
        """Short text form used in reports: ``"QQ"`` or the minpoly in ``t``."""
        return "QQ" if self.minpoly is None else format_qpoly(self.minpoly)


def field_make(minpoly=None):
    """Build a :class:`Field` after validating the proposed minimal polynomial.

    ``minpoly`` is ``None`` (the rationals) or a monic polynomial over Q given
    as a low-to-high coefficient sequence or anything with a ``coeffs_q()``
    method. Square-freeness and the absence of rational roots are checked;
    full irreducibility is not (a reducible modulus is detected lazily when an
    inversion hits a zero divisor).
    """
    if minpoly is None:
        return QQ
    if hasattr(minpoly, "coeffs_q"):
        minpoly = minpoly.coeffs_q()
    m = _trim(Fraction(c) for c in minpoly)
    if len(m) < 2:
        raise ValueError("minimal polynomial must have positive degree")
    if m[-1] != 1:
        raise ValueError("minimal polynomial must be monic")
    if len(m) == 2:
        raise RedundantExtension(-m[0])
    if len(_qgcd(m, _qderiv(m))) > 1:
        raise NotSquareFree(f"{format_qpoly(m)} is not square-free")
    root = _rational_root(m)
    if root is not None:
        raise RedundantExtension(root)
    return Field(m)


class FieldElement:
    """An immutable element of a :class:`Field`."""

    __slots__ = ("field", "c")

    def __init__(self, field, coords):
        self.field = field
        self.c = coords

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError(f"mixing elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Rational)):
            return self.field(other)
        return NotImplemented

    def is_zero(self):
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def is_rational(self):
        return not any(self.c[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.c[0]

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash(self.c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, (self.c[0] * o.c[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        m = self.field.minpoly
        # m is monic: t^d = -(m_0 + ... + m_{d-1} t^{d-1})
        for k in range(2 * d - 2, d - 1, -1):
            coef = prod[k]
            if coef:
                prod[k] = 0
                for i in range(d):
                    prod[k - d + i] -= coef * m[i]
        return FieldElement(self.field, tuple(prod[:d]))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise NonInvertible("inverse of zero")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.c[0],))
        g, s = _qxgcd(list(self.c), list(self.field.minpoly))
        if len(g) > 1:
            raise NonInvertible(
                f"{self} is a zero divisor; the modulus has the factor {format_qpoly(g)}",
                factor=tuple(g),
            )
        return self.field(s)

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
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return format_qpoly(self.c, var="t", ascending=True)

    __str__ = __repr__


def _fmt_coef(c):
    return str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_qpoly(coeffs, var="t", ascending=False):
    """Render a rational coefficient list (low-to-high) in the shared grammar."""
    parts = []
    idx = range(len(coeffs)) if ascending else range(len(coeffs) - 1, -1, -1)
    for i in idx:
        c = Fraction(coeffs[i])
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_fmt_coef(mag)}*{mono}"
        else:
            body = _fmt_coef(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts) or "0"


QQ = Field()
