"""Univariate and multivariate polynomials over a constant field.

:class:`Poly` is dense and univariate; :class:`MPoly` is sparse with named
generators (``BiPoly`` is just an ``MPoly`` in two generators). Resultants are
Sylvester determinants computed fraction-free with Bareiss elimination, so
the only division ever performed on polynomial entries is exact.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .basefield import QQ, FieldElement, format_qpoly
from .errors import InexactDivision, NonInvertible


class Poly:
    """Dense univariate polynomial; ``coeffs`` run from the constant term up."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field, coeffs=(), var="x"):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def gen(cls, field=QQ, var="x"):
        return cls(field, [0, 1], var)

    def _new(self, coeffs):
        return Poly(self.field, coeffs, self.var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.coeffs == Poly(self.field, [other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        return Poly(self.field, [other], self.var)

    def __add__(self, other):
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.field.zero
        return self._new(
            [(self.coeffs[i] if i < len(self.coeffs) else z) + (o.coeffs[i] if i < len(o.coeffs) else z)
             for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return self._new([])
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] = out[i + j] + a * b
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = self._new([1])
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other):
        if other.is_zero():
            raise NonInvertible("polynomial division by zero")
        r = list(self.coeffs)
        q = [self.field.zero] * max(len(r) - len(other.coeffs) + 1, 0)
        inv_lc = other.lc().inverse()
        db = other.degree
        while len(r) - 1 >= db and r:
            coef = r[-1] * inv_lc
            shift = len(r) - 1 - db
            q[shift] = coef
            for i, b in enumerate(other.coeffs):
                r[shift + i] = r[shift + i] - coef * b
            r.pop()
            while r and r[-1].is_zero():
                r.pop()
        return self._new(q), self._new(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if not self.coeffs:
            return self
        inv = self.lc().inverse()
        return self._new([c * inv for c in self.coeffs])

    def deriv(self):
        return self._new([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element supporting + and *."""
        if not self.coeffs:
            return self.field.zero if not hasattr(x, "field") else x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def coeffs_q(self):
        return [c.rational() for c in self.coeffs]

    def __repr__(self):
        if self.field.is_rational:
            return format_qpoly([c.c[0] for c in self.coeffs], var=self.var)
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            cs = str(c)
            if mono:
                cs = mono if cs == "1" else (f"-{mono}" if cs == "-1" else f"({cs})*{mono}")
            elif parts and not c.is_rational():
                cs = f"({cs})"
            parts.append(cs)
        return " + ".join(parts) or "0"

    # -- roots over the constant field ------------------------------------------

    def factor(self):
        """Monic irreducible factors over the constant field with multiplicities."""
        return factor_over_field(self)

    def roots(self):
        """Roots lying in the constant field, as ``[(root, multiplicity)]``.

        Ordered by the root's coordinate tuple for determinism.
        """
        out = []
        for f, m in self.factor():
            if f.degree == 1:
                out.append((-f.coeffs[0], m))
        out.sort(key=lambda rm: rm[0].c)
        return out

    def root_multiplicity(self, a):
        """Order of vanishing at ``a``."""
        if self.is_zero():
            raise ValueError("zero polynomial vanishes to infinite order")
        lin = self._new([-a, 1])
        p, k = self, 0
        while True:
            q, r = p.divmod(lin)
            if not r.is_zero():
                return k
            p, k = q, k + 1


def poly_gcd(f, g):
    """Monic greatest common divisor (zero if both inputs are zero)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def poly_squarefree(f):
    """``f / gcd(f, f')``, made monic."""
    if f.degree <= 0:
        return f.monic()
    return poly_exact_div(f, poly_gcd(f, f.deriv())).monic()


def poly_exact_div(f, g):
    q, r = f.divmod(g)
    if not r.is_zero():
        raise InexactDivision(f"{g} does not divide {f}")
    return q


# -- sympy bridge (factorization over Q and Q(t)) --------------------------------


def _sympy_domain(field):
    cache = field._cache
    if "sympy" not in cache:
        import sympy

        if field.is_rational:
            cache["sympy"] = sympy.QQ
        else:
            t = sympy.Symbol("t")
            m = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(field.minpoly))
            dom = sympy.QQ.algebraic_field(sympy.CRootOf(m, 0))
            mod = [Fraction(int(x.numerator), int(x.denominator)) for x in dom.mod.to_list()][::-1]
            if tuple(mod) != field.minpoly:
                raise NonInvertible(
                    f"the modulus {field.describe()} is reducible; it has the factor {format_qpoly(mod)}",
                    factor=tuple(mod),
                )
            cache["sympy"] = dom
    return cache["sympy"]


def _mpq(x):
    return Fraction(int(x.numerator), int(x.denominator))


def factor_over_field(p):
    import sympy

    if p.degree < 1:
        return []
    field = p.field
    dom = _sympy_domain(field)
    c = sympy.Symbol("c")
    if field.is_rational:
        sp = sympy.Poly.from_list([dom(co.c[0].numerator, co.c[0].denominator) for co in reversed(p.coeffs)], c, domain=dom)
    else:
        sp = sympy.Poly.from_list(
            [dom([sympy.Rational(q.numerator, q.denominator) for q in reversed(co.c)]) for co in reversed(p.coeffs)],
            c,
            domain=dom,
        )
    out = []
    for f, m in sp.factor_list()[1]:
        coeffs = []
        for co in reversed(f.rep.to_list()):
            if field.is_rational:
                coeffs.append(field(_mpq(co)))
            else:
                coeffs.append(field([_mpq(q) for q in reversed(co.to_list())]))
        out.append((Poly(field, coeffs, p.var).monic(), m))
    out.sort(key=lambda fm: (fm[0].degree, [x.c for x in fm[0].coeffs]))
    return out


# -- sparse multivariate polynomials ---------------------------------------------


class MPoly:
    """Sparse polynomial in the named generators ``gens``.

    ``terms`` maps exponent tuples to nonzero field elements.
    """

    __slots__ = ("field", "gens", "terms")

    def __init__(self, field, gens, terms=None):
        self.field = field
        self.gens = tuple(gens)
        clean = {}
        if terms:
            for e, c in terms.items():
                c = field(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field, gens, terms):
        obj = cls.__new__(cls)
        obj.field = field
        obj.gens = gens
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, field, gens, value):
        return cls(field, gens, {(0,) * len(gens): value})

    @classmethod
    def var(cls, field, gens, name):
        i = tuple(gens).index(name)
        e = [0] * len(gens)
        e[i] = 1
        return cls(field, gens, {tuple(e): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.gens, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.gens != self.gens:
                raise ValueError(f"generator mismatch {self.gens} vs {other.gens}")
            return other
        return MPoly.const(self.field, self.gens, other)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return MPoly._raw(self.field, self.gens, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.field, self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return MPoly._raw(self.field, self.gens, {e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, n):
        result = MPoly.const(self.field, self.gens, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = self.field(c)
        if c.is_zero():
            return MPoly._raw(self.field, self.gens, {})
        return MPoly._raw(self.field, self.gens, {e: v * c for e, v in self.terms.items()})

    def degree(self, var=None):
        """Degree in ``var``, or total degree; ``-1`` for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.gens.index(var)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self, variables=None):
        idx = range(len(self.gens)) if variables is None else [self.gens.index(v) for v in variables]
        degs = {sum(e[i] for i in idx) for e in self.terms}
        return len(degs) <= 1

    def coeff_list(self, var):
        """Coefficients of powers of ``var`` (low-to-high) as MPolys in the same gens."""
        i = self.gens.index(var)
        out = [dict() for _ in range(max(self.degree(var), -1) + 1)]
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            out[k][e2] = c
        return [MPoly._raw(self.field, self.gens, d) for d in out]

    def subs(self, values):
        """Substitute ``{gen: value}``; values are MPolys (same gens) or constants."""
        idx = {self.gens.index(k): self._coerce(v) for k, v in values.items()}
        result = MPoly._raw(self.field, self.gens, {})
        powcache = {}
        for e, c in self.terms.items():
            base = list(e)
            term = None
            for i, v in idx.items():
                k = e[i]
                base[i] = 0
                if k:
                    key = (i, k)
                    if key not in powcache:
                        powcache[key] = v ** k
                    term = powcache[key] if term is None else term * powcache[key]
            mono = MPoly._raw(self.field, self.gens, {tuple(base): c})
            result = result + (mono if term is None else mono * term)
        return result

    def evaluate(self, point, one=None):
        """Evaluate at ``point`` (a sequence, one entry per generator).

        Entries may be field elements or any ring elements (e.g. Puiseux
        series); ``one`` is the ring's unit when it is not the field's.
        """
        acc = None
        powers = [dict() for _ in self.gens]
        for e, c in self.terms.items():
            term = c if one is None else one * c
            for i, k in enumerate(e):
                if k:
                    pw = powers[i].get(k)
                    if pw is None:
                        pw = point[i] ** k
                        powers[i][k] = pw
                    term = term * pw
            acc = term if acc is None else acc + term
        if acc is None:
            return self.field.zero if one is None else one * 0
        return acc

    def rename(self, gens):
        return MPoly._raw(self.field, tuple(gens), dict(self.terms))

    def reorder(self, gens):
        """Re-express in ``gens``; generators absent from ``gens`` must not occur."""
        gens = tuple(gens)
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(gens)
            for g, k in zip(self.gens, e):
                if g in gens:
                    new[gens.index(g)] = k
                elif k:
                    raise ValueError(f"generator {g} occurs but is dropped")
            out[tuple(new)] = c
        return MPoly._raw(self.field, gens, out)

    def to_poly(self, var):
        """Convert a polynomial in ``var`` alone to a :class:`Poly`."""
        i = self.gens.index(var)
        coeffs = [self.field.zero] * (self.degree(var) + 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError(f"{self} involves generators other than {var}")
            coeffs[e[i]] = c
        return Poly(self.field, coeffs, var)

    @classmethod
    def from_poly(cls, p, gens, var):
        i = tuple(gens).index(var)
        terms = {}
        for k, c in enumerate(p.coeffs):
            e = [0] * len(gens)
            e[i] = k
            terms[tuple(e)] = c
        return cls(p.field, gens, terms)

    def exact_div(self, other):
        """Exact quotient in lexicographic order; raises :class:`InexactDivision`."""
        o = self._coerce(other)
        if o.is_zero():
            raise NonInvertible("division by the zero polynomial")
        lead_e = max(o.terms)
        inv_lc = o.terms[lead_e].inverse()
        if len(o.terms) == 1:
            out = {}
            for e, c in self.terms.items():
                d = tuple(a - b for a, b in zip(e, lead_e))
                if min(d) < 0:
                    raise InexactDivision(f"{o} does not divide {self}")
                out[d] = c * inv_lc
            return MPoly._raw(self.field, self.gens, out)
        r = dict(self.terms)
        q = {}
        while r:
            e = max(r)
            d = tuple(a - b for a, b in zip(e, lead_e))
            if min(d) < 0:
                raise InexactDivision(f"{o} does not divide {self}")
            coef = r[e] * inv_lc
            q[d] = coef
            for e2, c2 in o.terms.items():
                t = tuple(a + b for a, b in zip(d, e2))
                v = r.get(t)
                v = -coef * c2 if v is None else v - coef * c2
                if v.is_zero():
                    r.pop(t, None)
                else:
                    r[t] = v
        return MPoly._raw(self.field, self.gens, q)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                g if k == 1 else f"{g}^{k}" for g, k in zip(self.gens, e) if k
            )
            cs = str(c)
            if not c.is_rational():
                cs = f"({cs})"
            if mono:
                if cs == "1":
                    body = mono
                elif cs == "-1":
                    body = f"-{mono}"
                else:
                    body = f"{cs}*{mono}"
            else:
                body = cs
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")


BiPoly = MPoly


# -- determinants and resultants -------------------------------------------------


def bareiss_det(matrix, zero, one):
    """Fraction-free determinant over an integral domain with exact division.

    Entries need ``+ - *``, ``is_zero()`` and ``exact_div``, or may be field
    elements (then ``/`` is used).
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = _exact(num, prev)
            a[i][k] = zero
        prev = piv
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def _exact(num, den):
    if isinstance(num, FieldElement):
        return num / den
    return num.exact_div(den)


def sylvester_matrix(f_coeffs, g_coeffs, zero):
    """Sylvester matrix from high-to-low coefficient lists."""
    m = len(f_coeffs) - 1
    n = len(g_coeffs) - 1
    size = m + n
    rows = []
    for k in range(n):
        rows.append([zero] * k + list(f_coeffs) + [zero] * (size - k - m - 1))
    for k in range(m):
        rows.append([zero] * k + list(g_coeffs) + [zero] * (size - k - n - 1))
    return rows


def resultant(f, g, var):
    """Res_var(f, g) for MPolys: det of the Sylvester matrix (f rows first).

    The result is an MPoly in the same generators, free of ``var``.
    """
    if f.degree(var) < 1 or g.degree(var) < 1:
        raise ValueError(f"both polynomials need positive degree in {var}")
    fc = f.coeff_list(var)[::-1]
    gc = g.coeff_list(var)[::-1]
    zero = MPoly._raw(f.field, f.gens, {})
    one = MPoly.const(f.field, f.gens, 1)
    return bareiss_det(sylvester_matrix(fc, gc, zero), zero, one)


def resultant_y(f, g, y="y"):
    """Res_y of two bivariate polynomials, returned as a :class:`Poly` in the other variable."""
    r = resultant(f, g, y)
    (other,) = [v for v in f.gens if v != y]
    return r.to_poly(other)


def subresultant1(f, g, var):
    """Coefficients ``(s11, s10)`` of the first subresultant ``s11*var + s10``.

    ``s11*var + s10 = A*f + B*g`` for polynomial cofactors, so at a common root
    where ``s11`` does not vanish the root equals ``-s10/s11``.
    """
    m, n = f.degree(var), g.degree(var)
    if m < 1 or n < 1:
        raise ValueError(f"both polynomials need positive degree in {var}")
    zero = MPoly._raw(f.field, f.gens, {})
    one = MPoly.const(f.field, f.gens, 1)
    if m == 1 or n == 1:
        lin = f if m == 1 else g
        cl = lin.coeff_list(var)
        return cl[1], cl[0]
    fc = f.coeff_list(var)[::-1]
    gc = g.coeff_list(var)[::-1]
    width = m + n - 1
    rows = []
    for k in range(n - 1):
        rows.append([zero] * k + fc + [zero] * (width - k - m - 1))
    for k in range(m - 1):
        rows.append([zero] * k + gc + [zero] * (width - k - n - 1))
    # columns hold var^(width-1) ... var^0; keep the leading width-2 columns
    lead = [row[: width - 2] for row in rows]
    s1 = bareiss_det([lr + [row[width - 2]] for lr, row in zip(lead, rows)], zero, one)
    s0 = bareiss_det([lr + [row[width - 1]] for lr, row in zip(lead, rows)], zero, one)
    return s1, s0


def is_squarefree_in(F, var, extra_tries=0):
    """Exact test that ``F`` is square-free in ``var`` over the fraction field
    of the remaining generators.

    The discriminant ``D`` (a polynomial in the other generators) is nonzero
    iff it is nonzero at one of sufficiently many specialisation points; at a
    point where the leading coefficient survives, ``D`` is nonzero iff the
    specialised univariate polynomial is square-free.
    """
    n = F.degree(var)
    if n < 1:
        raise ValueError(f"{F} has no positive degree in {var}")
    if n == 1:
        return True
    others = [g for g in F.gens if g != var]
    if len(others) > 1:
        raise ValueError("square-freeness certificate supports one extra generator")
    total_other = max(sum(k for j, k in enumerate(e) if F.gens[j] != var) for e in F.terms)
    # discriminant has degree <= total_other * (2n - 1) in the other generators
    bound = total_other * (2 * n - 1)
    lead = F.coeff_list(var)[-1]
    lead_deg = max(lead.degree(), 0)
    tries = 0
    needed = bound + lead_deg + 1 + extra_tries
    for k in itertools.count():
        if tries >= needed:
            return False
        tries += 1
        # 1, -2, 2, -3, 3, ...
        pt = k // 2 + 1 if k % 2 == 0 else -(k // 2) - 2
        spec = F.subs({others[0]: pt}).to_poly(var) if others else F.to_poly(var)
        if spec.degree != n:
            continue
        if poly_gcd(spec, spec.deriv()).degree == 0:
            return True
    return False


__all__ = [
    "field_extension",
    "BiPoly",
    "MPoly",
    "Poly",
    "bareiss_det",
    "factor_over_field",
    "is_squarefree_in",
    "poly_exact_div",
    "poly_gcd",
    "poly_squarefree",
    "resultant",
    "resultant_y",
    "subresultant1",
    "sylvester_matrix",
]


# -- dense linear algebra over the constant field ---------------------------------


def nullspace(matrix, field):
    """Basis of ``{v : matrix v = 0}`` by Gauss-Jordan elimination."""
    rows = [[field(c) for c in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [c * inv for c in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def det(matrix, field):
    m = [[field(c) for c in row] for row in matrix]
    return bareiss_det(m, field.zero, field.one)


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), a[i][0] * 0) for j in range(len(b[0]))]
            for i in range(len(a))]


def mat_inverse(matrix, field):
    """Inverse by Gauss-Jordan; raises :class:`NonInvertible` when singular."""
    n = len(matrix)
    aug = [[field(c) for c in row] + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise NonInvertible("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [c * inv for c in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


# -- adjoining a root -----------------------------------------------------------------


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


def field_extension(phi):
    """Adjoin a root of the irreducible ``phi`` (a Poly over ``K``) to ``K``.

    Returns ``(K2, embed, beta)`` with ``K2`` a single-generator field,
    ``embed`` the inclusion ``K -> K2`` on elements and ``phi(beta) = 0``.
    Over Q(alpha) the generator is ``gamma = u + j*alpha``, where ``u`` is a
    root of the integral rescaling of ``phi``; ``j`` is chosen so that the norm
    ``Res_t(m(t), phi(x - j*t))`` is square-free, which makes it the minimal
    polynomial of ``gamma``. ``alpha`` is then recovered in ``K2`` as the
    common root of ``m(t)`` and ``phi(gamma - j*t)``.
    """
    from .basefield import Field, field_make

    K = phi.field
    phi = phi.monic()
    k = phi.degree
    if k < 2:
        raise ValueError("nothing to adjoin for a linear polynomial")
    # u = D*s turns phi into a monic polynomial with integral coordinates
    D = 1
    for c in phi.coeffs:
        for q in c.c:
            D = _lcm(D, Fraction(q).denominator)
    psi = [c * D ** (k - i) for i, c in enumerate(phi.coeffs)]
    if K.is_rational and k == 2:
        # complete the square: phi has the roots (-b +- sqrt(disc)) / 2
        from sympy.ntheory.factor_ import core

        b, c = phi.coeffs[1].rational(), phi.coeffs[0].rational()
        disc = b * b - 4 * c
        num = disc.numerator * disc.denominator
        sign = -1 if num < 0 else 1
        d = sign * int(core(abs(num), 2))
        root = Fraction(math.isqrt(num // d))
        K2 = field_make([-d, 0, 1])
        return K2, lambda x: K2(x.rational()), (K2(-b) + K2.gen() * (root / disc.denominator)) / 2
    if K.is_rational:
        K2 = field_make([c.rational() for c in psi])
        return K2, lambda c: K2(c.rational()), K2.gen() / D
    m = list(K.minpoly)
    n = len(m) - 1
    gens = ("x", "t")
    mt = MPoly(QQ, gens, {(0, i): c for i, c in enumerate(m) if c})
    X = MPoly.var(QQ, gens, "x")
    T = MPoly.var(QQ, gens, "t")
    for j in (1, -1, 2, -2, 3, -3, 4, -4, 5, -5):
        u = X - T.scale(j)
        acc = MPoly(QQ, gens)
        for i, c in enumerate(psi):
            ci = MPoly(QQ, gens, {(0, e): q for e, q in enumerate(c.c) if q})
            acc = acc + ci * u ** i
        N = resultant(mt, acc, "t").to_poly("x")
        if N.degree != n * k or poly_squarefree(N).degree != N.degree:
            continue
        # a square-free norm of an irreducible polynomial is irreducible
        K2 = Field([c.rational() for c in N.monic().coeffs])
        gamma = K2.gen()
        m2 = Poly(K2, m, "t")
        # phi(gamma - j*t) as a polynomial in t over K2
        lin = Poly(K2, [gamma, K2(-j)], "t")
        p2 = Poly(K2, [], "t")
        for i, c in enumerate(psi):
            p2 = p2 + _tpoly(K2, c.c) * lin ** i
        h = poly_gcd(m2, p2)
        if h.degree != 1:
            continue
        h = h.monic()
        alpha = -h.coeffs[0]

        def embed(c, alpha=alpha, K2=K2):
            acc, pw = K2.zero, K2.one
            for q in c.c:
                if q:
                    acc = acc + pw * q
                pw = pw * alpha
            return acc

        return K2, embed, (gamma - alpha * j) / D
    raise ValueError(f"no primitive element found for {phi}")


def _tpoly(K2, coords):
    return Poly(K2, [K2(q) for q in coords], "t")
