"""The shared text grammar for polynomials, Puiseux literals and points.

Variables are ``x, y, z`` (curve coordinates), ``t`` (the adjoined generator
of the constant field) and ``eps``. Literals are integers or ``a/b``; the
operators are ``+ - * ^`` with parentheses. ``^`` takes a nonnegative integer
exponent, except on ``eps`` where any rational exponent is allowed, e.g.
``eps^(3/2)`` or ``eps^(-1)``. A Puiseux literal may end in ``+ O(eps^r)``.

Expressions are read with :mod:`ast` after mapping ``^`` to ``**``; only the
node types of the grammar are accepted.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from .basefield import QQ
from .errors import ParseError
from .poly import MPoly, Poly
from .puiseux import INF, PuiseuxElement

_BIG_EXPONENT = 10_000
_O_TERM = re.compile(r"(?:^|\+)\s*O\(\s*eps\s*\^\s*([^()]+|\([^()]*\))\s*\)\s*$")


class _Expr:
    """Intermediate value: ``{(var exponents, eps exponent): field element}``."""

    def __init__(self, field, names, terms):
        self.field = field
        self.names = names
        self.terms = terms

    @classmethod
    def const(cls, field, names, c):
        c = field(c)
        return cls(field, names, {((0,) * len(names), Fraction(0)): c} if c else {})

    def is_const(self):
        return all(not any(k[0]) and k[1] == 0 for k in self.terms)

    def const_value(self):
        return self.terms.get(((0,) * len(self.names), Fraction(0)), self.field.zero)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _Expr(self.field, self.names, out)

    def __neg__(self):
        return _Expr(self.field, self.names, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for (a, ea), c in self.terms.items():
            for (b, eb), d in other.terms.items():
                k = (tuple(i + j for i, j in zip(a, b)), ea + eb)
                s = out[k] + c * d if k in out else c * d
                out[k] = s
        return _Expr(self.field, self.names, {k: c for k, c in out.items() if c})


def _rational(node):
    """Evaluate an exponent subtree to a rational constant."""
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Fraction(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _rational(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and isinstance(node.op, (ast.Div, ast.Add, ast.Sub, ast.Mult)):
        a, b = _rational(node.left), _rational(node.right)
        if isinstance(node.op, ast.Div):
            if b == 0:
                raise ParseError("division by zero in exponent")
            return a / b
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        return a * b
    raise ParseError(f"exponent must be a rational constant, got {ast.dump(node)}")


def _walk(node, field, names):
    if isinstance(node, ast.Expression):
        return _walk(node.body, field, names)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return _Expr.const(field, names, node.value)
        raise ParseError(f"unsupported literal {node.value!r}")
    if isinstance(node, ast.Name):
        n = len(names)
        if node.id in names:
            e = [0] * n
            e[names.index(node.id)] = 1
            return _Expr(field, names, {(tuple(e), Fraction(0)): field.one})
        if node.id == "eps":
            return _Expr(field, names, {((0,) * n, Fraction(1)): field.one})
        if node.id == "t":
            if field.is_rational:
                raise ParseError("'t' names the field generator, but the field is QQ")
            return _Expr.const(field, names, field.gen())
        raise ParseError(f"unknown variable {node.id!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _walk(node.operand, field, names)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            return _power(node, field, names)
        left = _walk(node.left, field, names)
        right = _walk(node.right, field, names)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left + (-right)
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_const() or not right.const_value():
                raise ParseError("only division by nonzero constants is supported")
            return left * _Expr.const(field, names, right.const_value().inverse())
    raise ParseError(f"unsupported syntax: {ast.dump(node)}")


def _power(node, field, names):
    p = _rational(node.right)
    base = _walk(node.left, field, names)
    n = len(names)
    single_eps = (
        len(base.terms) == 1
        and next(iter(base.terms.values())) == field.one
        and not any(next(iter(base.terms))[0])
    )
    if single_eps and next(iter(base.terms))[1] != 0:
        e = next(iter(base.terms))[1]
        return _Expr(field, names, {((0,) * n, e * p): field.one})
    if p.denominator != 1 or p < 0:
        raise ParseError(f"exponent {p} is only allowed on eps")
    if p > _BIG_EXPONENT:
        raise ParseError("exponent too large")
    out = _Expr.const(field, names, 1)
    for _ in range(int(p)):
        out = out * base
    return out


def parse_expr(text, field=QQ, names=("x", "y", "z")):
    """Parse ``text`` into the intermediate sparse form (see module docstring)."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty expression")
    if re.search(r"[^0-9A-Za-z_+\-*/^()\s.]", text) or "**" in text or "." in text:
        raise ParseError(f"unexpected characters in {text!r}")
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src.strip(), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _walk(tree, field, tuple(names))


def parse_mpoly(text, field=QQ, gens=("x", "y", "z")):
    """Parse a polynomial in ``gens`` (no ``eps``) into an :class:`MPoly`."""
    ex = parse_expr(text, field, gens)
    terms = {}
    for (e, pe), c in ex.terms.items():
        if pe != 0:
            raise ParseError(f"{text!r} involves eps; expected a polynomial in {', '.join(gens)}")
        terms[e] = c
    return MPoly(field, gens, terms)


def parse_qpoly(text, var="t"):
    """Parse a univariate polynomial over Q (e.g. a minimal polynomial in ``t``)."""
    p = parse_mpoly(text, QQ, (var,))
    return p.to_poly(var)


def parse_puiseux(text, field=QQ):
    """Parse a Puiseux literal such as ``2 + eps^(3/2) - 1/2*eps^2 + O(eps^4)``."""
    trunc = INF
    m = _O_TERM.search(text)
    body = text
    if m:
        trunc = _rational(ast.parse(m.group(1).strip(), mode="eval").body)
        body = text[: m.start()].strip()
        if not body:
            return PuiseuxElement.zero(field, trunc)
    ex = parse_expr(body, field, ())
    terms = [(pe, c) for (_, pe), c in ex.terms.items()]
    return PuiseuxElement(field, terms, trunc)


def parse_eps_x_poly(text, field=QQ, var="x"):
    """Parse ``F(eps, X)`` written with ``x`` for ``X`` and integer powers of ``eps``."""
    ex = parse_expr(text, field, (var,))
    terms = {}
    for (e, pe), c in ex.terms.items():
        if pe.denominator != 1 or pe < 0:
            raise ParseError("eps must appear with nonnegative integer exponents here")
        terms[(int(pe), e[0])] = c
    return MPoly(field, ("eps", "X"), terms)


def split_point(text):
    """Split ``[a : b : c]`` into coordinate strings."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"point must look like [a : b : c], got {text!r}")
    parts = [p.strip() for p in s[1:-1].split(":")]
    if len(parts) < 2 or any(not p for p in parts):
        raise ParseError(f"point needs at least two coordinates: {text!r}")
    return parts


def format_qpoly_t(p):
    return str(Poly(p.field, p.coeffs, "t"))
