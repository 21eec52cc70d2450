"""Recovering valuation data from a specialisation, and the round trips.

Everything here talks to a specialisation only through a :class:`SpecOracle`,
a callable ``k -> pi_1([k : 1])``. The valuation ring is the preimage of the
affine chart ``P^1 minus [1:0]``, the maximal ideal is the preimage of
``[0:1]``, and values are compared by ``v(x) <= v(y) iff y/x`` lies in the ring.
The same code therefore checks honest oracles (built from a valuation) and
adversarial fakes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .basefield import QQ
from .errors import CounterexampleFound, IndeterminateValuation
from .projective import ProjPointK, ProjPointL, specialize, variety, variety_holds
from .puiseux import PuiseuxElement, random_puiseux

LE = "LE"
GT = "GT"


class SpecOracle:
    """Opaque handle evaluating ``k -> pi_1([k : 1])`` in P^1(L)."""

    def __init__(self, fn, field=QQ, name="oracle"):
        self._fn = fn
        self.field = field
        self.name = name

    def __call__(self, k):
        return self._fn(k)

    def __repr__(self):
        return f"SpecOracle({self.name})"


def honest_oracle(field=QQ):
    """The specialisation built from the order valuation in eps."""
    one = PuiseuxElement.const(field, 1)
    return SpecOracle(lambda k: specialize(ProjPointK([k, one])), field, "order valuation")


def rescaled_oracle(field=QQ, factor=3):
    """Built from ``factor * v`` via the automorphism ``eps -> eps^factor``."""
    one = PuiseuxElement.const(field, 1)
    return SpecOracle(lambda k: specialize(ProjPointK([k.rescale(factor), one])), field, f"{factor}*v")


def constant_oracle(point, field=QQ):
    """An adversarial map sending every element to one fixed point."""
    return SpecOracle(lambda k: point, field, f"constant {point}")


def _infinity(field):
    return ProjPointL([1, 0], field=field)


def _origin(field):
    return ProjPointL([0, 1], field=field)


def in_valuation_ring(s, k):
    return s(k) != _infinity(s.field)


def in_maximal_ideal(s, k):
    return s(k) == _origin(s.field)


def value_compare(s, x, y):
    """``LE`` iff ``v(x) <= v(y)`` in the order recovered from ``s``."""
    if x.is_zero():
        raise ValueError("value_compare needs x != 0")
    return LE if in_valuation_ring(s, y / x) else GT


def recovered_residue(s, k):
    """The ``l`` in L with ``k - l`` in the maximal ideal, found by testing the
    eps^0 coefficient; raises :class:`CounterexampleFound` if it fails."""
    l = k.residue() if k.val() >= 0 else None
    if l is None or not in_maximal_ideal(s, k - l):
        raise CounterexampleFound(k, "no constant l with k - l in the recovered maximal ideal")
    return l


def rebuilt_specialisation(s, k):
    """pi_1([k:1]) reconstructed purely from ring membership (Psi after Phi)."""
    if not in_valuation_ring(s, k):
        return _infinity(s.field)
    return ProjPointL([recovered_residue(s, k), 1], field=s.field)


@dataclass
class RoundtripReport:
    passed: bool
    checked: int
    oracle: str
    counterexample: str | None = None
    reason: str | None = None
    notes: list = dc_field(default_factory=list)

    def to_dict(self):
        return {
            "passed": self.passed,
            "checked": self.checked,
            "oracle": self.oracle,
            "counterexample": self.counterexample,
            "reason": self.reason,
        }


def roundtrip_check(samples, oracle=None, field=QQ):
    """Check both round trips on ``samples``; raises :class:`CounterexampleFound`.

    * ring data recovered from the oracle matches the order valuation
      (``k`` in the ring iff ``v(k) >= 0``, in the ideal iff ``v(k) > 0``);
    * the specialisation rebuilt from that ring data agrees with the oracle.

    The maximal ideal must also be nonzero (``eps`` lies in it), which is what
    separates a genuine specialisation from a bijective or constant map.
    """
    s = oracle if oracle is not None else honest_oracle(field)
    eps = PuiseuxElement.eps(s.field)
    if not in_maximal_ideal(s, eps):
        raise CounterexampleFound(eps, "recovered maximal ideal misses eps (it should be nonzero)")
    for k in samples:
        v = k.val()
        if in_valuation_ring(s, k) != (v >= 0):
            raise CounterexampleFound(k, "valuation-ring membership disagrees with v(k) >= 0")
        if in_maximal_ideal(s, k) != (v > 0):
            raise CounterexampleFound(k, "maximal-ideal membership disagrees with v(k) > 0")
        if rebuilt_specialisation(s, k) != s(k):
            raise CounterexampleFound(k, "rebuilt specialisation disagrees with the oracle")
    return RoundtripReport(True, len(samples), s.name)


def structure_checks(s, pairs):
    """Ring/ideal closure and the fraction property on sample pairs.

    Raises :class:`CounterexampleFound` with the offending element.
    """
    for x, y in pairs:
        xo, yo = in_valuation_ring(s, x), in_valuation_ring(s, y)
        xm, ym = in_maximal_ideal(s, x), in_maximal_ideal(s, y)
        if xo and yo:
            if not in_valuation_ring(s, x + y):
                raise CounterexampleFound(x + y, "ring not closed under addition")
            if not in_valuation_ring(s, x * y):
                raise CounterexampleFound(x * y, "ring not closed under multiplication")
        if xo and ym and not in_maximal_ideal(s, x * y):
            raise CounterexampleFound(x * y, "ideal not absorbing")
        if xm and ym and not in_maximal_ideal(s, x + y):
            raise CounterexampleFound(x + y, "ideal not closed under addition")
        for z in (x, y):
            if not z.is_zero() and not in_valuation_ring(s, z) and not in_valuation_ring(s, 1 / z):
                raise CounterexampleFound(z, "neither z nor 1/z lies in the ring")


def duality_selftest(samples=200, seed=7, field=QQ, oracle=None):
    """Round trips plus structure checks on seeded random elements, as a dict."""
    rng = random.Random(seed)
    elems = [random_puiseux(rng, field) for _ in range(samples)]
    s = oracle if oracle is not None else honest_oracle(field)
    report = {"samples": samples, "seed": seed, "field": field.describe(), "oracle": s.name}
    try:
        rt = roundtrip_check(elems, s, field)
        pairs = list(zip(elems, elems[1:] + elems[:1]))
        structure_checks(s, pairs)
    except CounterexampleFound as exc:
        report.update(passed=False, counterexample=str(exc.element), reason=exc.reason)
        return report
    report.update(passed=True, checked=rt.checked, counterexample=None, reason=None)
    return report


# -- the test varieties of the duality proof ------------------------------------------


def variety_C(field=QQ):
    """``uwz = yvx`` on (P^1)^3 in coordinates ([u:v], [w:x], [y:z])."""
    return variety(3, 1, ["u*w*z - y*v*x"], gens="u v w x y z".split(), field=field, name="C")


def variety_D(field=QQ):
    """``uxz + wvz = yvx`` on (P^1)^3."""
    return variety(3, 1, ["u*x*z + w*v*z - y*v*x"], gens="u v w x y z".split(), field=field, name="D")


def _blocks(n):
    k = n + 2
    return ([f"x{i}" for i in range(k)], [f"y{i}" for i in range(k)], [f"z{i}" for i in range(k)])


def sum_variety(n, field=QQ):
    """``Sum`` on (P^{n+1})^3: addition read off in the last coordinates."""
    xs, ys, zs = _blocks(n)
    eqs = [
        f"x0*y1*z1 + y0*x{n}*z1 - z0*x{n}*y1",
        f"x{n + 1}*y1*z1 + y{n + 1}*x{n}*z1 - z{n + 1}*x{n}*y1",
    ]
    return variety(3, n + 1, eqs, gens=xs + ys + zs, field=field, name=f"Sum_{n}")


def sum_prime_variety(n, field=QQ):
    """``Sum'`` on (P^{n+1})^3: ``x_j y_n z_n + y_j x_n z_n = z_j x_n y_n`` for ``j != n``.

    Normalised by the n-th coordinates, the scaling used by its witness tuple.
    """
    xs, ys, zs = _blocks(n)
    eqs = [f"x{j}*y{n}*z{n} + y{j}*x{n}*z{n} - z{j}*x{n}*y{n}" for j in range(n + 2) if j != n]
    return variety(3, n + 1, eqs, gens=xs + ys + zs, field=field, name=f"SumPrime_{n}")


def aux_C(n, field=QQ):
    """``x_0 = ... = x_{n-1} = 0`` in P^{n+1}."""
    gens = [f"x{i}" for i in range(n + 2)]
    return variety(1, n + 1, [f"x{i}" for i in range(n)], gens=gens, field=field, name=f"C_{n}")


def aux_D(n, field=QQ):
    """``x_1 = ... = x_n`` and ``x_0 = x_{n+1}`` in P^{n+1}."""
    gens = [f"x{i}" for i in range(n + 2)]
    eqs = [f"x{i} - x{i + 1}" for i in range(1, n)] + [f"x0 - x{n + 1}"]
    return variety(1, n + 1, eqs, gens=gens, field=field, name=f"D_{n}")


def _kpoint(coords, field):
    return ProjPointK([c if isinstance(c, PuiseuxElement) else PuiseuxElement.const(field, c) for c in coords])


def sum_witness(k, n):
    """``([0:...:0:1:k], [k:1:0:...:0], [k:1:...:1:k])`` in (P^{n+1})^3."""
    f = k.field
    x = [0] * n + [1, k]
    y = [k, 1] + [0] * n
    z = [k] + [1] * n + [k]
    return tuple(_kpoint(p, f) for p in (x, y, z))


def sum_prime_witness(ks, n):
    """Witness for ``Sum'`` from ``ks = (k_0, ..., k_{n-1}, k_{n+1})``."""
    f = ks[0].field
    head, last = list(ks[:n]), ks[n]
    x = [0] * n + [1, last]
    y = head + [1, 0]
    z = head + [1, last]
    return tuple(_kpoint(p, f) for p in (x, y, z))


def gamma(p, n):
    """``[x0 : x1] -> [0 : ... : 0 : x0 : x1]`` from P^1 into P^{n+1}."""
    if isinstance(p, ProjPointL):
        return ProjPointL([0] * n + list(p.coords), field=p.field)
    f = p.field
    return ProjPointK([PuiseuxElement.zero(f)] * n + list(p.coords))


__all__ = [
    "GT",
    "LE",
    "IndeterminateValuation",
    "RoundtripReport",
    "SpecOracle",
    "aux_C",
    "aux_D",
    "constant_oracle",
    "duality_selftest",
    "gamma",
    "honest_oracle",
    "in_maximal_ideal",
    "in_valuation_ring",
    "rebuilt_specialisation",
    "recovered_residue",
    "rescaled_oracle",
    "roundtrip_check",
    "structure_checks",
    "sum_prime_variety",
    "sum_prime_witness",
    "sum_variety",
    "sum_witness",
    "value_compare",
    "variety_C",
    "variety_D",
    "variety_holds",
]
