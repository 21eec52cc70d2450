"""Command-line front end.

Exit codes: 0 success, 1 a check ran and failed, 2 common component,
3 a field extension is required, 4 truncation insufficient, 5 seed
disagreement or no generic frame, 6 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .basefield import QQ, field_make
from .curves import parse_curve
from .duality import duality_selftest
from .errors import (
    AlgebraError,
    CommonComponent,
    DegenerateCoordinates,
    IndeterminateValuation,
    NondeterministicCount,
    NonInvertible,
    NotHomogeneous,
    NotSquareFree,
    ParseError,
    RedundantExtension,
    RequiresExtension,
    TruncationInsufficient,
    UnrepresentablePoint,
)
from .multiplicity import MultConfig, bezout_check, mult_report, report_dict
from .newton_puiseux import BranchRequest, puiseux_roots
from .parsing import parse_eps_x_poly, parse_qpoly
from .projective import ProjPointL, parse_point, specialize

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_COMMON = 2
EXIT_EXTENSION = 3
EXIT_TRUNCATION = 4
EXIT_NONDETERMINISTIC = 5
EXIT_USAGE = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _seeds(text):
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must be comma-separated integers: {text!r}") from None


def build_parser():
    p = _Parser(prog="infinitesimal", description="Exact computations in the prime model of specialisations.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, mult=False):
        sp.add_argument("--field", help="minimal polynomial in t of the constant field (default: Q)")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        if mult:
            sp.add_argument("--truncation", type=_rational, default=Fraction(16))
            sp.add_argument("--cap", type=_rational, default=Fraction(1024))
            sp.add_argument("--seeds", type=_seeds, default=(1, 2))
            sp.add_argument("--retries", type=int, default=5)

    sp = sub.add_parser("mult", help="intersection multiplicity at a point")
    sp.add_argument("--c1", required=True)
    sp.add_argument("--c2", required=True)
    sp.add_argument("--point", required=True)
    common(sp, mult=True)

    sp = sub.add_parser("bezout", help="all intersection points and the Bezout sum")
    sp.add_argument("--c1", required=True)
    sp.add_argument("--c2", required=True)
    common(sp, mult=True)

    sp = sub.add_parser("expand", help="Puiseux roots of F(eps, x)")
    sp.add_argument("--poly", required=True, help="polynomial in x and eps")
    sp.add_argument("--truncation", type=_rational, default=Fraction(16))
    sp.add_argument("--positive-only", action="store_true")
    sp.add_argument("--extend", action="store_true", help="adjoin roots instead of failing")
    common(sp)

    sp = sub.add_parser("duality-selftest", help="round trips between specialisation and valuation")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=7)
    common(sp)

    sp = sub.add_parser("specialize", help="specialise a point of P^n(K)")
    sp.add_argument("--point", required=True)
    common(sp)
    return p


def _field(args):
    if not args.field:
        return QQ
    return field_make(parse_qpoly(args.field))


def _config(args):
    return MultConfig(args.truncation, args.cap, args.seeds, args.retries)


def _cmd_mult(args):
    field = _field(args)
    c1, c2 = parse_curve(args.c1, field), parse_curve(args.c2, field)
    l = parse_point(args.point, field)
    if not isinstance(l, ProjPointL):
        raise ParseError("the point must have constant coordinates")
    cfg = _config(args)
    r = mult_report(c1, c2, l, cfg)
    out = report_dict(c1, c2, [r], cfg, expected=r.mult_oracle)
    return out, EXIT_OK if out["verdict"] else EXIT_FAILED


def _cmd_bezout(args):
    field = _field(args)
    c1, c2 = parse_curve(args.c1, field), parse_curve(args.c2, field)
    cfg = _config(args)
    b = bezout_check(c1, c2, cfg)
    out = report_dict(c1, c2, b.reports, cfg)
    return out, EXIT_OK if out["verdict"] else EXIT_FAILED


def _cmd_expand(args):
    field = _field(args)
    F = parse_eps_x_poly(args.poly, field)
    req = BranchRequest(F, args.truncation, args.positive_only, args.extend)
    branches = puiseux_roots(req)
    out = {
        "poly": args.poly,
        "field": field.describe(),
        "truncation": str(req.target_truncation),
        "branches": [
            {"series": str(b.series), "field": b.series.field.describe(), "conjugates": b.conjugates}
            for b in branches
        ],
        "count": sum(b.conjugates for b in branches),
    }
    return out, EXIT_OK


def _cmd_duality(args):
    out = duality_selftest(args.samples, args.seed, _field(args))
    return out, EXIT_OK if out["passed"] else EXIT_FAILED


def _cmd_specialize(args):
    field = _field(args)
    p = parse_point(args.point, field)
    s = specialize(p)
    out = {"point": args.point, "field": field.describe(), "specialization": "[" + ":".join(str(c) for c in s.coords) + "]"}
    return out, EXIT_OK


COMMANDS = {
    "mult": _cmd_mult,
    "bezout": _cmd_bezout,
    "expand": _cmd_expand,
    "duality-selftest": _cmd_duality,
    "specialize": _cmd_specialize,
}


def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v) if not isinstance(v, str) else v}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    return lines


def exit_code_for(exc):
    if isinstance(exc, CommonComponent):
        return EXIT_COMMON
    if isinstance(exc, (RequiresExtension, UnrepresentablePoint)):
        return EXIT_EXTENSION
    if isinstance(exc, (TruncationInsufficient, IndeterminateValuation)):
        return EXIT_TRUNCATION
    if isinstance(exc, (NondeterministicCount, DegenerateCoordinates)):
        return EXIT_NONDETERMINISTIC
    if isinstance(exc, (UsageError, ParseError, NotHomogeneous, NotSquareFree, RedundantExtension,
                        NonInvertible, ValueError, AlgebraError)):
        return EXIT_USAGE
    raise exc


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out, code = COMMANDS[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except Exception as exc:  # noqa: BLE001 - mapped to documented exit codes
        code = exit_code_for(exc)
        print(f"error: {exc}", file=stderr)
        return code
    if args.json:
        print(json.dumps(out, indent=2, ensure_ascii=False), file=stdout)
    else:
        print("\n".join(_text(out)), file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
