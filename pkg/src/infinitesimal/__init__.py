"""Exact arithmetic in L(eps)^alg, specialisations, and intersection multiplicity.

The constant field L is Q or a number field Q[t]/(m). Elements of the
valuation field are truncated Puiseux series in ``eps`` with the order
valuation. On top of that sit projective points and their specialisation,
the recovery of valuation data from a specialisation, Newton-Puiseux
expansion, and a non-standard intersection multiplicity for plane curves.
"""

from .basefield import QQ, Field, FieldElement, field_make
from .curves import PerturbedCurve, PlaneCurve, common_points, coordinate_change, incidence, parse_curve, perturb
from .duality import SpecOracle, duality_selftest, in_maximal_ideal, in_valuation_ring, roundtrip_check, value_compare
from .errors import *  # noqa: F401,F403
from .multiplicity import BezoutReport, MultConfig, MultReport, bezout_check, mult_geq, mult_nonstandard, mult_oracle
from .newton_puiseux import Branch, BranchRequest, puiseux_roots
from .parsing import parse_mpoly, parse_puiseux, parse_qpoly
from .poly import MPoly, Poly, poly_exact_div, poly_gcd, poly_squarefree, resultant, resultant_y
from .projective import ProjPointK, ProjPointL, VarietyPredicate, embed, parse_point, segre, specialize, variety, variety_holds
from .puiseux import PuiseuxElement, in_M, in_O, p_arith, residue, val

__version__ = "0.1.0"
