"""
Counting deformed intersection points
=====================================

Perturb both curves by eps times random integers, then count the intersection
points of the perturbed curves that specialise to l. The count is compared
with the order of vanishing of the resultant, and summed against Bezout.
"""

# %%
from infinitesimal import parse_curve, mult_nonstandard, mult_oracle, bezout_check, field_make
from infinitesimal.projective import ProjPointL
from infinitesimal.multiplicity import report_dict, MultConfig, dumps

O = ProjPointL([0, 0, 1])
line, conic, cusp = parse_curve("y"), parse_curve("y*z - x^2"), parse_curve("y^2*z - x^3")

n, witnesses = mult_nonstandard(line, conic, O)
print("tangent line and conic:", n, "oracle:", mult_oracle(line, conic, O))
for w in witnesses:
    print("   witness", w.to_dict()["point"])

# %%
n, _ = mult_nonstandard(line, cusp, O)
print("tangent line and cusp:", n)

# %%
b = bezout_check(conic, cusp)
for l, m in b.entries:
    print(l, m)
print("sum", b.sum, "expected", b.expected, "verdict", b.verdict)

# %%
# two circles touching at the circular points need i
K = field_make([1, 0, 1])
c1, c2 = parse_curve("x^2 + y^2 - z^2", K), parse_curve("x^2 + y^2 - 2*z^2", K)
b = bezout_check(c1, c2)
d = report_dict(c1, c2, b.reports, MultConfig())
for pt in d["points"]:
    w = pt["witnesses"][0]
    print(pt["l"], pt["mult_nonstandard"], "| witness field", w["field"], "| conjugates", w["conjugates"])
print("verdict", d["verdict"])

# %%
# the full report is what `infinitesimal bezout --json` prints
print(dumps(report_dict(line, cusp, bezout_check(line, cusp).reports, MultConfig()))[:400], "...")
