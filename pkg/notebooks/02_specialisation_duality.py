"""
Specialising points and recovering the valuation
================================================

A point of P^n over the series field specialises to a point over the
constants: scale by eps^-mu, take residues. Going back, the valuation
ring is the set of k with [k : 1] not sent to [1 : 0].
"""

# %%
from infinitesimal import parse_point, specialize, segre, embed
from infinitesimal.duality import (
    honest_oracle, constant_oracle, in_valuation_ring, in_maximal_ideal,
    value_compare, roundtrip_check, duality_selftest,
)
from infinitesimal.parsing import parse_puiseux as S
from infinitesimal.projective import ProjPointL

for text in ["[eps : 1]", "[1 : eps]", "[eps : eps]", "[eps^(1/2) + eps : 2*eps^(1/2)]"]:
    print(text, "->", specialize(parse_point(text)))

# %%
# the Segre square and the coordinate embedding commute with specialisation
p, q = parse_point("[1 : eps]"), parse_point("[eps^2 : 3]")
print(specialize(segre(p, q)), "==", segre(specialize(p), specialize(q)))
print(specialize(embed(p)), "==", embed(specialize(p)))

# %%
s = honest_oracle()
for k in ["eps", "eps^(-1)", "5", "1 + eps"]:
    e = S(k)
    print(f"{k:>9}: ring={in_valuation_ring(s, e)!s:5} ideal={in_maximal_ideal(s, e)}")

print("v(eps^2) <= v(eps^3):", value_compare(s, S("eps^2"), S("eps^3")))

# %%
print(roundtrip_check([S("eps"), S("eps^(-1)"), S("1 + eps"), S("7")]))
print(duality_selftest(200, 7))

# %%
# a map sending everything to [1:1] is not a specialisation
print(duality_selftest(20, 1, oracle=constant_oracle(ProjPointL([1, 1]))))
