"""
Newton-Puiseux expansion
========================

Roots X(eps) of F(eps, X) as Puiseux series, one Newton polygon edge at a time.
"""

# %%
from infinitesimal import BranchRequest, puiseux_roots, field_make
from infinitesimal.errors import RequiresExtension
from infinitesimal.parsing import parse_eps_x_poly

def show(text, field=None, **kw):
    F = parse_eps_x_poly(text, field_make(field))
    for b in puiseux_roots(BranchRequest(F, 6, **kw)):
        extra = f"  (x{b.conjugates} conjugates over {b.series.field.describe()})" if b.conjugates > 1 else ""
        print("  ", b.series, extra)

print("x^2 - eps:"); show("x^2 - eps")
print("(x - 1)(x - eps), positive part only:"); show("x^2 - (1 + eps)*x + eps", positive_valuation_only=True)

# %%
# over Q the square root of -eps does not exist
try:
    show("x^2 + eps")
except RequiresExtension as exc:
    print("over Q:", exc)
print("over Q(i):"); show("x^2 + eps", [1, 0, 1])

# %%
# adjoining roots on the fly: one representative per conjugate class
print("x^3 - eps^2:"); show("x^3 - eps^2", extend_field=True)
