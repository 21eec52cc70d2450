"""
Puiseux series and the order valuation
======================================

Elements of the valuation field are truncated Puiseux series in eps.
Their value is the lowest exponent; the residue is the eps^0 coefficient.
"""

# %%
from infinitesimal import parse_puiseux, val, residue, in_O, in_M

x = parse_puiseux("2 + eps^(3/2) - 1/2*eps^2")
y = parse_puiseux("eps^(-1) + 3")
print("x =", x)
print("y =", y)

# %%
# values add under multiplication
print("v(x) =", val(x), " v(y) =", val(y), " v(xy) =", val(x * y))

# %%
# x is a unit of the valuation ring, y is not
print("x in O:", in_O(x), " x in M:", in_M(x), " residue(x) =", residue(x))
print("y in O:", in_O(y), " 1/y in M:", in_M(1 / y))

# %%
# an inverse to finite precision; the product is 1 up to the propagated truncation
z = parse_puiseux("1 + eps")
inv = z.inverse(prec=6)
print("1/(1+eps) =", inv)
print("check:", z * inv)

# %%
# cancellation can leave a value we cannot decide: zero so far, but only up to eps^2
d = parse_puiseux("eps + O(eps^2)") - parse_puiseux("eps")
print("d =", d)
try:
    d.is_zero()
except Exception as exc:
    print(type(exc).__name__, "-", exc)
