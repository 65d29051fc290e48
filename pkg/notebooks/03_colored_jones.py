"""
Colored Jones polynomials by cabling
====================================

J_K(n) is a Chebyshev combination of brackets of blackboard cables,
followed by a framing correction.  The correction is not typed in; it is
calibrated on a one-crossing kink, which must come out as the unknot.
"""

# %%
from slopekit import corpus
from slopekit.colored import chebyshev, colored_degrees, colored_jones, framing_factor, unknot_colored_jones
from slopekit.diagram import TorusParams, parse_pd, torus_diagram

# %%
# Ingredients
# -----------

for n in range(1, 6):
    print(n, "S_{n-1} =", chebyshev(n), " F(n) =", framing_factor(n))

# %%
# Both kinks reproduce the colored unknot exactly.

for n in range(1, 7):
    ok = all(colored_jones(parse_pd(c), n) == unknot_colored_jones(n) for c in ("X(1,1,2,2)", "X(1,2,2,1)"))
    print(n, ok)

# %%
# Values
# ------
#
# At n = 2 the colored Jones is the unreduced Jones polynomial.

print(colored_jones(corpus.get("trefoil"), 2))
print(colored_jones(corpus.get("trefoil"), 3))

# %%
# Degree tables on the 4d scale.  The figure-8 is amphichiral, so its two
# sides are negatives of each other.

for name in ("trefoil", "figure8"):
    seq = colored_degrees(corpus.get(name), 4)
    print(name, seq.plus, seq.minus)

t34 = colored_degrees(torus_diagram(TorusParams(3, 4)), 3)
print("T(3,4)", t34.plus, t34.minus)
