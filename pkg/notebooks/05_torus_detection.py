"""
Recognizing torus knots from degrees
====================================

A torus knot T(p,q) with p < 0 < q has slopes {0} and {pq}, and linear
data pq - p + q on the plus side.  Those two numbers pin down p and q.
"""

# %%
from slopekit import corpus
from slopekit.colored import colored_degrees
from slopekit.diagram import TorusParams, torus_diagram
from slopekit.quasipoly import fit, slope_data
from slopekit.states import SurfaceInvariants
from slopekit.torus import (
    adequate_degree_formula,
    crossing_criterion,
    detect_torus,
    recover_params,
    ssc_check,
    torus_degree_formula,
    torus_degree_sequence,
    torus_quasipolynomials,
)

# %%
# Recovering parameters

print(recover_params(-6, -1), recover_params(-10, -3), recover_params(-6, 0))

# %%
# The even-n constant
# -------------------
#
# Two modes exist for the constant term at even n.  Brute force decides
# between them; for T(-2,3) at n = 2 the unreduced Jones gives -18.

brute = colored_degrees(torus_diagram(TorusParams(-2, 3)), 2)
print("brute force:", brute.minus[1])
for mode in ("paper", "oracle"):
    print(mode, torus_degree_formula(TorusParams(-2, 3), 2, mode))

# %%
# Detection in both chiralities

seq = torus_degree_sequence(TorusParams(-3, 5), 12)
for label, s in (("direct", seq), ("mirrored", seq.mirrored())):
    res = detect_torus(fit(s.plus), fit(s.minus))
    print(label, res.verdict, res.params, "knot:", res.knot)

# %%
# Paper-mode comparison keeps the verdict but warns about the constant.

res = detect_torus(fit(seq.plus), fit(seq.minus), mode="paper")
print(res.verdict, res.warnings)

# %%
# Criteria
# --------
#
# The slope spread equals twice the crossing number only for 2-strand
# torus knots.

for p, q in ((-2, 5), (-3, 4), (-3, 5)):
    tp = TorusParams(p, q)
    print((p, q), crossing_criterion(0, p * q, tp.crossing_number()))

# %%
# Surface records against the slope data of T(-2,3).

sd = slope_data(*torus_quasipolynomials(TorusParams(-2, 3)))
print("Seifert surface:", ssc_check(SurfaceInvariants(0, 1, -1), "plus", sd))
print("cabling annulus:", ssc_check(SurfaceInvariants(-6, 2, 0), "minus", sd))

# %%
# The figure-8 has slopes 4 and -4, so neither side looks like a torus knot.

pairs = [adequate_degree_formula(corpus.get("figure8"), n) for n in range(1, 13)]
print("figure-8:", detect_torus(fit([a for a, _ in pairs]), fit([b for _, b in pairs])).verdict)
