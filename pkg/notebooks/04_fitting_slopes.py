"""
Quasi-polynomial fits and Jones slopes
======================================

Degree sequences grow like quadratic quasi-polynomials.  The fitter looks
for the smallest period and onset that reproduce every point exactly, with
each residue class confirmed by at least one point it was not built from.
"""

# %%
from slopekit import corpus
from slopekit.colored import colored_degrees
from slopekit.diagram import TorusParams
from slopekit.quasipoly import FitError, fit, slope_data
from slopekit.torus import adequate_degree_formula, torus_degree_sequence

# %%
# A torus knot
# ------------
#
# For T(-3,4) the minus side has period 2: the even colors carry a
# different constant term.

seq = torus_degree_sequence(TorusParams(-3, 4), 12)
qp_plus, qp_minus = fit(seq.plus), fit(seq.minus)
for side, qp in (("4d+", qp_plus), ("4d-", qp_minus)):
    for r, (a, b, c) in enumerate(qp.coeffs):
        print(f"{side} n = {r} mod {qp.period}: {a} n^2 + {b} n + {c}")

# %%
# The figure-8
# ------------
#
# Brute force up to n = 4 agrees with the adequate-diagram formulas, which
# then extend the sequence far enough to fit.

f8 = corpus.get("figure8")
pairs = [adequate_degree_formula(f8, n) for n in range(1, 13)]
brute = colored_degrees(f8, 4)
print("brute force agrees:", list(zip(brute.plus, brute.minus)) == pairs[:4])
sd = slope_data(fit([a for a, _ in pairs]), fit([b for _, b in pairs]))
for name in ("js", "jx", "js_star", "jx_star"):
    print(name, sorted(str(x) for x in getattr(sd, name)))

# %%
# Exponential data is rejected with the closest miss as a witness.

try:
    fit([1, 2, 4, 8, 16, 32], max_period=2)
except FitError as exc:
    print(exc)
