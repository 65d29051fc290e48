"""
Kauffman bracket and Jones polynomial
=====================================

Polynomials are kept in the bracket variable A with t = A**-4.  The naive
state sum visits all 2**c states; the fast engine contracts crossings one
at a time and tracks how the boundary strands are paired.
"""

# %%
import time

from slopekit import corpus
from slopekit.diagram import cable, mirror
from slopekit.skein import bracket, bracket_fast, contraction_order, jones, t_degrees

# %%
# Both engines agree on small diagrams.

for name in ("kink+", "trefoil", "figure8", "T(3,4)"):
    d = corpus.get(name)
    print(f"{name:8s}", bracket(d), "|", bracket_fast(d) == bracket(d))

# %%
# Contraction order and width
# ---------------------------
#
# The width is the largest number of open strands during contraction.
# It, not the crossing count, decides the cost.

big = cable(corpus.get("trefoil"), 3)
order, width = contraction_order(big.pd)
start = time.perf_counter()
value = bracket_fast(big)
print(f"{len(big)} crossings, width {width}, {time.perf_counter() - start:.3f}s, "
      f"{len(value.terms)} terms")

# %%
# Jones polynomial
# ----------------
#
# The left trefoil gives -t^-4 + t^-3 + t^-1 (printed in A), and mirroring
# sends A to 1/A.

left = corpus.get("trefoil")
print("left trefoil:", jones(left))
print("right trefoil:", jones(mirror(left)))
print("figure-8 is palindromic:", jones(corpus.get("figure8")) == jones(corpus.get("figure8")).mirror())

# %%
# Degrees are reported on the 4d scale, where they are always integers.
# The unreduced Jones of the right trefoil spans t^(1/2) .. t^(9/2).

print(t_degrees(jones(mirror(left), reduced=False)))
