"""
Diagrams and state circles
==========================

A knot diagram is stored as a PD code.  Each crossing lists its four edge
labels counterclockwise, starting from the incoming under-strand.  Crossing
signs are not supplied; they are read off by walking the strands.
"""

# %%
from slopekit import corpus
from slopekit.diagram import TorusParams, cable, mirror, parse_pd, signed_counts, torus_diagram
from slopekit.states import adequacy, is_single_cycle, resolve, state_graph, state_surface_invariants

# %%
# Parsing and signs
# -----------------
#
# The corpus trefoil is left-handed, so all three crossings are negative.

trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
print(trefoil.to_pd())
print("c+, c-, writhe:", signed_counts(trefoil))
print("mirror:", signed_counts(mirror(trefoil)))

# %%
# Braid closures give torus knot diagrams.  T(-2,5) is the closure of
# five negative crossings on two strands.

t25 = torus_diagram(TorusParams(-2, 5))
print(t25.to_pd())
print(signed_counts(t25), "components:", t25.components)

# %%
# Cabling replaces every crossing by a k x k grid.

print("crossings in the 3-cable of the trefoil:", len(cable(trefoil, 3)))

# %%
# State circles and adequacy
# --------------------------
#
# Smoothing every crossing the same way gives the all-A and all-B states.
# For a reduced alternating diagram the two circle counts add up to c + 2.

for name in ("trefoil", "figure8", "trefoil-kink", "T(3,4)"):
    d = corpus.get(name)
    v_a = resolve(d, ("A",) * len(d))[0]
    v_b = resolve(d, ("B",) * len(d))[0]
    print(f"{name:13s} c={len(d)}  vA={v_a}  vB={v_b}  adequate={adequacy(d)}")

# %%
# The A-state graph of T(-2,q) is a single q-cycle, and the all-A state
# surface is the cabling annulus with slope -2q.

for q in (3, 5, 7):
    d = torus_diagram(TorusParams(-2, q))
    g = state_graph(d, "A")
    s = state_surface_invariants(d, "A")
    print(q, g.vertex_count, is_single_cycle(g), s.slope, s.euler)
