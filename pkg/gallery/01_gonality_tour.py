"""
A tour of gonality from polygons
================================

Every convex lattice polygon is the Newton polygon of a curve on a toric
surface.  This script walks through the branches of the classifier and
prints what each one reports.
"""

# %%
# Generic case: the gonality is the lattice width.
from latticecurve import classify_curve, lattice_width, make_polygon

P = make_polygon([(0, 0), (5, 0), (5, 3), (0, 3)])
r = classify_curve(P)
print(r.branch, "g =", r.g, "gonality =", r.gonality, "directions", r.pencil_directions)

# %%
# The width is attained by every direction listed in the witnesses.
lw = lattice_width(P)
print("width", lw.q, "witnesses", lw.witnesses)

# %%
# Plane curves lose one: d times the standard simplex has width d but the
# gonality is d - 1 (projection from a point on the curve).
for d in range(2, 8):
    r = classify_curve(make_polygon([(0, 0), (d, 0), (0, d)]))
    print(f"d={d}  g={r.g:2d}  width={r.q}  gonality={r.gonality}  clifford={r.clifford}")

# %%
# The two exceptional triangles.
for verts in ([(0, 0), (4, 2), (2, 4)], [(0, 0), (-3, -6), (-6, -3)]):
    r = classify_curve(make_polygon(verts))
    print(verts, r.branch, (r.g, r.q, r.gonality, r.clifford), r.pencil_count)
    for note in r.notes[1:]:
        print("   ", note)

# %%
# A square and a long rectangle: two pencils versus one.
for a, b in ((4, 4), (7, 4)):
    r = classify_curve(make_polygon([(0, 0), (a, 0), (a, b), (0, b)]))
    print(f"{a}x{b}", r.pencil_count, r.pencil_directions)
