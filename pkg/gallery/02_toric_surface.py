"""
From a polygon to its toric surface
===================================

The normal fan of a polygon, refined to be smooth, carries a divisor whose
polygon is the one we started from.  Widths, genus and fibrations can all be
read from the fan side; here we compare them with the polygon side.
"""

# %%
from latticecurve import (
    adjunction_genus,
    divisor_of_polygon,
    genus,
    intersection,
    polygon_of_divisor,
    ray_self_intersection,
    self_intersection,
    toric_fibrations,
    width,
    width_via_fan,
)
from latticecurve.fan import fiber_degree
from latticecurve.polygon import make_polygon

P = make_polygon([(0, 0), (4, 2), (2, 4)])
C = divisor_of_polygon(P)
print("rays  ", C.fan.rays)
print("coeffs", C.coeffs)
print("D_i^2 ", [ray_self_intersection(C.fan, i) for i in range(len(C.fan.rays))])

# %%
# C.C is twice the area, and adjunction gives the interior point count.
print("C.C =", intersection(C, C), " 2 area =", self_intersection(P))
print("adjunction genus =", adjunction_genus(C), " interior points =", genus(P))
print("round trip ok:", polygon_of_divisor(C) == P)

# %%
# Widths from intersection numbers agree with widths from the vertices.
for d in [(1, 0), (0, 1), (1, -1), (2, 1), (-3, 5)]:
    print(d, width_via_fan(C, d), width(P, d))

# %%
# Each axis ray with its negative gives a fibration; the fiber degree is
# the width in that direction, and the smallest one is the lattice width.
for F in toric_fibrations(C.fan):
    print("axis", F.axis, "degree", fiber_degree(F, C))
