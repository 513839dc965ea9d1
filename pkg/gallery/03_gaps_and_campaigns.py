"""
Gap sequences and a small enumeration campaign
==============================================

Trigonal curves on Hirzebruch surfaces have four local shapes at a
ramification point.  Each gives a model polygon, and sweeping it with a
linear functional lists the Weierstrass gaps.  The second half runs the
self-intersection bound over every polygon in a small box.
"""

# %%
import math

from latticecurve import TrigonalModel, gap_report, model_polygon

for M in (
    TrigonalModel("i", 1),
    TrigonalModel("ii", 1),
    TrigonalModel("iii", 2, alpha=math.inf, beta=3),
    TrigonalModel("iv", 1, nu=4),
):
    rep = gap_report(M)
    print(M.case, model_polygon(M).vertices, rep.ram_type, rep.seq_type, rep.gaps)

# %%
# Every convex lattice polygon in [0, 4]^2 (up to translation) satisfies
# 4 C^2 >= 3 q^2.
from latticecurve.enumeration import campaign_q4_census, campaign_selfint_bounds

rep = campaign_selfint_bounds(4)
print(rep.table())

# %%
# Classes with width 4 and small C^2 that already fit in the box.
print(campaign_q4_census(4).table())
