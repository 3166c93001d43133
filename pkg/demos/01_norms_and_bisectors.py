"""
Norms on the plane: distances, orthogonality, bisectors
=======================================================

The library treats a planar norm as a first-class object: the Euclidean
norm, any Lp norm, or the gauge of a centrally symmetric convex polygon.
This script walks through the primitive layer every algorithm builds on.
"""

import numpy as np

from normplane import (
    birkhoff_orthogonal,
    distance,
    euclidean,
    evaluate_norm,
    is_strictly_convex,
    l1,
    linf,
    lp,
    polygonal,
    sample_bisector,
)

# Reference vectors under the classic norms.
v = [3.0, 4.0]
for spec in (euclidean(), l1(), lp(1.5), lp(3), linf()):
    print(f"||(3,4)|| under {spec.label():<10} = {evaluate_norm(spec, v):.6f}")

# A polygonal gauge: the unit ball is a hexagon.  Points on the ball have
# gauge exactly one.
hexagon = polygonal([[1, 0], [0.5, 1], [-0.5, 1], [-1, 0], [-0.5, -1], [0.5, -1]])
print(f"\nhexagon gauge of (0.5, 1)  = {evaluate_norm(hexagon, [0.5, 1]):.6f}")
print(f"hexagon gauge of (1, 1)    = {evaluate_norm(hexagon, [1, 1]):.6f}")
print(f"strictly convex? hexagon={is_strictly_convex(hexagon)}, "
      f"lp(3)={is_strictly_convex(lp(3))}, linf={is_strictly_convex(linf())}")

# Birkhoff orthogonality generalizes perpendicularity: x is orthogonal to y
# when no multiple of y can shorten x.
print("\nBirkhoff orthogonality:")
print("  L2:  (1,0) vs (0,1) ->", birkhoff_orthogonal(euclidean(), [1, 0], [0, 1]))
print("  L2:  (1,0) vs (1,1) ->", birkhoff_orthogonal(euclidean(), [1, 0], [1, 1]))
print("  Linf:(1,1) vs (0,1) ->", birkhoff_orthogonal(linf(), [1, 1], [0, 1]))

# Bisectors are found numerically: along lines crossing from the p-side to
# the q-side, the signed distance difference changes sign.
p, q = np.array([-1.0, 0.0]), np.array([1.0, 0.5])
for spec in (euclidean(), lp(3), linf()):
    sample = sample_bisector(spec, p, q, count=9, extent=2.0)
    worst = sample.residuals.max()
    print(f"\nbisector of p={p}, q={q} under {spec.label()}:")
    for point in sample.points[::4]:
        print(f"  ({point[0]: .4f}, {point[1]: .4f})   "
              f"d(p)={distance(spec, point, p):.6f}  d(q)={distance(spec, point, q):.6f}")
    print(f"  worst residual over 9 samples: {worst:.2e}")

# In the max norm, bisectors can have interior: a whole square of points is
# equidistant from these two sites.  This is exactly why tie-breaking by
# perturbation needs strict convexity.
u, w = [-0.5, 0.0], [0.5, 0.0]
print("\nfat bisector under Linf: both of these are equidistant from u and w:")
for witness in ([0.0, 1.0], [0.2, 1.0]):
    print(f"  {witness}: d(u)={distance(linf(), witness, u):.3f}, "
          f"d(w)={distance(linf(), witness, w):.3f}")
