"""
Splitting a point set to minimize the larger diameter
=====================================================

The optimal 2-clustering under any norm falls out of the maximum spanning
tree: the two color classes of its proper 2-coloring minimize the maximum
cluster diameter.  A binary search over tree edge lengths also produces a
stabbing line crossing every overlong tree edge, which makes the split
visible geometrically.
"""

import pathlib

import numpy as np

from normplane import (
    PointSet,
    build_fng,
    convex_hull,
    emit_svg,
    euclidean,
    mxst_mpsy,
    two_clustering,
    two_clustering_bruteforce,
)

rng = np.random.default_rng(23)
spec = euclidean()

# Two loose clumps plus a stray point.
clump_a = rng.normal([-4, 0], 1.1, size=(6, 2))
clump_b = rng.normal([5, 1], 1.3, size=(6, 2))
stray = np.array([[0.0, 6.0]])
S = PointSet(np.vstack([clump_a, clump_b, stray]))

part = two_clustering(spec, S)
print(f"side_a = {part.side_a}")
print(f"side_b = {part.side_b}")
print(f"diameters: {part.diam_a:.4f} vs {part.diam_b:.4f}  ->  value {part.value:.4f}")
line = part.witness_line
print(f"witness line: {line.a:+.4f}*x {line.b:+.4f}*y = {line.c:.4f}")

# Exhaustive confirmation over all 2^(n-1) bipartitions.
oracle = two_clustering_bruteforce(spec, S)
print(f"matches exhaustive optimum: {part.value == oracle.value} "
      f"(oracle value {oracle.value:.4f})")

tree, _ = mxst_mpsy(spec, S)
g = build_fng(spec, S)
hull = convex_hull(S.points)
out = pathlib.Path("demo_out")
out.mkdir(exist_ok=True)
emit_svg(S, hull, g, tree, part, out / "two_clustering.svg")
print(f"figure written to {out / 'two_clustering.svg'}")
