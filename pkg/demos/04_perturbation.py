"""
Breaking distance ties by moving points slightly
================================================

Grid-aligned points carry heaps of repeated distances, which the spanning
tree structure theory cannot tolerate.  In a strictly convex plane every
tie dies under an arbitrarily small, fully deterministic perturbation: each
move pushes one point directly away from a tie partner, changing exactly
that distance by the step size.  Flat-sided norms genuinely lack this
escape hatch, so the routine refuses them.
"""

import numpy as np

from normplane import (
    NotStrictlyConvex,
    PointSet,
    detect_ties,
    distance,
    linf,
    lp,
    min_distance_gap,
    pairwise_distances,
    perturb_distinct,
    polygonal,
)

spec = lp(2)
grid = PointSet(np.array(
    [[i, j] for i in range(4) for j in range(4)], dtype=float
))
table = pairwise_distances(spec, grid)
print(f"4x4 grid: {len(detect_ties(table))} tied distance pairs, "
      f"min gap between distinct values {min_distance_gap(table):.4f}")

moved, report = perturb_distinct(spec, grid, eps=1e-3)
table2 = pairwise_distances(spec, moved)
print(f"after perturbation: {len(detect_ties(table2))} ties, "
      f"{len(report.steps)} moves, max displacement {max(report.displacement):.2e}")
print(f"smallest gap between distance values now: {report.residual_min_gap:.2e}")
print("first moves (point, pushed away from, step size):")
for mover, (a, b), size in report.steps[:5]:
    print(f"  point {mover:<2} away from {b:<2} by {size:.2e}")

# Flat unit spheres admit ties that no translation can break; the library
# rejects the request instead of looping.
try:
    perturb_distinct(linf(), grid, eps=1e-3)
except NotStrictlyConvex as exc:
    print(f"\nmax norm rejected: {exc}")

# The obstruction is concrete: with a decagonal unit ball, these two
# distances both sit on the same flat edge, and per-point horizontal shifts
# slide them along the flat without changing either gauge.
decagon = polygonal([
    [np.cos(2 * np.pi * k / 10), np.sin(2 * np.pi * k / 10)] for k in range(10)
])
top = float(np.sin(2 * np.pi * 2 / 10))
pts = np.array([[0.0, 0.0], [0.10, top], [-0.20, top]])
shifted = pts + np.array([[0.0, 0.0], [0.03, 0.0], [0.07, 0.0]])
for label, cfg in (("original", pts), ("shifted", shifted)):
    d12 = distance(decagon, cfg[0], cfg[1])
    d13 = distance(decagon, cfg[0], cfg[2])
    print(f"{label:>9}: d(p1,p2)={d12:.12f}  d(p1,p3)={d13:.12f}  (still tied)")
