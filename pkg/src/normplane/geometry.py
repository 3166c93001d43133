"""Norm-independent affine predicates: orientation, hulls, segment tests."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSegment, DegenerateTriangle, DuplicatePoints

CCW = 1
CW = -1
COLLINEAR = 0

DEFAULT_TOL = 1e-9


def _cross(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])


def orientation(a, b, c, tol: float = DEFAULT_TOL) -> int:
    """Sign of the turn a -> b -> c: CCW, CW or COLLINEAR.

    The collinearity band is tol times the product of the two segment
    lengths, so behavior is stable across coordinate magnitudes.
    """
    cross = _cross(a, b, c)
    scale = math.hypot(b[0] - a[0], b[1] - a[1]) * math.hypot(c[0] - a[0], c[1] - a[1])
    if abs(cross) <= tol * scale:
        return COLLINEAR
    return CCW if cross > 0.0 else CW


@dataclass(frozen=True)
class HullIndex:
    """Convex hull with collinear boundary points kept as first-class data.

    ``vertices`` lists the extreme points in CCW order; ``boundary`` also
    contains points lying on hull edges; ``position`` ranks every boundary
    point along the CCW traversal (degenerate all-collinear input yields a
    two-extreme "hull" whose boundary is every point, ranked by the forward
    pass along the segment).
    """

    vertices: tuple[int, ...]
    boundary: frozenset[int]
    position: dict[int, int]

    def traversal(self) -> list[int]:
        return sorted(self.position, key=self.position.get)


def convex_hull(points, tol: float = DEFAULT_TOL) -> HullIndex:
    """Monotone-chain hull over point indices, tracking collinear boundary."""
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    if n == 0:
        raise DuplicatePoints("empty point set")
    _check_distinct(pts)
    if n == 1:
        return HullIndex(vertices=(0,), boundary=frozenset({0}), position={0: 0})

    order = sorted(range(n), key=lambda i: (pts[i, 0], pts[i, 1]))

    def build(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2 and orientation(
                pts[chain[-2]], pts[chain[-1]], pts[i], tol
            ) != CCW:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 2:  # all points coincide is excluded; this is n==1 handled above
        verts = [order[0], order[-1]]
    if len(verts) == 2 and verts[0] == verts[1]:
        verts = [order[0], order[-1]]

    traversal = _boundary_traversal(pts, verts, tol)
    position = {idx: rank for rank, idx in enumerate(traversal)}
    return HullIndex(
        vertices=tuple(verts),
        boundary=frozenset(traversal),
        position=position,
    )


def _check_distinct(pts: np.ndarray) -> None:
    seen = {}
    for i, (x, y) in enumerate(pts):
        key = (float(x), float(y))
        if key in seen:
            raise DuplicatePoints(f"points {seen[key]} and {i} coincide")
        seen[key] = i


def _boundary_traversal(pts: np.ndarray, verts: list[int], tol: float) -> list[int]:
    """CCW tour of all boundary points; each appears once (first occurrence)."""
    k = len(verts)
    seen: set[int] = set()
    tour: list[int] = []
    for e in range(k):
        a_idx, b_idx = verts[e], verts[(e + 1) % k]
        a, b = pts[a_idx], pts[b_idx]
        if a_idx == b_idx:
            continue
        abx, aby = b[0] - a[0], b[1] - a[1]
        ab2 = abx * abx + aby * aby
        on_edge = []
        for i in range(len(pts)):
            if orientation(a, b, pts[i], tol) != COLLINEAR:
                continue
            t = ((pts[i, 0] - a[0]) * abx + (pts[i, 1] - a[1]) * aby) / ab2
            if -tol <= t <= 1.0 + tol:
                on_edge.append((t, i))
        on_edge.sort()
        for t, i in on_edge:
            if i != b_idx and i not in seen:
                seen.add(i)
                tour.append(i)
    # a two-vertex (degenerate) hull walks the segment forward then back;
    # first occurrences reduce that to the forward pass
    return tour


def segments_properly_intersect(s1, s2, tol: float = DEFAULT_TOL) -> bool:
    """True iff the open segments cross (orientation-sign test).

    Collinear overlaps report False: a proper crossing needs a single point
    interior to both segments.
    """
    (a, b), (c, d) = s1, s2
    a, b, c, d = (np.asarray(v, dtype=float) for v in (a, b, c, d))
    if np.array_equal(a, b) or np.array_equal(c, d):
        raise DegenerateSegment("segment endpoints coincide")
    o1 = orientation(a, b, c, tol)
    o2 = orientation(a, b, d, tol)
    o3 = orientation(c, d, a, tol)
    o4 = orientation(c, d, b, tol)
    return o1 * o2 < 0 and o3 * o4 < 0


def is_convex_quadrilateral(a, b, c, d, tol: float = DEFAULT_TOL) -> bool:
    """True iff a, b, c, d are cyclically ordered corners of a convex quad."""
    quad = [np.asarray(v, dtype=float) for v in (a, b, c, d)]
    signs = [
        orientation(quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4], tol)
        for i in range(4)
    ]
    return all(s == CCW for s in signs) or all(s == CW for s in signs)


def point_in_triangle(p, a, b, c, tol: float = DEFAULT_TOL) -> bool:
    """Barycentric membership test, boundary included within tol."""
    pv, av, bv, cv = (np.asarray(v, dtype=float) for v in (p, a, b, c))
    den = _cross(av, bv, cv)
    scale = (
        math.hypot(bv[0] - av[0], bv[1] - av[1])
        * math.hypot(cv[0] - av[0], cv[1] - av[1])
    )
    if abs(den) <= tol * scale:
        raise DegenerateTriangle("triangle vertices are collinear")
    l1 = _cross(pv, bv, cv) / den
    l2 = _cross(av, pv, cv) / den
    l3 = _cross(av, bv, pv) / den
    return min(l1, l2, l3) >= -tol
