import numpy as np
import pytest

from conftest import all_norms
from normplane import (
    CCW,
    COLLINEAR,
    CW,
    DegenerateSegment,
    DegenerateTriangle,
    DuplicatePoints,
    convex_hull,
    distance,
    is_convex_quadrilateral,
    norm_many,
    orientation,
    point_in_triangle,
    segments_properly_intersect,
)


def test_orientation_basic():
    assert orientation([0, 0], [1, 0], [0, 1]) == CCW
    assert orientation([0, 0], [1, 0], [2, 0]) == COLLINEAR
    assert orientation([0, 0], [0, 1], [1, 0]) == CW


def test_orientation_scale_invariance():
    # the collinearity band scales with the segment lengths
    assert orientation([0, 0], [1e8, 0], [2e8, 1e-4]) == COLLINEAR
    assert orientation([0, 0], [1e-8, 0], [2e-8, 1e-18]) == COLLINEAR
    # a proportionally visible deflection stays a turn at any magnitude
    assert orientation([0, 0], [1e8, 0], [2e8, 1e3]) == CCW
    assert orientation([0, 0], [1e-8, 0], [2e-8, 1e-13]) == CCW


def test_convex_hull_square_with_center():
    pts = np.array([[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]], dtype=float)
    hull = convex_hull(pts)
    assert set(hull.vertices) == {0, 1, 2, 3}
    assert 4 not in hull.boundary
    # counterclockwise traversal
    ring = [pts[i] for i in hull.vertices]
    area2 = sum(
        ring[i][0] * ring[(i + 1) % 4][1] - ring[(i + 1) % 4][0] * ring[i][1]
        for i in range(4)
    )
    assert area2 > 0


def test_convex_hull_collinear_degenerate():
    pts = np.array([[0, 0], [1, 0], [3, 0]], dtype=float)
    hull = convex_hull(pts)
    assert set(hull.vertices) == {0, 2}
    assert hull.boundary == frozenset({0, 1, 2})
    assert hull.position[0] < hull.position[1] < hull.position[2]


def test_convex_hull_boundary_point_on_edge():
    pts = np.array([[0, 0], [2, 0], [2, 2], [0, 2], [1, 0]], dtype=float)
    hull = convex_hull(pts)
    assert set(hull.vertices) == {0, 1, 2, 3}
    assert 4 in hull.boundary
    # rank order along the bottom edge: corner, midpoint, next corner
    assert hull.position[0] < hull.position[4] < hull.position[1]


def test_convex_hull_rejects_duplicates():
    with pytest.raises(DuplicatePoints):
        convex_hull(np.array([[0, 0], [1, 1], [0, 0]], dtype=float))


def test_convex_hull_halfplane_oracle(rng):
    for _ in range(25):
        pts = rng.uniform(-10, 10, size=(20, 2))
        hull = convex_hull(pts)
        verts = list(hull.vertices)
        k = len(verts)
        for e in range(k):
            a, b = pts[verts[e]], pts[verts[(e + 1) % k]]
            cross = (b[0] - a[0]) * (pts[:, 1] - a[1]) - (pts[:, 0] - a[0]) * (b[1] - a[1])
            assert np.all(cross >= -1e-9 * np.abs(cross).max())


def test_hull_idempotence(rng):
    pts = rng.uniform(-5, 5, size=(30, 2))
    hull = convex_hull(pts)
    verts = pts[list(hull.vertices)]
    again = convex_hull(verts)
    # same cycle up to rotation
    first = list(again.vertices)
    assert len(first) == len(hull.vertices)
    rotated = [tuple(verts[i]) for i in first]
    original = [tuple(v) for v in verts]
    start = rotated.index(original[0])
    assert rotated[start:] + rotated[:start] == original


def test_segments_properly_intersect():
    square = [np.array([0.0, 0.0]), np.array([1.0, 0.0]), np.array([1.0, 1.0]), np.array([0.0, 1.0])]
    assert segments_properly_intersect((square[0], square[2]), (square[1], square[3]))
    assert not segments_properly_intersect((square[0], square[1]), (square[3], square[2]))
    # sharing an endpoint is not proper
    assert not segments_properly_intersect((square[0], square[2]), (square[2], square[1]))
    with pytest.raises(DegenerateSegment):
        segments_properly_intersect((square[0], square[0]), (square[1], square[2]))


def test_is_convex_quadrilateral():
    assert is_convex_quadrilateral([0, 0], [1, 0], [1, 1], [0, 1])
    assert is_convex_quadrilateral([0, 1], [1, 1], [1, 0], [0, 0])  # clockwise is fine
    assert not is_convex_quadrilateral([0, 0], [1, 1], [1, 0], [0, 1])  # self-crossing
    assert not is_convex_quadrilateral([0, 0], [1, 0], [2, 0], [0, 1])  # collinear triple


def test_point_in_triangle():
    a, b, c = [0, 0], [3, 0], [0, 3]
    assert point_in_triangle([1, 1], a, b, c)
    assert point_in_triangle([0, 0], a, b, c)  # vertex counts
    assert point_in_triangle([1.5, 0], a, b, c)  # edge counts
    assert not point_in_triangle([1, -1], a, b, c)
    with pytest.raises(DegenerateTriangle):
        point_in_triangle([0, 0], [0, 0], [1, 0], [2, 0])


def test_segment_max_inequality_all_norms(rng):
    # distance from any point to a segment point never beats both endpoints
    for spec in all_norms():
        a = rng.uniform(-5, 5, size=(300, 2))
        b = rng.uniform(-5, 5, size=(300, 2))
        c = rng.uniform(-5, 5, size=(300, 2))
        t = rng.uniform(0, 1, size=(300, 1))
        x = a + t * (b - a)
        dcx = norm_many(spec, c - x)
        bound = np.maximum(norm_many(spec, c - a), norm_many(spec, c - b))
        assert np.all(dcx <= bound + 1e-9 * np.maximum(bound, 1.0))


def test_quadrilateral_diagonal_dominance(rng):
    # in convex position the diagonals outweigh both pairs of opposite sides
    for spec in all_norms():
        done = 0
        while done < 200:
            quad = rng.uniform(-5, 5, size=(4, 2))
            hull = convex_hull(quad)
            if len(hull.vertices) != 4:
                continue
            a, b, c, d = (quad[i] for i in hull.vertices)
            done += 1
            diags = distance(spec, a, c) + distance(spec, b, d)
            s1 = distance(spec, a, b) + distance(spec, c, d)
            s2 = distance(spec, a, d) + distance(spec, b, c)
            assert diags >= max(s1, s2) - 1e-9 * max(diags, 1.0)


def test_furthest_point_lies_on_hull(rng):
    for spec in all_norms():
        for _ in range(20):
            pts = rng.uniform(-8, 8, size=(25, 2))
            hull = convex_hull(pts)
            q = rng.uniform(-8, 8, size=2)
            dists = norm_many(spec, pts - q)
            best = dists.max()
            winners = {i for i in range(len(pts)) if dists[i] >= best - 1e-12}
            assert winners & set(hull.vertices)
