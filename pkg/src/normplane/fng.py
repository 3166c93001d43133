"""Furthest-neighbor graphs: out-maps, spines, clusters, cyclic component order.

With all pairwise distances distinct, every point has a unique furthest
neighbor; following that map, distances strictly increase until a 2-cycle
(a *spine*) is reached.  Each spine determines a component, split into two
clusters by the parity of the path length to the spine endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateInput,
    DuplicatePoints,
    FurthestTie,
    StructureViolation,
    TiesPresent,
)
from .geometry import HullIndex
from .norms import NormSpec, norm_many

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class PointSet:
    """Indexed planar points; duplicates and non-finite coordinates rejected."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise DegenerateInput(f"expected an (n, 2) array, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise DegenerateInput("point set contains non-finite coordinates")
        seen: dict[tuple[float, float], int] = {}
        for i, (x, y) in enumerate(pts):
            key = (float(x), float(y))
            if key in seen:
                raise DuplicatePoints(f"points {seen[key]} and {i} coincide")
            seen[key] = i
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)


def pairwise_distances(spec: NormSpec, S: PointSet) -> np.ndarray:
    """Full symmetric distance table (n x n, zero diagonal)."""
    pts = S.points
    diff = pts[:, None, :] - pts[None, :, :]
    d = norm_many(spec, diff)
    off = ~np.eye(len(pts), dtype=bool)
    if np.any(d[off] <= 0.0):
        raise DuplicatePoints("zero off-diagonal distance: duplicate points")
    return d


def detect_ties(table, tol: float = DEFAULT_TOL) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All unordered pairs of index pairs whose distances agree within tol.

    An empty result certifies the all-distances-distinct precondition the
    structure theory (and :func:`mxst.mxst_mpsy`) relies on.
    """
    t = np.asarray(table, dtype=float)
    n = t.shape[0]
    if n < 2:
        return []
    iu, ju = np.triu_indices(n, k=1)
    vals = t[iu, ju]
    order = np.argsort(vals, kind="stable")
    sv = vals[order]
    ties = []
    m = len(sv)
    for a in range(m):
        b = a + 1
        while b < m and sv[b] - sv[a] <= tol:
            pa = (int(iu[order[a]]), int(ju[order[a]]))
            pb = (int(iu[order[b]]), int(ju[order[b]]))
            ties.append((min(pa, pb), max(pa, pb)))
            b += 1
    ties.sort()
    return ties


def furthest_neighbor(spec: NormSpec, S: PointSet, i: int, tol: float = DEFAULT_TOL) -> int:
    """Index of the unique furthest point from point i (O(n) scan).

    This scan is the seam where a furthest-site Voronoi query structure
    could be substituted for sub-quadratic builds.
    """
    if S.n < 2:
        raise DegenerateInput("need at least two points")
    row = norm_many(spec, S.points - S.points[i])
    row[i] = -math.inf
    j = int(np.argmax(row))
    second = np.partition(row, -2)[-2]
    if row[j] - second <= tol:
        raise FurthestTie(f"furthest neighbor of point {i} is tied within {tol}")
    return j


@dataclass
class FNGraph:
    """Furthest-neighbor out-map plus its component/cluster decomposition.

    ``cluster_of[i]`` is the spine endpoint whose cluster contains i (the
    endpoint reachable from i by a directed path of even length);
    ``component_cycle`` is filled by :func:`order_components`.
    """

    fn: tuple[int, ...]
    spines: tuple[tuple[int, int], ...]
    component_of: tuple[int, ...]
    cluster_of: tuple[int, ...]
    component_cycle: tuple[int, ...] | None = field(default=None)

    @property
    def k(self) -> int:
        return len(self.spines)

    def partner(self, rep: int) -> int:
        for x, xp in self.spines:
            if rep == x:
                return xp
            if rep == xp:
                return x
        raise KeyError(f"{rep} is not a spine endpoint")

    def cluster_members(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, rep in enumerate(self.cluster_of):
            out.setdefault(rep, []).append(i)
        return out

    def undirected_edges(self) -> set[tuple[int, int]]:
        """FNG edges as undirected pairs; each spine collapses to one edge."""
        return {(min(i, f), max(i, f)) for i, f in enumerate(self.fn)}


def build_fng(spec: NormSpec, S: PointSet, tol: float = DEFAULT_TOL) -> FNGraph:
    """Construct the furthest-neighbor graph; distances must be tie-free."""
    table = pairwise_distances(spec, S)
    ties = detect_ties(table, tol)
    if ties:
        raise TiesPresent(f"{len(ties)} tied distance pairs at tol={tol:g}")
    return fng_from_table(table)


def fng_from_table(table: np.ndarray) -> FNGraph:
    """FNG decomposition from a (tie-free) distance table."""
    n = table.shape[0]
    if n < 2:
        raise DegenerateInput("need at least two points")
    masked = table.copy()
    np.fill_diagonal(masked, -math.inf)
    fn = masked.argmax(axis=1).astype(int)

    spines = []
    for i in range(n):
        j = fn[i]
        if fn[j] == i and i < j:
            spines.append((i, int(j)))
    spines.sort()

    partner = {}
    for x, xp in spines:
        partner[x] = xp
        partner[xp] = x

    cluster_of = [-1] * n
    for start in range(n):
        if cluster_of[start] != -1:
            continue
        chain = []
        cur = start
        while cluster_of[cur] == -1:
            if fn[fn[cur]] == cur:  # landed on a spine endpoint
                cluster_of[cur] = cur
                break
            chain.append(cur)
            cur = int(fn[cur])
        # walking back one edge flips the cluster to the partner endpoint
        for u in reversed(chain):
            cluster_of[u] = partner[cluster_of[int(fn[u])]]

    comp_of_rep = {}
    for si, (x, xp) in enumerate(spines):
        comp_of_rep[x] = si
        comp_of_rep[xp] = si
    component_of = tuple(comp_of_rep[rep] for rep in cluster_of)

    return FNGraph(
        fn=tuple(int(f) for f in fn),
        spines=tuple(spines),
        component_of=component_of,
        cluster_of=tuple(cluster_of),
    )


def order_components(g: FNGraph, hull: HullIndex) -> tuple[int, ...]:
    """Cluster representatives in cyclic order around the hull boundary.

    The 2k spine endpoints, sorted by hull rank, must read as
    x_1, ..., x_k, x'_1, ..., x'_k with each (x_i, x'_i) a spine; any other
    pattern signals numerical trouble or an undetected tie.  The resulting
    cycle is cached on ``g.component_cycle``.
    """
    reps = [x for s in g.spines for x in s]
    missing = [r for r in reps if r not in hull.boundary]
    if missing:
        raise StructureViolation(f"spine endpoints {missing} not on hull boundary")
    seq = sorted(reps, key=lambda r: hull.position[r])
    k = len(g.spines)
    spine_set = {frozenset(s) for s in g.spines}
    for t in range(k):
        if frozenset((seq[t], seq[t + k])) not in spine_set:
            raise StructureViolation(
                "spine endpoints do not alternate as x_1..x_k x'_1..x'_k around the hull"
            )
    cycle = tuple(seq)
    g.component_cycle = cycle
    return cycle
