"""Maximum spanning trees of complete norm-distance graphs.

`mxst_mpsy` runs the Monma-Paterson-Suri-Yao construction: take all
furthest-neighbor edges, order the FNG components cyclically around the
hull, compute one candidate connecting edge per adjacent component pair
(restricting one endpoint to the hull boundary), and drop the shortest
candidate.  `mxst_bruteforce` is the independent descending-greedy oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import StructureViolation, TiesPresent
from .fng import (
    DEFAULT_TOL,
    PointSet,
    detect_ties,
    fng_from_table,
    order_components,
    pairwise_distances,
)
from .geometry import convex_hull
from .norms import NormSpec


@dataclass(frozen=True)
class SpanningTree:
    """n-1 weighted undirected edges (i < j), plus the total weight."""

    edges: tuple[tuple[int, int, float], ...]
    total_weight: float

    def edge_set(self) -> set[tuple[int, int]]:
        return {(i, j) for i, j, _ in self.edges}


@dataclass(frozen=True)
class CandidateEdge:
    i: int
    j: int
    weight: float


@dataclass(frozen=True)
class StepFourEntry:
    """The four boundary-restricted maxima for one adjacent component pair."""

    components: tuple[int, int]  # (previous, current) component ids
    candidates: tuple[CandidateEdge, ...]
    selected: CandidateEdge


@dataclass(frozen=True)
class ConnectingEdgeReport:
    entries: tuple[StepFourEntry, ...]
    discarded: int | None  # index into entries of the dropped (smallest) edge


def _empty_report() -> ConnectingEdgeReport:
    return ConnectingEdgeReport(entries=(), discarded=None)


def mxst_mpsy(
    spec: NormSpec, S: PointSet, tol: float = DEFAULT_TOL
) -> tuple[SpanningTree, ConnectingEdgeReport]:
    """Maximum spanning tree via the furthest-neighbor-graph construction.

    Requires all pairwise distances distinct within tol (TiesPresent
    otherwise).  Returns the tree and the per-component-pair report of
    connecting-edge candidates.
    """
    n = S.n
    if n <= 1:
        return SpanningTree(edges=(), total_weight=0.0), _empty_report()
    table = pairwise_distances(spec, S)
    if n == 2:
        w = float(table[0, 1])
        return SpanningTree(edges=((0, 1, w),), total_weight=w), _empty_report()

    ties = detect_ties(table, tol)
    if ties:
        raise TiesPresent(f"{len(ties)} tied distance pairs at tol={tol:g}")

    g = fng_from_table(table)
    hull = convex_hull(S.points, tol)
    cycle = order_components(g, hull)
    k = g.k

    edge_set = g.undirected_edges()
    entries: list[StepFourEntry] = []
    discarded: int | None = None

    if k > 1:
        members = g.cluster_members()
        boundary_members = {
            rep: [i for i in pts if i in hull.boundary] for rep, pts in members.items()
        }
        x = cycle[:k]
        xp = cycle[k:]

        def pairing_max(ca: int, cb: int) -> CandidateEdge:
            # max over the pairing with either endpoint taking the
            # boundary-restricted role; the connecting edge has at least
            # one endpoint on the hull, so nothing is missed
            lhs = _max_pair(table, members[ca], boundary_members[cb])
            rhs = _max_pair(table, members[cb], boundary_members[ca])
            return lhs if lhs.weight >= rhs.weight else rhs

        # One candidate edge per cyclically adjacent component pair, scanning
        # all four cross-cluster pairings.  The cyclic labeling x_1..x_k
        # x'_1..x'_k is only unique up to rotation and rotations move which
        # pairings sit at the wrap of the pattern, so restricting each scan
        # to the two mixed pairings is not labeling-safe; the component-level
        # adjacency is, and the four pairings cover every cross pair.
        for i in range(k):
            prev = (i - 1) % k
            cands = (
                pairing_max(x[i], xp[prev]),
                pairing_max(x[prev], xp[i]),
                pairing_max(x[i], x[prev]),
                pairing_max(xp[i], xp[prev]),
            )
            selected = max(cands, key=lambda c: c.weight)
            entries.append(
                StepFourEntry(
                    components=(g.component_of[x[prev]], g.component_of[x[i]]),
                    candidates=cands,
                    selected=selected,
                )
            )
        discarded = int(np.argmin([e.selected.weight for e in entries]))
        for idx, entry in enumerate(entries):
            if idx != discarded:
                edge_set.add((entry.selected.i, entry.selected.j))

    edges = tuple(
        (i, j, float(table[i, j])) for i, j in sorted(edge_set)
    )
    tree = SpanningTree(edges=edges, total_weight=float(sum(w for _, _, w in edges)))
    if not validate_tree(tree, n):
        raise StructureViolation("connecting edges did not produce a spanning tree")
    return tree, ConnectingEdgeReport(entries=tuple(entries), discarded=discarded)


def _max_pair(table: np.ndarray, rows: list[int], cols: list[int]) -> CandidateEdge:
    sub = table[np.ix_(rows, cols)]
    flat = int(np.argmax(sub))
    u = rows[flat // len(cols)]
    v = cols[flat % len(cols)]
    return CandidateEdge(i=min(u, v), j=max(u, v), weight=float(table[u, v]))


def mxst_bruteforce(spec: NormSpec, S: PointSet) -> SpanningTree:
    """Descending-greedy (maximum-Kruskal) oracle over all n(n-1)/2 edges.

    Ties at equal weight are broken lexicographically by (i, j), which makes
    the result deterministic even for tied inputs.
    """
    n = S.n
    if n <= 1:
        return SpanningTree(edges=(), total_weight=0.0)
    table = pairwise_distances(spec, S)
    iu, ju = np.triu_indices(n, k=1)
    w = table[iu, ju]
    order = np.lexsort((ju, iu, -w))
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    edges = []
    for idx in order:
        i, j = int(iu[idx]), int(ju[idx])
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j, float(table[i, j])))
            if len(edges) == n - 1:
                break
    edges.sort()
    return SpanningTree(
        edges=tuple(edges), total_weight=float(sum(e[2] for e in edges))
    )


def validate_tree(t: SpanningTree, n: int) -> bool:
    """Connectivity + acyclicity + edge-count check via component merging."""
    if n <= 1:
        return len(t.edges) == 0
    if len(t.edges) != n - 1:
        return False
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j, _ in t.edges:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            return False
        ri, rj = find(i), find(j)
        if ri == rj:  # duplicate edge or cycle
            return False
        parent[ri] = rj
    return True
