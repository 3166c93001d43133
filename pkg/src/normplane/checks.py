"""One-shot invariant suite for a point set under a chosen norm.

Runs every structural property of the furthest-neighbor graph and the
maximum spanning tree as an executable check and reports pass/fail per
invariant; used by the command-line ``check`` command and by the
acceptance tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NormPlaneError
from .fng import (
    DEFAULT_TOL,
    FNGraph,
    PointSet,
    detect_ties,
    fng_from_table,
    order_components,
    pairwise_distances,
)
from .geometry import HullIndex, convex_hull, segments_properly_intersect
from .mxst import SpanningTree, mxst_bruteforce, mxst_mpsy
from .norms import NormSpec


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def run_checks(spec: NormSpec, S: PointSet, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    """Run the full invariant suite; one result per invariant."""
    results: list[CheckResult] = []
    table = pairwise_distances(spec, S)

    ties = detect_ties(table, tol)
    results.append(
        CheckResult(
            "distances-distinct",
            not ties,
            "" if not ties else f"{len(ties)} tied distance pairs",
        )
    )
    if ties or S.n < 3:
        skip = "skipped: ties present" if ties else "skipped: fewer than 3 points"
        names = [
            "fng-increasing-chains",
            "fng-nonleaves-on-boundary",
            "fng-spines-on-boundary",
            "fng-spines-properly-intersect",
            "fng-cluster-contiguity",
            "fng-cyclic-component-pattern",
            "fng-noncontiguous-maximum",
            "mxst-matches-bruteforce",
            "mxst-contains-fng",
            "mxst-edges-touch-boundary",
            "mxst-extra-edges-adjacent",
            "mxst-edge-counts",
        ]
        ok = S.n < 3 and not ties
        for name in names:
            results.append(CheckResult(name, ok, skip if not ok else "trivial for n < 3"))
        return results

    g = fng_from_table(table)
    hull = convex_hull(S.points, tol)

    results.append(_check_increasing_chains(g, table))
    results.append(_check_nonleaves_on_boundary(g, hull))
    results.append(_check_spines_on_boundary(g, hull))
    results.append(_check_spines_intersect(g, S, tol))
    results.append(_check_cluster_contiguity(g, hull))

    cycle_ok = True
    try:
        order_components(g, hull)
        results.append(CheckResult("fng-cyclic-component-pattern", True))
    except NormPlaneError as exc:
        cycle_ok = False
        results.append(CheckResult("fng-cyclic-component-pattern", False, str(exc)))

    if cycle_ok:
        results.append(_check_noncontiguous_maximum(g, table))
    else:
        results.append(
            CheckResult("fng-noncontiguous-maximum", False, "skipped: no component cycle")
        )

    try:
        tree, _ = mxst_mpsy(spec, S, tol)
    except NormPlaneError as exc:
        for name in (
            "mxst-matches-bruteforce",
            "mxst-contains-fng",
            "mxst-edges-touch-boundary",
            "mxst-extra-edges-adjacent",
            "mxst-edge-counts",
        ):
            results.append(CheckResult(name, False, f"tree construction failed: {exc}"))
        return results

    oracle = mxst_bruteforce(spec, S)
    results.append(
        CheckResult(
            "mxst-matches-bruteforce",
            tree.edge_set() == oracle.edge_set(),
            "" if tree.edge_set() == oracle.edge_set() else "edge sets differ",
        )
    )
    results.append(_check_contains_fng(g, tree))
    results.append(_check_edges_touch_boundary(tree, hull))
    results.append(_check_extra_edges_adjacent(g, tree))
    results.append(_check_edge_counts(g, tree, S.n))
    return results


def _check_increasing_chains(g: FNGraph, table: np.ndarray) -> CheckResult:
    n = len(g.fn)
    for start in range(n):
        cur, nxt = start, g.fn[start]
        for _ in range(n + 1):
            after = g.fn[nxt]
            if after == cur:  # entered the 2-cycle
                break
            if not table[cur, nxt] < table[nxt, after]:
                return CheckResult(
                    "fng-increasing-chains",
                    False,
                    f"chain from {start} not strictly increasing at {cur}->{nxt}->{after}",
                )
            cur, nxt = nxt, after
        else:
            return CheckResult(
                "fng-increasing-chains", False, f"chain from {start} found no spine"
            )
    return CheckResult("fng-increasing-chains", True)


def _check_nonleaves_on_boundary(g: FNGraph, hull: HullIndex) -> CheckResult:
    internal = sorted(set(g.fn) - hull.boundary)
    return CheckResult(
        "fng-nonleaves-on-boundary",
        not internal,
        "" if not internal else f"non-leaf vertices {internal} are interior",
    )


def _check_spines_on_boundary(g: FNGraph, hull: HullIndex) -> CheckResult:
    missing = [x for s in g.spines for x in s if x not in hull.boundary]
    return CheckResult(
        "fng-spines-on-boundary",
        not missing,
        "" if not missing else f"spine endpoints {missing} are interior",
    )


def _check_spines_intersect(g: FNGraph, S: PointSet, tol: float) -> CheckResult:
    spines = g.spines
    for a in range(len(spines)):
        for b in range(a + 1, len(spines)):
            s1 = (S.points[spines[a][0]], S.points[spines[a][1]])
            s2 = (S.points[spines[b][0]], S.points[spines[b][1]])
            if not segments_properly_intersect(s1, s2, tol):
                return CheckResult(
                    "fng-spines-properly-intersect",
                    False,
                    f"spines {spines[a]} and {spines[b]} do not cross",
                )
    return CheckResult("fng-spines-properly-intersect", True)


def _check_cluster_contiguity(g: FNGraph, hull: HullIndex) -> CheckResult:
    tour = hull.traversal()
    labels = [g.cluster_of[i] for i in tour]
    distinct = len(set(labels))
    runs = sum(1 for t in range(len(labels)) if labels[t] != labels[t - 1])
    if distinct == 1:
        return CheckResult("fng-cluster-contiguity", True)
    return CheckResult(
        "fng-cluster-contiguity",
        runs == distinct,
        "" if runs == distinct else f"{runs} runs for {distinct} clusters on the hull",
    )


def _check_noncontiguous_maximum(g: FNGraph, table: np.ndarray) -> CheckResult:
    """Max distance from one component to two others is attained between
    non-contiguous clusters: cyclic distance exactly two in the triple's
    six-cluster cycle (partner clusters sit three apart).  Vacuous for k < 3.
    """
    k = g.k
    if k < 3:
        return CheckResult("fng-noncontiguous-maximum", True, "vacuous: k < 3")
    cycle = g.component_cycle
    x = cycle[:k]
    xp = cycle[k:]
    members = g.cluster_members()
    comp_members = {ci: members[x[ci]] + members[xp[ci]] for ci in range(k)}
    comp_of_rep = {rep: g.component_of[rep] for rep in cycle}
    for a in range(k):
        for off_b in range(1, k - 1):
            for off_c in range(off_b + 1, k):
                b = (a + off_b) % k
                c = (a + off_c) % k
                triple = {
                    g.component_of[x[a]],
                    g.component_of[x[b]],
                    g.component_of[x[c]],
                }
                six = [rep for rep in cycle if comp_of_rep[rep] in triple]
                six_pos = {rep: t for t, rep in enumerate(six)}
                rows = comp_members[a]
                cols = comp_members[b] + comp_members[c]
                sub = table[np.ix_(rows, cols)]
                flat = int(np.argmax(sub))
                u = rows[flat // len(cols)]
                v = cols[flat % len(cols)]
                du = six_pos[g.cluster_of[u]]
                dv = six_pos[g.cluster_of[v]]
                if min((du - dv) % 6, (dv - du) % 6) != 2:
                    return CheckResult(
                        "fng-noncontiguous-maximum",
                        False,
                        f"max pair {(u, v)} for components {(a, b, c)} joins contiguous clusters",
                    )
    return CheckResult("fng-noncontiguous-maximum", True)


def _check_contains_fng(g: FNGraph, tree: SpanningTree) -> CheckResult:
    missing = g.undirected_edges() - tree.edge_set()
    return CheckResult(
        "mxst-contains-fng",
        not missing,
        "" if not missing else f"FNG edges {sorted(missing)} missing from the tree",
    )


def _check_edges_touch_boundary(tree: SpanningTree, hull: HullIndex) -> CheckResult:
    bad = [(i, j) for i, j, _ in tree.edges if i not in hull.boundary and j not in hull.boundary]
    return CheckResult(
        "mxst-edges-touch-boundary",
        not bad,
        "" if not bad else f"edges {bad} have both endpoints interior",
    )


def _check_extra_edges_adjacent(g: FNGraph, tree: SpanningTree) -> CheckResult:
    k = g.k
    if k == 1:
        return CheckResult("mxst-extra-edges-adjacent", True, "vacuous: single component")
    cycle = g.component_cycle
    comp_order = [g.component_of[rep] for rep in cycle[:k]]
    comp_pos = {comp: t for t, comp in enumerate(comp_order)}
    fng_edges = g.undirected_edges()
    for i, j, _ in tree.edges:
        if (i, j) in fng_edges:
            continue
        d = (comp_pos[g.component_of[i]] - comp_pos[g.component_of[j]]) % k
        if d not in (1, k - 1):
            return CheckResult(
                "mxst-extra-edges-adjacent",
                False,
                f"edge {(i, j)} joins non-adjacent components (cyclic offset {d})",
            )
    return CheckResult("mxst-extra-edges-adjacent", True)


def _check_edge_counts(g: FNGraph, tree: SpanningTree, n: int) -> CheckResult:
    k = g.k
    fng_edges = g.undirected_edges()
    extra = tree.edge_set() - fng_edges
    ok = len(fng_edges) == n - k and len(extra) == k - 1
    return CheckResult(
        "mxst-edge-counts",
        ok,
        "" if ok else f"|FNG| = {len(fng_edges)} (want {n - k}), |extra| = {len(extra)} (want {k - 1})",
    )
