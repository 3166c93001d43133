"""Planar norms and the distance/orthogonality/bisector primitives built on them.

Three families are supported: the Euclidean norm, Lp norms for 1 <= p <= inf,
and polygonal gauges of centrally symmetric convex polygons (Minkowski
functionals).  All evaluation routines accept single vectors or arrays of
vectors (vectorized over leading axes).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateInput,
    InvalidNorm,
    ParseError,
    StructureViolation,
    ZeroVector,
)

DEFAULT_TOL = 1e-9

INF = math.inf


def vec(x: float, y: float) -> np.ndarray:
    """Build a validated 2-vector (finite coordinates)."""
    v = np.array([x, y], dtype=float)
    if not np.all(np.isfinite(v)):
        raise DegenerateInput(f"non-finite coordinates: ({x}, {y})")
    return v


def _as_vec(v) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if a.shape != (2,):
        raise DegenerateInput(f"expected a 2-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DegenerateInput("non-finite coordinates")
    return a


@dataclass(frozen=True)
class NormSpec:
    """A planar norm: ``euclidean``, ``lp`` (with parameter p) or ``polygonal``.

    Instances are built through :func:`euclidean`, :func:`lp`, :func:`l1`,
    :func:`linf`, :func:`polygonal` or :func:`parse_norm`; those factories
    validate the invariants and raise :class:`InvalidNorm` on violation.
    """

    kind: str
    p: float | None = None
    vertices: tuple[tuple[float, float], ...] | None = None

    def label(self) -> str:
        if self.kind == "euclidean":
            return "euclidean"
        if self.kind == "lp":
            if self.p == INF:
                return "linf"
            if self.p == 1.0:
                return "l1"
            return f"lp:{self.p:g}"
        return f"polygon[{len(self.vertices)}]"


def euclidean() -> NormSpec:
    return NormSpec(kind="euclidean")


def lp(p: float) -> NormSpec:
    """Lp norm; p = inf is the max norm. Requires p >= 1."""
    if not (p >= 1.0):
        raise InvalidNorm(f"Lp norm requires p >= 1, got {p}")
    return NormSpec(kind="lp", p=float(p))


def l1() -> NormSpec:
    return lp(1.0)


def linf() -> NormSpec:
    return lp(INF)


def polygonal(vertices, tol: float = DEFAULT_TOL) -> NormSpec:
    """Gauge of a convex, centrally symmetric polygon given CCW.

    The origin must be strictly interior; for every vertex v the point -v
    must also be a vertex (up to ``tol`` relative to the polygon scale).
    """
    arr = np.asarray(vertices, dtype=float)
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 4:
        raise InvalidNorm("polygonal norm needs at least 4 vertices as an (m, 2) array")
    if not np.all(np.isfinite(arr)):
        raise InvalidNorm("polygonal norm has non-finite vertices")
    if arr.shape[0] % 2 != 0:
        raise InvalidNorm("centrally symmetric polygon must have an even vertex count")
    scale = float(np.abs(arr).max())
    m = arr.shape[0]
    # strict CCW convexity, including the wrap-around corners
    for i in range(m):
        a, b, c = arr[i], arr[(i + 1) % m], arr[(i + 2) % m]
        cross = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])
        if cross <= tol * scale * scale:
            raise InvalidNorm("polygon vertices must be strictly convex in CCW order")
    # central symmetry: antipode of vertex i must be vertex i + m/2
    anti = arr + np.roll(arr, m // 2, axis=0)
    if np.abs(anti).max() > tol * max(scale, 1.0):
        raise InvalidNorm("polygon is not centrally symmetric")
    # origin strictly interior <=> every edge line has positive offset
    if np.any(_edge_functional_offsets(arr) <= tol * scale):
        raise InvalidNorm("origin is not strictly interior to the polygon")
    return NormSpec(kind="polygonal", vertices=tuple(map(tuple, arr)))


def _edge_functional_offsets(arr: np.ndarray) -> np.ndarray:
    nxt = np.roll(arr, -1, axis=0)
    edge = nxt - arr
    normals = np.stack([edge[:, 1], -edge[:, 0]], axis=1)  # outward for CCW
    return np.einsum("ij,ij->i", normals, arr)


def _poly_functionals(spec: NormSpec) -> np.ndarray:
    """Linear functionals f_i with gauge(v) = max_i <f_i, v>.

    Each f_i is the outward edge normal scaled so the edge line sits at
    level 1; the maximizing edge is exactly the one the ray from the origin
    through v crosses, so this is the ray/edge length ratio evaluated per
    edge without the vertex-crossing special cases of an explicit walk.
    """
    arr = np.asarray(spec.vertices, dtype=float)
    nxt = np.roll(arr, -1, axis=0)
    edge = nxt - arr
    normals = np.stack([edge[:, 1], -edge[:, 0]], axis=1)
    offsets = np.einsum("ij,ij->i", normals, arr)
    return normals / offsets[:, None]


def norm_many(spec: NormSpec, arr) -> np.ndarray:
    """Evaluate the norm over an array of vectors (..., 2) -> (...)."""
    a = np.asarray(arr, dtype=float)
    if a.shape[-1] != 2:
        raise DegenerateInput(f"expected trailing axis of size 2, got shape {a.shape}")
    if spec.kind == "euclidean":
        return np.hypot(a[..., 0], a[..., 1])
    if spec.kind == "lp":
        return _lp_many(spec.p, a)
    if spec.kind == "polygonal":
        funcs = _poly_functionals(spec)
        flat = a.reshape(-1, 2)
        out = flat @ funcs[0]
        for f in funcs[1:]:
            np.maximum(out, flat @ f, out=out)
        return out.reshape(a.shape[:-1])
    raise InvalidNorm(f"unknown norm kind {spec.kind!r}")


def _lp_many(p: float, a: np.ndarray) -> np.ndarray:
    ax = np.abs(a)
    if p == INF:
        return ax.max(axis=-1)
    if p == 1.0:
        return ax.sum(axis=-1)
    if p == 2.0:
        return np.hypot(ax[..., 0], ax[..., 1])
    # scale by the max coordinate so large p cannot overflow
    m = ax.max(axis=-1)
    safe = np.where(m > 0.0, m, 1.0)
    scaled = ax / safe[..., None]
    val = safe * (scaled[..., 0] ** p + scaled[..., 1] ** p) ** (1.0 / p)
    return np.where(m > 0.0, val, 0.0)


def evaluate_norm(spec: NormSpec, v) -> float:
    """Norm of a single vector."""
    return float(norm_many(spec, _as_vec(v)))


def distance(spec: NormSpec, p, q) -> float:
    """Distance ||p - q|| under the given norm."""
    return float(norm_many(spec, _as_vec(p) - _as_vec(q)))


def is_strictly_convex(spec: NormSpec) -> bool:
    """True iff the unit sphere contains no line segment.

    Euclidean and Lp with 1 < p < inf qualify; L1, Linf and polygonal
    gauges do not.
    """
    if spec.kind == "euclidean":
        return True
    if spec.kind == "lp":
        return 1.0 < spec.p < INF
    return False


def birkhoff_orthogonal(spec: NormSpec, x, y, tol: float = DEFAULT_TOL) -> bool:
    """Test Birkhoff orthogonality: ||x|| <= ||x + t*y|| for every real t.

    The section t -> ||x + t*y|| is convex, so its minimum over the
    bracketing interval |t| <= 4*||x||/||y|| (outside it the value already
    exceeds ||x||) is found by ternary search.
    """
    xv, yv = _as_vec(x), _as_vec(y)
    nx = evaluate_norm(spec, xv)
    ny = evaluate_norm(spec, yv)
    if nx == 0.0 or ny == 0.0:
        raise ZeroVector("birkhoff_orthogonal requires nonzero vectors")
    lo, hi = -4.0 * nx / ny, 4.0 * nx / ny

    def g(t: float) -> float:
        return float(norm_many(spec, xv + t * yv))

    for _ in range(200):
        if hi - lo <= 1e-13 * (1.0 + abs(hi) + abs(lo)):
            break
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if g(m1) < g(m2):
            hi = m2
        else:
            lo = m1
    best = min(g(lo), g(0.5 * (lo + hi)), g(hi))
    return best >= nx - tol


@dataclass(frozen=True)
class BisectorSample:
    """Ordered points sampled on a curve equidistant from two sites."""

    points: np.ndarray  # (count, 2)
    endpoints: tuple[np.ndarray, np.ndarray]
    residuals: np.ndarray  # per-point | ||s-p|| - ||s-q|| |


def bisector_point(
    spec: NormSpec,
    p,
    q,
    line_origin,
    line_dir,
    tol: float = DEFAULT_TOL,
    t_range: float | None = None,
):
    """Point on the line where ||r - p|| = ||r - q||, or None.

    Scans f(t) = ||r(t)-p|| - ||r(t)-q|| with r(t) = origin + t*dir over
    |t| <= t_range for a sign change (or a grid point already within tol,
    which covers fat bisectors of non-strictly-convex norms), then bisects.
    Returns None when no crossing is found on the searched interval.
    """
    pv, qv = _as_vec(p), _as_vec(q)
    if np.array_equal(pv, qv):
        raise DegenerateInput("bisector of identical points")
    origin = _as_vec(line_origin)
    d = _as_vec(line_dir)
    dlen = math.hypot(d[0], d[1])
    if dlen == 0.0:
        raise ZeroVector("line direction must be nonzero")
    if t_range is None:
        mid = 0.5 * (pv + qv)
        reach = math.hypot(*(origin - mid)) + math.hypot(*(qv - pv))
        t_range = 4.0 * (1.0 + reach / dlen)

    def f_many(ts: np.ndarray) -> np.ndarray:
        pts = origin[None, :] + ts[:, None] * d[None, :]
        return norm_many(spec, pts - pv) - norm_many(spec, pts - qv)

    ts = np.linspace(-t_range, t_range, 257)
    vals = f_many(ts)

    bracket = None
    for i in range(len(ts) - 1):
        if abs(vals[i]) <= tol:
            return origin + ts[i] * d
        if vals[i] * vals[i + 1] < 0.0:
            bracket = (ts[i], ts[i + 1], vals[i])
            break
    if bracket is None:
        if abs(vals[-1]) <= tol:
            return origin + ts[-1] * d
        return None

    a, b, fa = bracket
    for _ in range(200):
        m = 0.5 * (a + b)
        fm = float(f_many(np.array([m]))[0])
        if abs(fm) <= tol:
            return origin + m * d
        if (fm < 0.0) == (fa < 0.0):
            a, fa = m, fm
        else:
            b = m
    return None


def sample_bisector(
    spec: NormSpec,
    p,
    q,
    count: int,
    extent: float,
    tol: float = DEFAULT_TOL,
) -> BisectorSample:
    """Sample the bisector of p and q at ``count`` transversal offsets.

    Offsets spread over [-extent, extent] along the Euclidean perpendicular
    of q - p through the midpoint; each sample is a root of
    f(t) = ||r(t)-p|| - ||r(t)-q|| on the line with direction q - p, where f
    runs from negative (far p-side) to positive (far q-side).
    """
    pv, qv = _as_vec(p), _as_vec(q)
    if np.array_equal(pv, qv):
        raise DegenerateInput("bisector of identical points")
    if count < 1:
        raise DegenerateInput("count must be >= 1")
    if not extent > 0.0:
        raise DegenerateInput("extent must be positive")
    dvec = qv - pv
    perp = np.array([-dvec[1], dvec[0]]) / math.hypot(dvec[0], dvec[1])
    mid = 0.5 * (pv + qv)
    offsets = np.linspace(-extent, extent, count)
    points = np.empty((count, 2))
    for i, s in enumerate(offsets):
        base = mid + s * perp
        pt = bisector_point(spec, pv, qv, base, dvec, tol)
        if pt is None:
            # sign change is guaranteed; retry wider before giving up
            reach = abs(s) + math.hypot(dvec[0], dvec[1])
            pt = bisector_point(spec, pv, qv, base, dvec, tol,
                                t_range=16.0 * (1.0 + reach))
        if pt is None:
            raise StructureViolation(
                f"no bisector crossing found at offset {s}; widen the search range"
            )
        points[i] = pt
    residuals = np.abs(norm_many(spec, points - pv) - norm_many(spec, points - qv))
    return BisectorSample(points=points, endpoints=(pv, qv), residuals=residuals)


def parse_norm(text: str) -> NormSpec:
    """Parse the shared norm grammar.

    ``euclidean`` | ``l1`` | ``linf`` | ``lp:<p>`` | ``polygon:<path>``
    where the file at <path> holds a JSON array of [x, y] vertex pairs.
    """
    t = text.strip()
    if t == "euclidean":
        return euclidean()
    if t == "l1":
        return l1()
    if t == "linf":
        return linf()
    if t.startswith("lp:"):
        body = t[3:]
        if body in ("inf", "infinity"):
            return linf()
        try:
            return lp(float(body))
        except ValueError as exc:
            raise ParseError(f"bad Lp parameter {body!r}") from exc
    if t.startswith("polygon:"):
        path = t[len("polygon:"):]
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ParseError(f"cannot read polygon file {path!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"polygon file {path!r} is not valid JSON") from exc
        return polygonal(data)
    raise ParseError(f"unrecognized norm {text!r}")
