"""Convex lattice polygons with exact integer arithmetic.

A polygon is stored as its vertex list in counter-clockwise order, starting
at the lexicographically smallest vertex, with no three consecutive vertices
collinear.  Points and segments are allowed; they are flagged through
``LatticePolygon.dim``.

All quantities here are integers.  Python integers do not overflow, so the
enumeration code can multiply coordinates freely.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from math import gcd
from operator import index
from typing import Callable, Iterable, NamedTuple, Sequence

from ._kernels import COEFF_BOUND, run_lattice_width_kernel
from .errors import DegeneratePolygon, NotUnimodular, ShapeError

__all__ = [
    "LatticePoint",
    "Direction",
    "LatticePolygon",
    "LatticeWidth",
    "ShapeParams",
    "is_primitive",
    "canonical_direction",
    "make_polygon",
    "support_value",
    "width",
    "lattice_width",
    "lattice_points",
    "interior_points",
    "count_interior_points",
    "count_boundary_points",
    "genus",
    "self_intersection",
    "apply_unimodular",
    "normalize_width",
    "shape_params",
    "is_d_simplex",
    "edge_lattice_length",
]


class LatticePoint(NamedTuple):
    z: int
    w: int


def is_primitive(x: int, y: int) -> bool:
    """``(|x|, |y|) = 1`` in the extended sense: (0, +-1) and (+-1, 0) count."""
    return gcd(x, y) == 1


_DirectionBase = namedtuple("Direction", "x y")


class Direction(_DirectionBase):
    """Primitive integer covector ``(x, y)``; evaluates as ``x*z + y*w``."""

    __slots__ = ()

    def __new__(cls, x, y):
        x, y = index(x), index(y)
        if not is_primitive(x, y):
            raise ValueError(f"({x}, {y}) is not a primitive direction")
        return super().__new__(cls, x, y)

    def __neg__(self):
        return Direction(-self.x, -self.y)


def canonical_direction(d) -> Direction:
    """Representative of the class {d, -d}: x > 0, or x == 0 and y > 0."""
    x, y = d
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    return Direction(x, y)


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull(points) -> tuple:
    pts = sorted(set((index(p[0]), index(p[1])) for p in points))
    if len(pts) <= 2:
        return tuple(LatticePoint(*p) for p in pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return tuple(LatticePoint(*p) for p in hull)


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of finitely many lattice points.

    Build instances with :func:`make_polygon`; the constructor trusts that
    ``vertices`` is already canonical.
    """

    vertices: tuple

    @property
    def dim(self) -> int:
        return min(len(self.vertices), 3) - 1

    @property
    def is_full_dimensional(self) -> bool:
        return len(self.vertices) >= 3

    @property
    def twice_area(self) -> int:
        v = self.vertices
        n = len(v)
        if n < 3:
            return 0
        return sum(v[i][0] * v[(i + 1) % n][1] - v[(i + 1) % n][0] * v[i][1] for i in range(n))

    def edges(self):
        """Edge vectors ``(start, end)`` in counter-clockwise order."""
        v = self.vertices
        n = len(v)
        if n == 1:
            return []
        if n == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % n]) for i in range(n)]

    def bounding_box(self):
        zs = [p[0] for p in self.vertices]
        ws = [p[1] for p in self.vertices]
        return min(zs), min(ws), max(zs), max(ws)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self):
        return "LatticePolygon(%s)" % ", ".join("(%d,%d)" % tuple(p) for p in self.vertices)


def make_polygon(points: Iterable) -> LatticePolygon:
    """Convex hull of ``points`` as a canonical counter-clockwise vertex list."""
    pts = list(points)
    if not pts:
        raise ValueError("a polygon needs at least one point")
    return LatticePolygon(_hull(pts))


def support_value(P: LatticePolygon, d) -> int:
    """``n(d)``: the smallest integer with ``P`` inside ``{d.x*z + d.y*w <= n}``."""
    x, y = d
    return max(x * z + y * w for z, w in P.vertices)


def width(P: LatticePolygon, d) -> int:
    x, y = d
    vals = [x * z + y * w for z, w in P.vertices]
    return max(vals) - min(vals)


class LatticeWidth(NamedTuple):
    """Lattice width ``q`` with its minimizing directions.

    ``witnesses`` holds one representative per +-pair, sorted.  For a single
    point every direction has width 0 and ``all_directions`` is set instead.
    """

    q: int
    witnesses: tuple
    all_directions: bool = False


def _argmin_convex(f: Callable[[int], int]) -> int:
    """Leftmost integer minimizer of a convex function tending to infinity."""

    def slope(k):
        return f(k + 1) - f(k)

    # slopes are non-decreasing: bracket the first non-negative one
    hi = 0
    while slope(hi) < 0:
        hi = 2 * hi + 1
    lo = -1
    while slope(lo) >= 0:
        lo *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if slope(mid) >= 0:
            hi = mid
        else:
            lo = mid
    return hi


def _minimizers_convex(f: Callable[[int], int]) -> list:
    """All integer minimizers (a contiguous plateau) of a convex function."""
    k = _argmin_convex(f)
    best = f(k)
    out = [k]
    j = k + 1
    while f(j) == best:
        out.append(j)
        j += 1
    return out


def lattice_width(P: LatticePolygon) -> LatticeWidth:
    """Minimum of ``width(P, d)`` over primitive directions, with all minimizers.

    Width is a norm on the plane for full-dimensional ``P``; after
    Lagrange-Gauss reduction under that norm the minimum is attained on a
    primitive combination of the reduced basis with coefficients of absolute
    value at most 2.  The reduction itself lives in the compiled kernel.
    """
    v = P.vertices
    if len(v) == 1:
        return LatticeWidth(0, (), True)
    if len(v) == 2:
        dz, dw = v[1][0] - v[0][0], v[1][1] - v[0][1]
        g = gcd(dz, dw)
        return LatticeWidth(0, (canonical_direction((-dw // g, dz // g)),))

    q, nwit, b1x, b1y, b2x, b2y = run_lattice_width_kernel(v)
    r = COEFF_BOUND
    found = set()
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            if gcd(a, b) != 1:
                continue
            d = (a * b1x + b * b2x, a * b1y + b * b2y)
            if width(P, d) == q:
                found.add(canonical_direction(d))
    assert len(found) == nwit, (P, q, nwit, found)
    return LatticeWidth(q, tuple(sorted(found)))


def _row_bounds(P: LatticePolygon, w: int, strict: bool):
    """Integer z-range of row ``w`` inside (or strictly inside) full-dimensional P."""
    lo, hi = None, None
    for (pz, pw), (qz, qw) in P.edges():
        dz, dw = qz - pz, qw - pw
        rhs = dz * (w - pw) + dw * pz
        # inside iff dw * z <= rhs (strict for interior)
        if dw > 0:
            b = _floor_div(rhs, dw) if not strict else _ceil_div(rhs, dw) - 1
            hi = b if hi is None else min(hi, b)
        elif dw < 0:
            # dividing by a negative flips the inequality: z >= rhs / dw
            b = _ceil_div(rhs, dw) if not strict else _floor_div(rhs, dw) + 1
            lo = b if lo is None else max(lo, b)
        else:
            s = dz * (w - pw)
            if s < 0 or (strict and s == 0):
                return 1, 0
    return lo, hi


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _segment_points(p, q):
    g = gcd(q[0] - p[0], q[1] - p[1])
    sz, sw = (q[0] - p[0]) // g, (q[1] - p[1]) // g
    return [LatticePoint(p[0] + k * sz, p[1] + k * sw) for k in range(g + 1)]


def lattice_points(P: LatticePolygon) -> list:
    """All lattice points of ``P`` sorted lexicographically."""
    v = P.vertices
    if len(v) == 1:
        return [v[0]]
    if len(v) == 2:
        return sorted(_segment_points(v[0], v[1]))
    return sorted(_scan(P, strict=False))


def interior_points(P: LatticePolygon) -> list:
    """Lattice points strictly inside ``P`` (empty for degenerate polygons)."""
    if not P.is_full_dimensional:
        return []
    return sorted(_scan(P, strict=True))


def _scan(P, strict):
    _, wmin, _, wmax = P.bounding_box()
    out = []
    for w in range(wmin, wmax + 1):
        lo, hi = _row_bounds(P, w, strict)
        if lo is None or hi is None:
            continue
        out.extend(LatticePoint(z, w) for z in range(lo, hi + 1))
    return out


def count_interior_points(P: LatticePolygon) -> int:
    """Row-by-row count of interior lattice points (no list is built)."""
    if not P.is_full_dimensional:
        return 0
    _, wmin, _, wmax = P.bounding_box()
    total = 0
    for w in range(wmin + 1, wmax):
        lo, hi = _row_bounds(P, w, True)
        if lo is not None and hi is not None and hi >= lo:
            total += hi - lo + 1
    return total


def count_boundary_points(P: LatticePolygon) -> int:
    v = P.vertices
    if len(v) == 1:
        return 1
    if len(v) == 2:
        return edge_lattice_length(P, 0) + 1
    return sum(edge_lattice_length(P, i) for i in range(len(v)))


def genus(P: LatticePolygon) -> int:
    """Number of interior lattice points: the genus of a curve with polygon ``P``."""
    return count_interior_points(P)


def self_intersection(P: LatticePolygon) -> int:
    """``C^2 = 2 * area(P)`` via the shoelace sum; 0 for degenerate polygons."""
    return P.twice_area


def _det2(M) -> int:
    (a, b), (c, d) = M
    return a * d - b * c


def apply_unimodular(P: LatticePolygon, M, t=(0, 0)) -> LatticePolygon:
    """Image of ``P`` under ``v -> M v + t``; ``M`` must have determinant +-1."""
    (a, b), (c, d) = M
    if _det2(M) not in (1, -1):
        raise NotUnimodular(f"det {_det2(M)} of {M} is not +-1")
    tz, tw = t
    return make_polygon((a * z + b * w + tz, c * z + d * w + tw) for z, w in P.vertices)


def _egcd(a: int, b: int):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        k = a // b
        a, b = b, a - k * b
        s0, s1 = s1, s0 - k * s1
        t0, t1 = t1, t0 - k * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _complete_row(d):
    """A row ``r`` with ``det([r, d]) = r.x*d.y - r.y*d.x = 1``."""
    x, y = d
    g, s, t = _egcd(y, -x)
    assert g == 1
    return (s, t)


def normalize_width(P: LatticePolygon):
    """Move a lattice-width direction to the vertical axis.

    Returns ``(P', M, t)`` with ``P' = M P + t``, ``width(P', (0, 1)) = q``,
    both minimum coordinates 0, and ``q' = width(P', (1, 0))`` as small as
    possible among such transforms.  Ties are broken by the lexicographically
    smallest vertex tuple.
    """
    if not P.is_full_dimensional:
        raise DegeneratePolygon("normalize_width needs a full-dimensional polygon")
    lw = lattice_width(P)
    best = None
    for d0 in lw.witnesses:
        for sd in (d0, (-d0[0], -d0[1])):
            r0 = _complete_row(sd)

            def first_row_width(k, r0=r0, sd=sd):
                return width(P, (r0[0] + k * sd[0], r0[1] + k * sd[1]))

            for k in _minimizers_convex(first_row_width):
                r = (r0[0] + k * sd[0], r0[1] + k * sd[1])
                qp = width(P, r)
                for s in (1, -1):
                    M = ((s * r[0], s * r[1]), (sd[0], sd[1]))
                    img = apply_unimodular(P, M)
                    zmin, wmin, _, _ = img.bounding_box()
                    t = (-zmin, -wmin)
                    img = apply_unimodular(img, ((1, 0), (0, 1)), t)
                    key = (qp, img.vertices)
                    if best is None or key < best[0]:
                        best = (key, img, M, t)
    _, img, M, t = best
    # t was applied after M, so the combined map is v -> M v + t
    return img, M, LatticePoint(*t)


@dataclass(frozen=True)
class ShapeParams:
    """Bounding-box shape of a normalized polygon.

    ``q`` is the box height, ``q_prime`` its width; ``a, b, c, e`` are the
    corner offsets.  ``formula_applies`` is true when the polygon equals the
    hull of its four anchor points ``(q'-a, q), (q', b), (c, 0), (0, q-e)``,
    in which case ``2*area = q*q' + (a+c-q')*(b+e-q)``.
    """

    q: int
    q_prime: int
    a: int
    b: int
    c: int
    e: int
    formula_applies: bool

    def formula(self) -> int:
        return self.q * self.q_prime + (self.a + self.c - self.q_prime) * (self.b + self.e - self.q)


def shape_params(P: LatticePolygon) -> ShapeParams:
    """Corner offsets of a polygon inscribed in its box ``[0, q'] x [0, q]``.

    Requires three or four vertices, each on the boundary of the bounding
    box, with the box's lower-left corner at the origin.
    """
    if not P.is_full_dimensional:
        raise ShapeError("shape_params needs a full-dimensional polygon")
    zmin, wmin, qp, q = P.bounding_box()
    if (zmin, wmin) != (0, 0):
        raise ShapeError("polygon is not normalized: bounding box must start at the origin")
    if len(P.vertices) not in (3, 4):
        raise ShapeError(f"expected 3 or 4 vertices, got {len(P.vertices)}")
    for z, w in P.vertices:
        if z not in (0, qp) and w not in (0, q):
            raise ShapeError(f"vertex ({z},{w}) is not on the bounding box")

    pts = lattice_points(P)
    top = [z for z, w in pts if w == q]
    right = [w for z, w in pts if z == qp]
    bottom = [z for z, w in pts if w == 0]
    left = [w for z, w in pts if z == 0]

    # the first choice of each pair is the primary definition; the second
    # covers sides that run into a box corner
    a_opts = (qp - max(top), qp - min(top))
    b_opts = (min(right), max(right))
    c_opts = (min(bottom), max(bottom))
    e_opts = (q - max(left), q - min(left))
    target = set(P.vertices)
    for a in dict.fromkeys(a_opts):
        for b in dict.fromkeys(b_opts):
            for c in dict.fromkeys(c_opts):
                for e in dict.fromkeys(e_opts):
                    anchors = [(qp - a, q), (qp, b), (c, 0), (0, q - e)]
                    if set(make_polygon(anchors).vertices) == target:
                        return ShapeParams(q, qp, a, b, c, e, True)
    return ShapeParams(q, qp, a_opts[0], b_opts[0], c_opts[0], e_opts[0], False)


def edge_lattice_length(P: LatticePolygon, i: int) -> int:
    """Lattice length ``gcd(|dz|, |dw|)`` of edge ``i`` (from vertex i to i+1)."""
    edges = P.edges()
    if not edges:
        raise IndexError("a single point has no edges")
    if not -len(edges) <= i < len(edges):
        raise IndexError(f"edge index {i} out of range for {len(edges)} edges")
    (pz, pw), (qz, qw) = edges[i]
    return gcd(qz - pz, qw - pw)


def is_d_simplex(P: LatticePolygon):
    """Return ``d`` if ``P`` is unimodularly equivalent to ``d`` times the standard simplex."""
    if len(P.vertices) != 3:
        return None
    lengths = {edge_lattice_length(P, i) for i in range(3)}
    if len(lengths) != 1:
        return None
    (d,) = lengths
    if P.twice_area != d * d:
        return None
    return d
