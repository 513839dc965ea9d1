"""Smooth complete fans in the plane and divisors on their toric surfaces.

A divisor ``D = sum n_i D_i`` corresponds to the half-plane system
``x_i z + y_i w <= n_i``.  Rays are stored counter-clockwise starting from
the ray with the smallest angle to (1, 0); every index in this module refers
to that order.

Intersection numbers use the relations of a smooth complete fan:
``v_{i-1} + v_{i+1} = a_i v_i`` gives ``D_i^2 = -a_i``, adjacent rays meet
once, and other pairs do not meet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, cmp_to_key
from math import ceil, floor, gcd
from operator import index

import numpy as np

from .errors import (
    DegeneratePolygon,
    EmptyPolytope,
    NoFibrations,
    NonPrimitiveRay,
    NotComplete,
    NotCounterClockwise,
    NotNef,
    NotSmooth,
)
from .polygon import (
    Direction,
    LatticePolygon,
    _egcd,
    canonical_direction,
    make_polygon,
    support_value,
)

__all__ = [
    "Fan",
    "ToricDivisor",
    "FibrationFiber",
    "validate_fan",
    "smooth_refine",
    "polygon_of_divisor",
    "divisor_of_polygon",
    "ray_self_intersection",
    "intersection_with_ray",
    "intersection",
    "curve_ray_intersection",
    "width_via_fan",
    "widths_via_fan",
    "pr_star",
    "m_set",
    "toric_fibrations",
    "fiber_degree",
    "canonical_divisor",
    "adjunction_genus",
    "is_relatively_minimal",
    "relative_minimalize",
    "blow_down",
]


def _det(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _half(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = _det(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


_angle_key = cmp_to_key(_angle_cmp)


@dataclass(frozen=True)
class Fan:
    """Complete fan given by primitive rays in counter-clockwise order.

    Instances come from :func:`validate_fan` or :func:`smooth_refine`, which
    check the invariants; the constructor itself does not.
    """

    rays: tuple

    def __len__(self):
        return len(self.rays)

    def neighbours(self, i):
        n = len(self.rays)
        return self.rays[(i - 1) % n], self.rays[(i + 1) % n]

    @cached_property
    def self_intersections(self) -> tuple:
        return tuple(ray_self_intersection(self, i) for i in range(len(self.rays)))

    def index_of(self, ray) -> int:
        return self.rays.index(tuple(ray))

    def is_smooth(self) -> bool:
        n = len(self.rays)
        return all(_det(self.rays[i], self.rays[(i + 1) % n]) == 1 for i in range(n))


def _as_rays(rays) -> list:
    out = []
    for i, r in enumerate(rays):
        x, y = index(r[0]), index(r[1])
        if gcd(x, y) != 1:
            raise NonPrimitiveRay(f"ray {i} = ({x},{y}) is not primitive", i)
        out.append(Direction(x, y))
    return out


def _ccw_cycle(rays: list) -> list:
    """Rotate/reverse a cyclic angular ordering into canonical CCW order."""
    if len(set(rays)) != len(rays):
        dup = next(i for i, r in enumerate(rays) if rays.index(r) != i)
        raise NotCounterClockwise(f"ray {dup} = {tuple(rays[dup])} is repeated", dup)
    srt = sorted(rays, key=_angle_key)
    n = len(rays)
    start = rays.index(srt[0])
    fwd = [rays[(start + j) % n] for j in range(n)]
    if fwd == srt:
        return srt
    bwd = [rays[(start - j) % n] for j in range(n)]
    if bwd == srt:
        return srt
    bad = next(j for j in range(n) if fwd[j] != srt[j])
    raise NotCounterClockwise(
        "rays are not listed in a cyclic angular order (first mismatch at ray "
        f"{(start + bad) % n} = {tuple(fwd[bad])})",
        (start + bad) % n,
    )


def _check_complete(rays: list) -> None:
    n = len(rays)
    if n < 3:
        raise NotComplete(f"a complete fan needs at least 3 rays, got {n}", None)
    for i in range(n):
        if _det(rays[i], rays[(i + 1) % n]) <= 0:
            raise NotComplete(
                f"gap of at least pi between rays {tuple(rays[i])} and "
                f"{tuple(rays[(i + 1) % n])}",
                i,
            )


def validate_fan(rays) -> Fan:
    """Check primitivity, angular order, completeness and smoothness.

    Rays may be listed counter-clockwise or clockwise, starting anywhere;
    the result is in canonical counter-clockwise order.
    """
    rs = _ccw_cycle(_as_rays(rays))
    _check_complete(rs)
    n = len(rs)
    for i in range(n):
        d = _det(rs[i], rs[(i + 1) % n])
        if d != 1:
            raise NotSmooth(
                f"adjacent rays {tuple(rs[i])}, {tuple(rs[(i + 1) % n])} have determinant {d}",
                i,
            )
    return Fan(tuple(rs))


def _resolve_cone(v, w) -> list:
    """Rays inserted strictly between ``v`` and ``w`` by the minimal resolution."""
    out = []
    while _det(v, w) > 1:
        n = _det(v, w)
        # the u with det(v, u) = 1 form u0 + k v; det(u, w) = c + k n, and the
        # next ray of the resolution is the one with 1 <= det(u, w) < n
        _, s, t = _egcd(v[0], v[1])
        u0 = (-t, s)
        c = _det(u0, w)
        k = -((c - 1) // n)
        u = (u0[0] + k * v[0], u0[1] + k * v[1])
        assert _det(v, u) == 1 and 1 <= _det(u, w) < n
        out.append(Direction(*u))
        v = u
    return out


def smooth_refine(rays) -> Fan:
    """Minimal smooth refinement: resolve every cone with determinant > 1."""
    rs = _ccw_cycle(_as_rays(rays))
    _check_complete(rs)
    out = []
    n = len(rs)
    for i in range(n):
        out.append(rs[i])
        out.extend(_resolve_cone(rs[i], rs[(i + 1) % n]))
    out.sort(key=_angle_key)
    return Fan(tuple(out))


@dataclass(frozen=True)
class ToricDivisor:
    """``D = sum coeffs[i] * D_i`` on the toric surface of ``fan``."""

    fan: Fan
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(index(c) for c in self.coeffs))
        if len(self.coeffs) != len(self.fan.rays):
            raise ValueError(
                f"{len(self.coeffs)} coefficients for {len(self.fan.rays)} rays"
            )

    @cached_property
    def _corners(self) -> tuple:
        # vertex of the cone (v_i, v_{i+1}); integral because det = 1
        rays, n_ = self.fan.rays, self.coeffs
        n = len(rays)
        out = []
        for i in range(n):
            (x1, y1), (x2, y2) = rays[i], rays[(i + 1) % n]
            a, b = n_[i], n_[(i + 1) % n]
            out.append((a * y2 - b * y1, x1 * b - x2 * a))
        return tuple(out)

    @cached_property
    def is_nef(self) -> bool:
        """Every coefficient equals the support value of the polygon on its ray."""
        try:
            P = self.real_polygon
        except EmptyPolytope:
            return False
        for (x, y), n in zip(self.fan.rays, self.coeffs):
            if max(x * z + y * w for z, w in P) != n:
                return False
        return True

    @cached_property
    def real_polygon(self) -> tuple:
        """Vertices (as Fractions) of the real polygon ``{x_i z + y_i w <= n_i}``."""
        return _half_plane_polygon(self.fan.rays, self.coeffs)

    @cached_property
    def polygon(self) -> LatticePolygon:
        return polygon_of_divisor(self)

    def intersection_with_ray(self, i) -> int:
        return intersection_with_ray(self, i)


def _half_plane_polygon(rays, coeffs) -> tuple:
    cands = set()
    n = len(rays)
    for i in range(n):
        for j in range(i + 1, n):
            (x1, y1), (x2, y2) = rays[i], rays[j]
            d = x1 * y2 - x2 * y1
            if d == 0:
                continue
            a, b = coeffs[i], coeffs[j]
            z = Fraction(a * y2 - b * y1, d)
            w = Fraction(x1 * b - x2 * a, d)
            cands.add((z, w))
    pts = [
        p for p in cands if all(x * p[0] + y * p[1] <= c for (x, y), c in zip(rays, coeffs))
    ]
    if not pts:
        raise EmptyPolytope("the half-plane system is empty")
    return tuple(sorted(pts))


def polygon_of_divisor(D: ToricDivisor) -> LatticePolygon:
    """Lattice polygon of ``D``.

    For nef divisors on a smooth fan every vertex is a lattice point.  When
    the real polygon has non-integral vertices the hull of its lattice points
    is returned.  ``EmptyPolytope`` is raised when no lattice point satisfies
    the inequalities.
    """
    corners = D._corners
    rays, coeffs = D.fan.rays, D.coeffs
    if all(
        all(x * z + y * w <= c for (x, y), c in zip(rays, coeffs)) for z, w in corners
    ):
        return make_polygon(corners)
    real = D.real_polygon
    zlo, zhi = floor(min(p[0] for p in real)), ceil(max(p[0] for p in real))
    wlo, whi = floor(min(p[1] for p in real)), ceil(max(p[1] for p in real))
    pts = [
        (z, w)
        for z in range(zlo, zhi + 1)
        for w in range(wlo, whi + 1)
        if all(x * z + y * w <= c for (x, y), c in zip(rays, coeffs))
    ]
    if not pts:
        raise EmptyPolytope("the divisor has no global sections (no lattice points)")
    return make_polygon(pts)


def divisor_of_polygon(P: LatticePolygon) -> ToricDivisor:
    """Nef divisor with polygon ``P`` on the minimal smooth refinement of its normal fan."""
    if not P.is_full_dimensional:
        raise DegeneratePolygon("divisor_of_polygon needs a full-dimensional polygon")
    normals = []
    for (pz, pw), (qz, qw) in P.edges():
        dz, dw = qz - pz, qw - pw
        g = gcd(dz, dw)
        normals.append((dw // g, -dz // g))
    fan = smooth_refine(normals)
    D = ToricDivisor(fan, tuple(support_value(P, r) for r in fan.rays))
    # nef by construction
    D.__dict__["is_nef"] = True
    return D


def ray_self_intersection(F: Fan, i: int) -> int:
    """``D_i^2 = -a`` where ``v_{i-1} + v_{i+1} = a v_i``."""
    (px, py), (nx, ny) = F.neighbours(i)
    vx, vy = F.rays[i]
    sx, sy = px + nx, py + ny
    # v is primitive, so a = s / v is an integer whenever s is parallel to v
    if _det((sx, sy), (vx, vy)) != 0:
        raise NotSmooth(f"ray {i} does not satisfy the smooth neighbour relation", i)
    a = sx // vx if vx != 0 else sy // vy
    return -a


def intersection_with_ray(D: ToricDivisor, i: int) -> int:
    """``D . D_i = n_{i-1} + n_{i+1} + D_i^2 n_i`` (any divisor, nef or not)."""
    n = len(D.coeffs)
    return D.coeffs[(i - 1) % n] + D.coeffs[(i + 1) % n] + D.fan.self_intersections[i] * D.coeffs[i]


def intersection(D: ToricDivisor, E: ToricDivisor) -> int:
    """Intersection number of two divisors on the same fan."""
    if D.fan != E.fan:
        raise ValueError("divisors live on different fans")
    return sum(e * intersection_with_ray(D, i) for i, e in enumerate(E.coeffs))


def curve_ray_intersection(C: ToricDivisor, i: int) -> int:
    """``C . D_i`` for nef ``C``: lattice length of the face of the polygon on ray ``i``."""
    if not C.is_nef:
        raise NotNef("curve_ray_intersection needs a nef divisor")
    P = C.polygon
    x, y = C.fan.rays[i]
    n = C.coeffs[i]
    face = [p for p in P.vertices if x * p[0] + y * p[1] == n]
    if len(face) < 2:
        return 0
    (pz, pw), (qz, qw) = face
    return gcd(qz - pz, qw - pw)


def m_set(F: Fan, u: int, v: int) -> list:
    """Indices ``j`` with ``u*y_j - v*x_j < 0``."""
    if (u, v) == (0, 0):
        raise ValueError("(u, v) must be nonzero")
    return [j for j, (x, y) in enumerate(F.rays) if u * y - v * x < 0]


def width_via_fan(C: ToricDivisor, d) -> int:
    """Width of the polygon of nef ``C`` along ``d`` from intersection numbers alone."""
    if not C.is_nef:
        raise NotNef("width_via_fan needs a nef divisor")
    x, y = d
    M = m_set(C.fan, x, y)
    assert M, "a complete fan always has rays on both sides of a line"
    return sum(
        (C.fan.rays[j][0] * y - C.fan.rays[j][1] * x) * intersection_with_ray(C, j) for j in M
    )


def widths_via_fan(C: ToricDivisor, dirs) -> np.ndarray:
    """:func:`width_via_fan` for many directions at once (an ``(m, 2)`` array).

    Ray ``j`` lies in ``M(x, y)`` exactly when its cross term
    ``x_j y - y_j x`` is positive, so the sum runs over the positive part.
    Uses int64, so directions and coefficients must stay well below 2^31.
    """
    if not C.is_nef:
        raise NotNef("widths_via_fan needs a nef divisor")
    D = np.asarray(dirs, dtype=np.int64).reshape(-1, 2)
    R = np.asarray(C.fan.rays, dtype=np.int64)
    cd = np.array([intersection_with_ray(C, j) for j in range(len(R))], dtype=np.int64)
    cross = np.outer(D[:, 1], R[:, 0]) - np.outer(D[:, 0], R[:, 1])
    return np.maximum(cross, 0) @ cd


def pr_star(F: Fan) -> list:
    """Rays whose negatives are rays too, one canonical representative per pair."""
    rays = set(F.rays)
    return sorted({canonical_direction(r) for r in rays if (-r[0], -r[1]) in rays})


@dataclass(frozen=True)
class FibrationFiber:
    """Fiber ``sum coeffs[j] D_j`` of the toric fibration with the given axis."""

    axis: Direction
    coeffs: tuple

    def as_divisor(self, fan: Fan) -> ToricDivisor:
        return ToricDivisor(fan, self.coeffs)


def toric_fibrations(F: Fan) -> list:
    """One fiber per axis in :func:`pr_star`.

    Writing ``v_j = alpha_j v_i + beta_j v_{i+1}`` with ``det(v_i, v_{i+1}) = 1``
    gives ``|beta_j| = |det(v_i, v_j)|``; the fiber collects these
    multiplicities over the rays on one side of the axis.
    """
    axes = pr_star(F)
    if not axes:
        raise NoFibrations("the fan has no opposite rays (projective plane)")
    out = []
    for ax in axes:
        M = set(m_set(F, ax[0], ax[1]))
        coeffs = tuple(abs(_det(ax, r)) if j in M else 0 for j, r in enumerate(F.rays))
        out.append(FibrationFiber(ax, coeffs))
    return out


def fiber_degree(fiber: FibrationFiber, C: ToricDivisor) -> int:
    """Degree of the fibration restricted to ``C``: ``F . C``."""
    return sum(c * intersection_with_ray(C, j) for j, c in enumerate(fiber.coeffs) if c)


def canonical_divisor(F: Fan) -> ToricDivisor:
    return ToricDivisor(F, (-1,) * len(F.rays))


def adjunction_genus(C: ToricDivisor) -> int:
    """``1 + (C.C + C.K) / 2``."""
    CC = intersection(C, C)
    CK = -sum(intersection_with_ray(C, i) for i in range(len(C.coeffs)))
    twice = 2 + CC + CK
    assert twice % 2 == 0
    return twice // 2


def is_relatively_minimal(C: ToricDivisor) -> bool:
    """No (-1)-ray meets ``C`` fewer than two times."""
    if not C.is_nef:
        raise NotNef("relative minimality is defined for nef curves")
    si = C.fan.self_intersections
    return all(intersection_with_ray(C, i) >= 2 for i in range(len(si)) if si[i] == -1)


def blow_down(C: ToricDivisor, i: int) -> ToricDivisor:
    """Contract the (-1)-ray ``i``; the other coefficients are kept.

    The image curve has the same genus.  If ``C . D_i = 1`` its polygon gains
    the unit corner cut off by the removed edge, so ``C^2`` grows by one; if
    ``C . D_i = 0`` the polygon is unchanged.
    """
    if C.fan.self_intersections[i] != -1:
        raise ValueError(f"ray {i} is not a (-1)-curve")
    rays = C.fan.rays[:i] + C.fan.rays[i + 1:]
    coeffs = C.coeffs[:i] + C.coeffs[i + 1:]
    return ToricDivisor(Fan(rays), coeffs)


def relative_minimalize(C: ToricDivisor) -> ToricDivisor:
    """Blow down (-1)-rays meeting ``C`` at most once until none is left.

    The lowest such index is contracted first, so the result is deterministic.
    """
    if not C.is_nef:
        raise NotNef("relative_minimalize needs a nef divisor")
    while True:
        si = C.fan.self_intersections
        for i in range(len(si)):
            if si[i] == -1 and intersection_with_ray(C, i) <= 1:
                C = blow_down(C, i)
                break
        else:
            return C
