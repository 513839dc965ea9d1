"""Polygon enumeration and the falsification campaigns built on it.

Polygons are generated by a depth-first search over convex vertex chains.
The chain starts at the lowest (then leftmost) vertex ``s``, which sits on
the line ``w = 0``; later vertices are taken in strictly increasing angle
around ``s`` with a strict left turn at every step.  A chain is emitted when
it closes up convexly and touches ``z = 0``, so every polygon in ``[0, N]^2``
is produced exactly once up to translation.
"""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from ._kernels import MODE_EMIT, MODE_WIDTH_ORACLE, candidates, oracle_directions, polygon_search
from .errors import CapExceeded, NoFibrations
from .fan import (
    adjunction_genus,
    divisor_of_polygon,
    fiber_degree,
    intersection,
    is_relatively_minimal,
    polygon_of_divisor,
    toric_fibrations,
    width_via_fan,
    widths_via_fan,
)
from .normal_form import normal_form
from .polygon import (
    LatticePolygon,
    count_boundary_points,
    genus,
    is_d_simplex,
    lattice_width,
    make_polygon,
    self_intersection,
    width,
)

log = logging.getLogger(__name__)

__all__ = [
    "PolygonStream",
    "CampaignReport",
    "enumerate_polygons",
    "brute_force_lattice_width",
    "random_polygon",
    "max_coord_cap",
    "campaign_selfint_bounds",
    "campaign_q4_census",
    "campaign_gonality_consistency",
    "campaign_width_oracle",
    "campaign_exceptional_census",
    "min_genus",
    "fixed_width",
    "relatively_minimal",
    "non_simplex",
    "max_selfint",
]

DEFAULT_CAP = 8


def max_coord_cap() -> int:
    v = os.environ.get("LATTICECURVE_MAX_COORD")
    return int(v) if v else DEFAULT_CAP


# filters ---------------------------------------------------------------


def min_genus(g: int) -> Callable:
    return lambda P: genus(P) >= g


def fixed_width(q: int) -> Callable:
    return lambda P: lattice_width(P).q == q


def non_simplex(P: LatticePolygon) -> bool:
    return is_d_simplex(P) is None


def relatively_minimal(P: LatticePolygon) -> bool:
    return is_relatively_minimal(divisor_of_polygon(P))


def max_selfint(c: int) -> Callable:
    return lambda P: self_intersection(P) <= c


@dataclass(frozen=True)
class PolygonStream:
    """What to enumerate.

    ``dedup`` is ``"translation"`` (every translation class once) or
    ``"unimodular"`` (first representative of each unimodular class in
    stream order).  Filters are predicates on full-dimensional polygons and
    are applied in the order given, so cheap ones should come first.
    ``max_self_intersection`` bounds ``C^2 = 2 area`` inside the search
    itself, which prunes far more than a filter could.
    """

    max_coord: int
    dedup: str = "translation"
    filters: tuple = ()
    full_dimensional: bool = True
    max_self_intersection: int | None = None

    def __post_init__(self):
        if self.dedup not in ("translation", "unimodular"):
            raise ValueError(f"dedup must be 'translation' or 'unimodular', got {self.dedup!r}")
        object.__setattr__(self, "filters", tuple(self.filters))


def _raw_polygons(N: int, max_twice_area: int = -1) -> Iterator[tuple]:
    """Vertex tuples (CCW from the lowest-leftmost vertex) of every polygon
    with at least three vertices in ``[0, N]^2`` touching ``w = 0`` and ``z = 0``."""
    empty = np.zeros(0, np.int64)
    for sz in range(N + 1):
        cz, cw = candidates(N, sz)
        coords, offsets, _, _ = polygon_search(
            N, sz, MODE_EMIT, max_twice_area, cz, cw, empty, empty, empty
        )
        flat = coords.tolist()
        offs = offsets.tolist()
        for i in range(len(offs) - 1):
            seg = flat[offs[i]:offs[i + 1]]
            yield tuple(zip(seg[0::2], seg[1::2]))


def enumerate_polygons(spec: PolygonStream) -> Iterator[LatticePolygon]:
    """Every convex lattice polygon in ``[0, N]^2`` up to translation, in a fixed order."""
    N = spec.max_coord
    cap = max_coord_cap()
    if N > cap:
        raise CapExceeded(f"max_coord {N} exceeds the cap {cap} (set LATTICECURVE_MAX_COORD)")
    if N < 0:
        raise ValueError("max_coord must be >= 0")
    if not spec.full_dimensional and spec.max_self_intersection is None:
        yield make_polygon([(0, 0)])
        segs = {(0, 0, a, b) for a in range(N + 1) for b in range(N + 1) if (a, b) != (0, 0)}
        segs |= {(0, b, a, 0) for a in range(1, N + 1) for b in range(1, N + 1)}
        for z0, w0, z1, w1 in sorted(segs):
            yield make_polygon([(z0, w0), (z1, w1)])
    classes = {}
    bound = -1 if spec.max_self_intersection is None else spec.max_self_intersection
    for verts in _raw_polygons(N, bound):
        i = verts.index(min(verts))
        P = LatticePolygon(verts[i:] + verts[:i])
        if spec.dedup == "unimodular":
            key = normal_form(P)
            if key in classes:
                continue
            classes[key] = None
        if all(f(P) for f in spec.filters):
            yield P


@dataclass
class CampaignReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violate(self, P, claim, **values):
        self.violations.append({"polygon": [list(v) for v in P.vertices], "claim": claim, "values": values})

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "violations": self.violations,
            "wall_time": round(self.wall_time, 3),
            "details": self.details,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def table(self) -> str:
        lines = [
            f"campaign    {self.name}",
            f"checked     {self.checked}",
            f"violations  {len(self.violations)}",
            f"wall time   {self.wall_time:.2f}s",
        ]
        for k, v in self.details.items():
            lines.append(f"{k:<11} {v}")
        for v in self.violations[:20]:
            lines.append(f"  {v['claim']}: {v['polygon']} {v['values']}")
        return "\n".join(lines)


# oracles ---------------------------------------------------------------


def _brute_widths(P: LatticePolygon, bound: int | None):
    if bound is None:
        bound = 2 * max(width(P, (1, 0)), width(P, (0, 1)))
    bound = max(bound, 1)
    r = np.arange(-bound, bound + 1, dtype=np.int64)
    X, Y = np.meshgrid(r, r, indexing="ij")
    X, Y = X.ravel(), Y.ravel()
    keep = (np.gcd(X, Y) == 1) & ((X > 0) | ((X == 0) & (Y > 0)))
    X, Y = X[keep], Y[keep]
    V = np.asarray(P.vertices, dtype=np.int64)
    vals = np.outer(X, V[:, 0]) + np.outer(Y, V[:, 1])
    return X, Y, vals.max(axis=1) - vals.min(axis=1)


def brute_force_lattice_width(P: LatticePolygon, bound: int | None = None) -> int:
    """Minimum width over all primitive directions with ``|x|, |y| <= bound``.

    The default bound is ``2 max(width(P, (1, 0)), width(P, (0, 1)))``.
    """
    return int(_brute_widths(P, bound)[2].min())


def brute_force_width_directions(P: LatticePolygon, bound: int | None = None) -> list:
    """All minimizing directions (one per sign pair) found by the brute force."""
    X, Y, W = _brute_widths(P, bound)
    m = W.min()
    return sorted((int(x), int(y)) for x, y in zip(X[W == m], Y[W == m]))


def random_polygon(rng: np.random.Generator, max_coord: int = 20, npts: int | None = None) -> LatticePolygon:
    """Hull of a few random points; retried until full-dimensional."""
    while True:
        k = npts or int(rng.integers(3, 9))
        pts = rng.integers(0, max_coord + 1, size=(k, 2))
        P = make_polygon([tuple(int(c) for c in p) for p in pts])
        if P.is_full_dimensional:
            return P


# campaigns -------------------------------------------------------------


def _stream(spec_or_n) -> PolygonStream:
    return spec_or_n if isinstance(spec_or_n, PolygonStream) else PolygonStream(int(spec_or_n))


def campaign_selfint_bounds(spec) -> CampaignReport:
    """``4 C^2 >= 3 q^2`` everywhere, and the sharper bounds for q = 2, 3, 5
    on relatively minimal non-simplex polygons of genus at least 2."""
    spec = _stream(spec)
    rep = CampaignReport("bounds")
    t0 = time.perf_counter()
    sharp = {2: 12, 3: 18, 5: 25}
    sharp_checked = 0
    for P in enumerate_polygons(spec):
        rep.checked += 1
        q = lattice_width(P).q
        c2 = self_intersection(P)
        if 4 * c2 < 3 * q * q:
            rep.violate(P, "4 C^2 >= 3 q^2", q=q, C2=c2)
        if q in sharp and c2 < sharp[q] and genus(P) >= 2 and non_simplex(P) and relatively_minimal(P):
            rep.violate(P, f"q = {q} implies C^2 >= {sharp[q]}", q=q, C2=c2)
        if q in sharp:
            sharp_checked += 1
    rep.details["sharp_bound_candidates"] = sharp_checked
    rep.wall_time = time.perf_counter() - t0
    return rep


# the shapes with q = 4, listed in the classification of small C^2 curves.
# Six drawings but only four unimodular classes: the second and fourth
# quadrilaterals are images of the first and the diamond of the third
Q4_SHAPES = {
    12: [((0, 0), (4, 2), (2, 4))],
    16: [
        ((0, 4), (4, 4), (2, 0)),
        ((0, 0), (2, 0), (4, 4), (0, 2)),
        ((0, 0), (4, 2), (4, 4), (0, 2)),
        ((2, 0), (4, 2), (4, 4), (0, 2)),
        ((0, 2), (2, 4), (4, 2), (2, 0)),
    ],
}


def campaign_q4_census(spec) -> CampaignReport:
    """Unimodular classes with q = 4, relatively minimal, non-simplex, g >= 2, C^2 <= 16."""
    spec = _stream(spec)
    spec = PolygonStream(
        spec.max_coord,
        "unimodular",
        (max_selfint(16), min_genus(2), non_simplex, fixed_width(4), relatively_minimal),
    )
    rep = CampaignReport("q4")
    t0 = time.perf_counter()
    found = {}
    for P in enumerate_polygons(spec):
        rep.checked += 1
        found[normal_form(P)] = self_intersection(P)
    expected = {
        normal_form(make_polygon(v)): c2 for c2, shapes in Q4_SHAPES.items() for v in shapes
    }
    by_c2 = {}
    for c2 in found.values():
        by_c2[c2] = by_c2.get(c2, 0) + 1
    rep.details["listed_shapes"] = sum(len(v) for v in Q4_SHAPES.values())
    rep.details["listed_classes"] = len(expected)
    rep.details["classes"] = len(found)
    rep.details["by_self_intersection"] = dict(sorted(by_c2.items()))
    rep.details["representatives"] = [[list(v) for v in k] for k in sorted(found)]
    rep.details["interpretation"] = "classes up to unimodular equivalence (reflections included)"
    if found != expected:
        missing = [list(map(list, k)) for k in expected if k not in found]
        extra = [list(map(list, k)) for k in found if k not in expected]
        rep.violations.append(
            {"polygon": None, "claim": "classes are exactly those of the listed q = 4 shapes",
             "values": {"missing": missing, "extra": extra}}
        )
    rep.wall_time = time.perf_counter() - t0
    return rep


def toric_consistency_violations(P: LatticePolygon, n_random_dirs: int = 0, rng=None) -> list:
    """Cross-checks between the polygon and its toric surface; returns failed claims."""
    bad = []
    g = genus(P)
    c2 = self_intersection(P)
    b = count_boundary_points(P)
    if c2 != 2 * g + b - 2:
        bad.append(("pick", dict(C2=c2, g=g, boundary=b)))
    C = divisor_of_polygon(P)
    if polygon_of_divisor(C) != P:
        bad.append(("round trip", {}))
    if intersection(C, C) != c2:
        bad.append(("C.C = 2 area", dict(CC=intersection(C, C), C2=c2)))
    ag = adjunction_genus(C)
    if ag != g:
        bad.append(("adjunction genus", dict(adjunction=ag, interior=g)))
    dirs = np.asarray(C.fan.rays, dtype=np.int64)
    if n_random_dirs:
        rng = rng or np.random.default_rng(0)
        extra = np.zeros((0, 2), dtype=np.int64)
        while len(extra) < n_random_dirs:
            cand = rng.integers(-30, 31, size=(2 * n_random_dirs, 2))
            extra = np.concatenate([extra, cand[np.gcd(cand[:, 0], cand[:, 1]) == 1]])
        dirs = np.concatenate([dirs, extra[:n_random_dirs]])
    via_fan = widths_via_fan(C, dirs)
    vals = dirs @ np.asarray(P.vertices, dtype=np.int64).T
    direct = vals.max(axis=1) - vals.min(axis=1)
    if not np.array_equal(via_fan, direct):
        k = int(np.argmax(via_fan != direct))
        d = tuple(int(t) for t in dirs[k])
        bad.append(("width via fan", dict(d=list(d), fan=width_via_fan(C, d), polygon=width(P, d))))
    q = lattice_width(P).q
    try:
        fibs = toric_fibrations(C.fan)
    except NoFibrations:
        fibs = []
    for F in fibs:
        if intersection(F.as_divisor(C.fan), F.as_divisor(C.fan)) != 0:
            bad.append(("fiber self-intersection 0", dict(axis=list(F.axis))))
        if fiber_degree(F, C) != width_via_fan(C, F.axis):
            bad.append(("fiber degree = width", dict(axis=list(F.axis))))
    if fibs:
        mind = min(fiber_degree(F, C) for F in fibs)
        if mind != q:
            bad.append(("min fibration degree = lattice width", dict(min_degree=mind, q=q)))
    elif is_d_simplex(P) is None:
        bad.append(("fibrations exist off the projective plane", {}))
    return bad


def campaign_gonality_consistency(spec, n_random_dirs: int = 0) -> CampaignReport:
    spec = _stream(spec)
    rep = CampaignReport("gonality")
    t0 = time.perf_counter()
    rng = np.random.default_rng(0)
    for P in enumerate_polygons(spec):
        rep.checked += 1
        for claim, values in toric_consistency_violations(P, n_random_dirs, rng):
            rep.violate(P, claim, **values)
    rep.wall_time = time.perf_counter() - t0
    return rep


def campaign_width_oracle(spec, n_random: int = 0, random_max: int = 20, seed: int = 0) -> CampaignReport:
    """Reduction-based lattice width against the brute-force minimum.

    Without filters the enumerated part runs entirely inside the compiled
    search, which calls the same reduction kernel as :func:`lattice_width`.
    Random polygons go through the Python entry points on both sides.
    """
    spec = _stream(spec)
    rep = CampaignReport("width-oracle")
    t0 = time.perf_counter()

    def check(P):
        rep.checked += 1
        lw = lattice_width(P)
        bf = brute_force_width_directions(P)
        if lw.q != width(P, bf[0]):
            rep.violate(P, "reduction width = brute force width", reduction=lw.q, brute=width(P, bf[0]))
        elif list(lw.witnesses) != bf:
            rep.violate(P, "all minimizing directions found", reduction=lw.witnesses, brute=bf)

    if spec.filters or spec.dedup != "translation" or spec.max_self_intersection is not None:
        for P in enumerate_polygons(spec):
            check(P)
    else:
        N = spec.max_coord
        if N > max_coord_cap():
            raise CapExceeded(f"max_coord {N} exceeds the cap {max_coord_cap()}")
        dx, dy, dm = oracle_directions(2 * N)
        for sz in range(N + 1):
            cz, cw = candidates(N, sz)
            coords, offsets, codes, visited = polygon_search(
                N, sz, MODE_WIDTH_ORACLE, -1, cz, cw, dx, dy, dm
            )
            rep.checked += int(visited)
            flat, offs = coords.tolist(), offsets.tolist()
            for i, code in enumerate(codes.tolist()):
                seg = flat[offs[i]:offs[i + 1]]
                P = make_polygon(list(zip(seg[0::2], seg[1::2])))
                claim = "reduction width = brute force width" if code == 1 else "all minimizing directions found"
                rep.violate(P, claim, code=code)
    rep.details["enumerated"] = rep.checked
    rng = np.random.default_rng(seed)
    for _ in range(n_random):
        check(random_polygon(rng, random_max))
    rep.details["random"] = n_random
    rep.wall_time = time.perf_counter() - t0
    return rep


def campaign_exceptional_census(spec) -> CampaignReport:
    """Relatively minimal non-simplex polygons with (g, q) = (10, 6) or (4, 4)
    are the two exceptional triangles."""
    from .curves import exceptional_census_check
    from .errors import CensusViolation

    spec = _stream(spec)
    rep = CampaignReport("exceptional")
    t0 = time.perf_counter()
    hits = {"(4,4)": 0, "(10,6)": 0}
    for P in enumerate_polygons(spec):
        g = genus(P)
        if g not in (4, 10):
            continue
        q = lattice_width(P).q
        if (g, q) not in ((4, 4), (10, 6)) or not non_simplex(P) or not relatively_minimal(P):
            continue
        rep.checked += 1
        hits[f"({g},{q})"] += 1
        try:
            exceptional_census_check(P)
        except CensusViolation as e:
            rep.violate(P, str(e), g=g, q=q)
    rep.details["hits"] = hits
    rep.wall_time = time.perf_counter() - t0
    return rep
