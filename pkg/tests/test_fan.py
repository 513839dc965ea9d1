from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticecurve.errors import (
    DegeneratePolygon,
    EmptyPolytope,
    NoFibrations,
    NonPrimitiveRay,
    NotComplete,
    NotCounterClockwise,
    NotNef,
    NotSmooth,
)
from latticecurve.fan import (
    ToricDivisor,
    adjunction_genus,
    blow_down,
    canonical_divisor,
    curve_ray_intersection,
    divisor_of_polygon,
    fiber_degree,
    intersection,
    intersection_with_ray,
    is_relatively_minimal,
    m_set,
    polygon_of_divisor,
    pr_star,
    ray_self_intersection,
    relative_minimalize,
    smooth_refine,
    toric_fibrations,
    validate_fan,
    width_via_fan,
    widths_via_fan,
)
from latticecurve.polygon import genus, lattice_width, make_polygon, self_intersection, width

from conftest import directions, polygons

P1P1 = [(0, 1), (-1, 0), (0, -1), (1, 0)]
P2 = [(0, 1), (1, 0), (-1, -1)]
T44 = make_polygon([(0, 0), (4, 2), (2, 4)])
T106 = make_polygon([(0, 0), (-3, -6), (-6, -3)])
BOX53 = make_polygon([(0, 0), (5, 0), (5, 3), (0, 3)])
BLOWN_UP = [(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)]


def rays_of(F):
    return [tuple(r) for r in F.rays]


def divisor(rays, coeffs):
    F = validate_fan(rays)
    lookup = dict(zip(map(tuple, rays), coeffs))
    return ToricDivisor(F, tuple(lookup[r] for r in rays_of(F)))


def hirzebruch(e):
    return validate_fan([(0, 1), (1, 0), (0, -1), (-1, e)])


class TestValidate:
    def test_p1p1_and_p2(self):
        assert rays_of(validate_fan(P1P1)) == [(1, 0), (0, 1), (-1, 0), (0, -1)]
        assert rays_of(validate_fan(P2)) == [(1, 0), (0, 1), (-1, -1)]

    def test_not_smooth(self):
        with pytest.raises(NotSmooth) as ei:
            validate_fan([(0, 1), (2, -1), (-1, -1)])
        assert "determinant" in str(ei.value)

    def test_non_primitive(self):
        with pytest.raises(NonPrimitiveRay) as ei:
            validate_fan([(0, 2), (1, 0), (-1, -1)])
        assert ei.value.index == 0

    def test_not_cyclic(self):
        with pytest.raises(NotCounterClockwise):
            validate_fan([(1, 0), (-1, 0), (0, 1), (0, -1)])
        with pytest.raises(NotCounterClockwise):
            validate_fan([(1, 0), (0, 1), (1, 0), (-1, -1)])

    def test_not_complete(self):
        with pytest.raises(NotComplete):
            validate_fan([(1, 0), (0, 1)])
        with pytest.raises(NotComplete):
            validate_fan([(1, 0), (0, 1), (-1, 0)])

    def test_clockwise_input_accepted(self):
        assert validate_fan(list(reversed(P1P1))) == validate_fan(P1P1)


class TestRefine:
    def test_t106_normal_fan(self):
        F = smooth_refine([(2, -1), (-1, -1), (-1, 2)])
        assert {(2, -1), (-1, -1), (-1, 2)} <= set(rays_of(F))
        assert validate_fan(F.rays) == F

    def test_smooth_unchanged(self):
        assert smooth_refine(P1P1) == validate_fan(P1P1)
        assert smooth_refine(P2) == validate_fan(P2)

    @settings(max_examples=150)
    @given(polygons(max_coord=9))
    def test_refinement_is_smooth_and_minimal(self, P):
        D = divisor_of_polygon(P)
        F = D.fan
        validate_fan(F.rays)
        normals = set()
        for (pz, pw), (qz, qw) in P.edges():
            g = gcd(qz - pz, qw - pw)
            normals.add(((qw - pw) // g, (pz - qz) // g))
        # minimal: no inserted ray can be dropped while staying smooth
        si = F.self_intersections
        for i, r in enumerate(F.rays):
            if r not in normals:
                assert si[i] <= -2


class TestDivisorPolygon:
    def test_box(self):
        D = divisor(P1P1, (3, 0, 0, 5))
        assert polygon_of_divisor(D) == BOX53

    def test_p2_simplex(self):
        for d in range(1, 6):
            D = divisor([(0, 1), (-1, -1), (1, 0)], (0, d, 0))
            P = polygon_of_divisor(D)
            assert self_intersection(P) == d * d and genus(P) == (d - 1) * (d - 2) // 2

    def test_canonical_empty(self):
        K = canonical_divisor(validate_fan(P2))
        assert K.coeffs == (-1, -1, -1)
        with pytest.raises(EmptyPolytope) as ei:
            polygon_of_divisor(K)
        assert ei.value.h0 == 0
        assert not K.is_nef

    def test_box_divisor(self):
        D = divisor_of_polygon(BOX53)
        assert rays_of(D.fan) == [(1, 0), (0, 1), (-1, 0), (0, -1)]
        assert D.coeffs == (5, 3, 0, 0)

    def test_t106_round_trip(self):
        D = divisor_of_polygon(T106)
        assert {(2, -1), (-1, -1), (-1, 2)} <= set(rays_of(D.fan))
        assert polygon_of_divisor(D) == T106

    def test_t44_fan(self):
        D = divisor_of_polygon(T44)
        assert len(D.fan.rays) == 9
        assert set(rays_of(D.fan)) == {
            (1, 0), (1, 1), (0, 1), (-1, 1), (-2, 1), (-1, 0), (0, -1), (1, -2), (1, -1)
        }
        assert set(D.fan.self_intersections) <= {-1, -2}

    def test_degenerate_rejected(self):
        with pytest.raises(DegeneratePolygon):
            divisor_of_polygon(make_polygon([(0, 0), (3, 1)]))

    def test_nonnef_flag(self):
        # the inequality on (1,1) is slack: its level 9 exceeds the support value 8
        D = divisor(BLOWN_UP, (5, 9, 3, 0, 0))
        assert polygon_of_divisor(D) == BOX53
        assert not D.is_nef
        assert divisor(BLOWN_UP, (5, 8, 3, 0, 0)).is_nef

    @given(polygons(max_coord=10))
    def test_round_trip(self, P):
        D = divisor_of_polygon(P)
        assert polygon_of_divisor(D) == P
        assert ToricDivisor(D.fan, D.coeffs).is_nef


class TestIntersections:
    def test_self_intersections(self):
        assert validate_fan(P2).self_intersections == (1, 1, 1)
        assert validate_fan(P1P1).self_intersections == (0, 0, 0, 0)
        F = validate_fan([(1, 0), (1, 1), (0, 1), (-1, -1)])
        assert ray_self_intersection(F, F.index_of((1, 1))) == -1
        for e in range(4):
            assert sorted(hirzebruch(e).self_intersections) == sorted([-e, 0, 0, e])

    def test_box_edges(self):
        D = divisor_of_polygon(BOX53)
        assert curve_ray_intersection(D, D.fan.index_of((0, 1))) == 5
        assert curve_ray_intersection(D, D.fan.index_of((1, 0))) == 3
        assert intersection(D, D) == 30

    def test_vertex_face_is_zero(self):
        # the blown-up ray (1,1) only touches the corner (5,3)
        F = validate_fan([(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)])
        D = ToricDivisor(F, (5, 8, 3, 0, 0))
        assert D.is_nef
        assert curve_ray_intersection(D, 1) == 0

    def test_t44_relatively_minimal(self):
        D = divisor_of_polygon(T44)
        cd = [curve_ray_intersection(D, i) for i in range(9)]
        assert cd == [intersection_with_ray(D, i) for i in range(9)]
        for i, s in enumerate(D.fan.self_intersections):
            if s == -1:
                assert cd[i] >= 2
        assert is_relatively_minimal(D)

    def test_not_nef_errors(self):
        D = divisor(BLOWN_UP, (5, 9, 3, 0, 0))
        with pytest.raises(NotNef):
            curve_ray_intersection(D, 0)
        with pytest.raises(NotNef):
            width_via_fan(D, (0, 1))
        with pytest.raises(NotNef):
            relative_minimalize(D)

    @given(polygons(max_coord=8))
    def test_face_lengths_match_pairing(self, P):
        D = divisor_of_polygon(P)
        for i in range(len(D.fan.rays)):
            assert curve_ray_intersection(D, i) == intersection_with_ray(D, i) >= 0
        assert intersection(D, D) == self_intersection(P)

    @given(polygons(max_coord=8))
    def test_adjunction(self, P):
        assert adjunction_genus(divisor_of_polygon(P)) == genus(P)

    def test_adjunction_box(self):
        D = divisor_of_polygon(BOX53)
        K = canonical_divisor(D.fan)
        assert intersection(D, K) == -16
        assert adjunction_genus(D) == 8


class TestWidthViaFan:
    def test_examples(self):
        assert width_via_fan(divisor_of_polygon(BOX53), (0, 1)) == 3
        assert width_via_fan(divisor_of_polygon(T106), (0, 1)) == 6

    def test_m_set(self):
        F = validate_fan(P1P1)
        assert [F.rays[j] for j in m_set(F, 0, 1)] == [(1, 0)]
        assert sorted(F.rays[j] for j in m_set(F, 1, 1)) == [(0, -1), (1, 0)]
        G = validate_fan(P2)
        assert [G.rays[j] for j in m_set(G, 1, 0)] == [(-1, -1)]
        with pytest.raises(ValueError):
            m_set(F, 0, 0)

    @settings(max_examples=150)
    @given(polygons(max_coord=8), directions)
    def test_agrees_with_width(self, P, d):
        D = divisor_of_polygon(P)
        assert width_via_fan(D, d) == width(P, d)
        for r in D.fan.rays:
            assert width_via_fan(D, r) == width(P, r)


    @given(polygons(max_coord=8), st.lists(directions, min_size=1, max_size=20))
    def test_batched_matches_scalar(self, P, ds):
        D = divisor_of_polygon(P)
        assert widths_via_fan(D, ds).tolist() == [width_via_fan(D, d) for d in ds]


class TestFibrations:
    def test_p1p1(self):
        F = validate_fan(P1P1)
        assert pr_star(F) == [(0, 1), (1, 0)]
        fibs = toric_fibrations(F)
        assert len(fibs) == 2
        D = divisor_of_polygon(BOX53)
        assert sorted(fiber_degree(fb, D) for fb in toric_fibrations(D.fan)) == [3, 5]

    def test_p2_has_none(self):
        F = validate_fan(P2)
        assert pr_star(F) == []
        with pytest.raises(NoFibrations):
            toric_fibrations(F)

    def test_hirzebruch(self):
        assert len(pr_star(hirzebruch(0))) == 2
        for e in (1, 2, 3):
            assert pr_star(hirzebruch(e)) == [(0, 1)]

    def test_t44(self):
        D = divisor_of_polygon(T44)
        ps = pr_star(D.fan)
        assert {(0, 1), (1, 0), (1, -1)} <= set(ps)
        fibs = toric_fibrations(D.fan)
        assert len(fibs) >= 3
        assert min(fiber_degree(fb, D) for fb in fibs) == 4
        assert all(fiber_degree(fb, D) == 4 for fb in fibs)

    @given(polygons(max_coord=8))
    def test_fiber_properties(self, P):
        D = divisor_of_polygon(P)
        try:
            fibs = toric_fibrations(D.fan)
        except NoFibrations:
            return
        for fb in fibs:
            assert fb.axis in pr_star(D.fan)
            Fd = fb.as_divisor(D.fan)
            assert intersection(Fd, Fd) == 0
            assert fiber_degree(fb, D) == intersection(Fd, D) == width_via_fan(D, fb.axis)


def _all_minimal_models(C, memo=None):
    """Every result of removing removable rays in every possible order."""
    memo = {} if memo is None else memo
    if C.fan.rays in memo:
        return memo[C.fan.rays]
    si = C.fan.self_intersections
    cands = [i for i in range(len(si)) if si[i] == -1 and intersection_with_ray(C, i) <= 1]
    out = set() if cands else {C.fan.rays}
    for i in cands:
        out |= _all_minimal_models(blow_down(C, i), memo)
    memo[C.fan.rays] = out
    return out


class TestMinimalize:
    def test_t44_already_minimal(self):
        D = divisor_of_polygon(T44)
        assert relative_minimalize(D) == D

    def test_removes_extra_ray_on_5_simplex(self):
        assert len(divisor_of_polygon(make_polygon([(0, 0), (5, 0), (0, 5)])).fan.rays) == 3
        # blow up the point of the plane fixed by the cone of (1,0) and (0,1);
        # the new ray (1,1) touches the polygon only at the corner (0,0)
        F = validate_fan([(1, 0), (1, 1), (0, 1), (-1, -1)])
        E = ToricDivisor(F, (0, 0, 0, 5))
        assert E.is_nef and polygon_of_divisor(E) == make_polygon([(0, 0), (-5, 0), (0, -5)])
        assert curve_ray_intersection(E, 1) == 0
        M = relative_minimalize(E)
        assert rays_of(M.fan) == [(1, 0), (0, 1), (-1, -1)]
        assert M.polygon == E.polygon

    def test_blow_down_of_unit_face(self):
        # cutting the unit corner of a square gives C.D = 1 on the new ray
        F = validate_fan([(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)])
        C = ToricDivisor(F, (3, 5, 3, 0, 0))
        assert C.is_nef and curve_ray_intersection(C, 1) == 1
        M = relative_minimalize(C)
        assert M.polygon == make_polygon([(0, 0), (3, 0), (3, 3), (0, 3)])
        assert adjunction_genus(M) == adjunction_genus(C) == genus(C.polygon)
        assert intersection(M, M) == intersection(C, C) + 1

    @settings(max_examples=120)
    @given(polygons(max_coord=7))
    def test_result_is_minimal_and_smooth(self, P):
        C = divisor_of_polygon(P)
        M = relative_minimalize(C)
        assert validate_fan(M.fan.rays) == M.fan
        assert M.is_nef
        assert is_relatively_minimal(M)
        assert adjunction_genus(M) == genus(P)

    @settings(max_examples=60)
    @given(polygons(max_coord=5))
    def test_order_independence_for_genus_two_or_more(self, P):
        if genus(P) < 2:
            return
        C = divisor_of_polygon(P)
        # pad three cones with extra blow-ups so there is something to remove
        rays = list(C.fan.rays)
        coeffs = list(C.coeffs)
        for i in range(min(2, len(rays) - 1), -1, -1):
            j = (i + 1) % len(rays)
            u = (rays[i][0] + rays[j][0], rays[i][1] + rays[j][1])
            rays.insert(i + 1, u)
            coeffs.insert(i + 1, coeffs[i] + coeffs[j])
        E = divisor(rays, coeffs)
        assert E.polygon == P
        models = _all_minimal_models(E)
        assert len({len(r) for r in models}) == 1
        assert relative_minimalize(E).fan.rays in models


class TestEnumeratedConsistency:
    def test_small_grid(self):
        from conftest import subset_hull_polygons

        for verts in subset_hull_polygons(2):
            P = make_polygon(verts)
            D = divisor_of_polygon(P)
            assert polygon_of_divisor(D) == P
            assert adjunction_genus(D) == genus(P)
            try:
                fibs = toric_fibrations(D.fan)
            except NoFibrations:
                continue
            assert min(fiber_degree(fb, D) for fb in fibs) >= lattice_width(P).q
