import json

import pytest
from hypothesis import given, settings

from latticecurve.curves import (
    EXCEPTIONAL_G4,
    EXCEPTIONAL_G10,
    classify_curve,
    exceptional_census_check,
    gonality_pencil_directions,
)
from latticecurve.errors import BranchMismatch, CensusViolation, DegeneratePolygon
from latticecurve.fan import divisor_of_polygon, pr_star
from latticecurve.polygon import apply_unimodular, genus, lattice_width, make_polygon

from conftest import polygons, unimodular_matrices


def box(a, b):
    return make_polygon([(0, 0), (a, 0), (a, b), (0, b)])


def simplex(d):
    return make_polygon([(0, 0), (d, 0), (0, d)])


def test_g10_triangle():
    r = classify_curve(EXCEPTIONAL_G10)
    assert (r.g, r.q, r.self_int, r.gonality, r.clifford) == (10, 6, 27, 6, 3)
    assert r.pencil_count == "infinite" and r.branch == "exc_10_6"
    assert any("hypercubic" in n for n in r.notes)


def test_g4_triangle():
    r = classify_curve(EXCEPTIONAL_G4)
    assert (r.g, r.q, r.self_int, r.gonality, r.clifford) == (4, 4, 12, 3, 1)
    assert r.pencil_count == "one_or_two_not_polygon_determined"
    assert r.branch == "exc_4_4"


def test_g5_width4_attains_ceiling():
    # diamond with five interior points
    P = make_polygon([(0, 2), (2, 0), (4, 2), (2, 4)])
    assert (genus(P), lattice_width(P).q) == (5, 4)
    r = classify_curve(P)
    assert r.branch == "exc_5_4" and r.gonality == 4 == (r.g + 3) // 2
    assert r.clifford == 2 and r.pencil_count == "infinite"


def test_rectangle_5_3():
    r = classify_curve(box(5, 3))
    assert (r.g, r.q, r.gonality, r.clifford) == (8, 3, 3, 1)
    assert r.pencil_directions == [(0, 1)]
    assert r.pencil_count == "exact(1)" and r.branch == "generic"


def test_plane_curves():
    for d in range(2, 8):
        r = classify_curve(simplex(d))
        assert r.gonality == d - 1
        if d >= 4:
            assert r.branch == f"plane_curve({d})"
            assert r.gonality < r.q == d
        if d >= 5:
            assert r.clifford == d - 4
    assert classify_curve(simplex(4)).clifford == 1


def test_low_genus():
    r = classify_curve(simplex(2))
    assert r.branch == "low_genus(0)" and r.gonality == 1 and r.clifford is None
    r = classify_curve(simplex(3))
    assert r.branch == "low_genus(1)" and r.gonality == 2
    # 3 times the simplex has width 3, so no fibration realises degree 2
    assert r.pencil_directions == [] and r.pencil_count == "infinite"
    r = classify_curve(box(2, 2))
    assert r.pencil_directions == [(0, 1), (1, 0)] and r.pencil_count == "infinite"
    assert classify_curve(box(3, 1)).pencil_directions == [(0, 1)]


def test_hyperelliptic():
    r = classify_curve(box(6, 2))
    assert (r.gonality, r.clifford) == (2, 0)
    assert r.pencil_directions == [(0, 1)]


def test_degenerate():
    with pytest.raises(DegeneratePolygon):
        classify_curve(make_polygon([(0, 0), (3, 0)]))


def test_json_keys():
    d = json.loads(classify_curve(EXCEPTIONAL_G10).to_json())
    assert set(d) == {
        "genus", "lattice_width", "q_prime", "self_intersection", "gonality",
        "clifford", "pencil_directions", "pencil_count", "branch", "notes",
    }


class TestPencilDirections:
    def test_squares_and_rectangles(self):
        assert gonality_pencil_directions(box(3, 3)) == [(0, 1), (1, 0)]
        assert gonality_pencil_directions(box(5, 3)) == [(0, 1)]

    def test_trigonal_triangle(self):
        assert gonality_pencil_directions(make_polygon([(0, 3), (1, 0), (9, 0)])) == [(0, 1)]

    def test_branch_mismatch(self):
        with pytest.raises(BranchMismatch):
            gonality_pencil_directions(EXCEPTIONAL_G4)
        with pytest.raises(BranchMismatch):
            gonality_pencil_directions(simplex(5))


class TestCensus:
    def test_pass(self):
        assert "verified" in exceptional_census_check(EXCEPTIONAL_G10)
        assert "verified" in exceptional_census_check(EXCEPTIONAL_G4)

    @given(unimodular_matrices())
    def test_images_pass(self, M):
        for T in (EXCEPTIONAL_G4, EXCEPTIONAL_G10):
            assert "verified" in exceptional_census_check(apply_unimodular(T, M, (2, -3)))

    def test_other_pairs_ignored(self):
        assert exceptional_census_check(box(5, 3)) is None

    def test_plane_sextic_skipped(self):
        note = exceptional_census_check(simplex(6))
        assert note is not None and "plane" in note

    def test_violation_raised_for_wrong_shape(self, monkeypatch):
        import latticecurve.curves as cv

        # pretend the reference is some other polygon with the same invariants
        monkeypatch.setattr(cv, "EXCEPTIONAL_G4", box(5, 3))
        with pytest.raises(CensusViolation):
            cv.exceptional_census_check(EXCEPTIONAL_G4)


@settings(max_examples=200)
@given(polygons(max_coord=7))
def test_report_invariants(P):
    r = classify_curve(P)
    r.check_invariants()
    if r.g >= 2 and r.branch == "generic":
        assert r.gonality == r.q and r.clifford == r.q - 2
        axes = set(pr_star(divisor_of_polygon(P).fan))
        assert set(r.pencil_directions) <= axes
        assert r.pencil_count == f"exact({len(r.pencil_directions)})"


@given(polygons(max_coord=6), unimodular_matrices())
def test_report_unimodular_invariant(P, M):
    a = classify_curve(P).to_dict()
    b = classify_curve(apply_unimodular(P, M, (1, 1))).to_dict()
    for k in ("genus", "lattice_width", "q_prime", "self_intersection", "gonality", "clifford", "branch"):
        assert a[k] == b[k]
    assert len(a["pencil_directions"]) == len(b["pencil_directions"])
