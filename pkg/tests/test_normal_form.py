from hypothesis import given
from hypothesis import strategies as st

from latticecurve.normal_form import normal_form, normal_form_polygon, unimodular_equivalent
from latticecurve.polygon import apply_unimodular, genus, make_polygon, self_intersection

from conftest import polygons, unimodular_matrices


def _shear_search(P, Q, K=12):
    """Slow oracle: try every matrix with small entries and det +-1 and
    compare after translating both to the origin corner."""

    def canon(R):
        zm = min(v[0] for v in R.vertices)
        wm = min(v[1] for v in R.vertices)
        return make_polygon([(z - zm, w - wm) for z, w in R.vertices])

    target = canon(Q)
    for a in range(-K, K + 1):
        for b in range(-K, K + 1):
            for c in range(-K, K + 1):
                for d in range(-K, K + 1):
                    if a * d - b * c in (1, -1) and canon(apply_unimodular(P, ((a, b), (c, d)))) == target:
                        return True
    return False


def test_triangle_and_image():
    T = make_polygon([(0, 0), (4, 2), (2, 4)])
    S = apply_unimodular(T, ((2, 1), (1, 1)), (5, -7))
    assert normal_form(T) == normal_form(S)
    assert unimodular_equivalent(T, S)


def test_simplex_shear_merged():
    D3 = make_polygon([(0, 0), (3, 0), (0, 3)])
    sheared = apply_unimodular(D3, ((1, 2), (0, 1)))
    assert normal_form(D3) == normal_form(sheared)


def test_distinct_classes_differ():
    # same area and genus, different shapes
    A = make_polygon([(0, 0), (2, 0), (0, 2)])
    B = make_polygon([(0, 0), (2, 0), (2, 1), (0, 1)])
    assert self_intersection(A) == self_intersection(B)
    assert not unimodular_equivalent(A, B)


def test_normal_form_is_a_representative():
    P = make_polygon([(1, 1), (5, 2), (3, 7), (0, 4)])
    N = normal_form_polygon(P)
    assert unimodular_equivalent(P, N)
    assert genus(N) == genus(P)


@given(polygons(max_coord=6), unimodular_matrices(), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_invariant_under_unimodular_maps(P, M, t):
    assert normal_form(apply_unimodular(P, M, t)) == normal_form(P)


@given(polygons(max_coord=2, max_pts=5), polygons(max_coord=2, max_pts=5))
def test_agrees_with_matrix_search(P, Q):
    if self_intersection(P) != self_intersection(Q) or len(P.vertices) != len(Q.vertices):
        return
    assert unimodular_equivalent(P, Q) == _shear_search(P, Q, K=4)
