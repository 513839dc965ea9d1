"""Gonality and Clifford index of curves on toric surfaces from lattice polygons."""

from .curves import CurveReport, classify_curve, exceptional_census_check, gonality_pencil_directions
from .errors import *  # noqa: F401,F403
from .fan import (
    Fan,
    FibrationFiber,
    ToricDivisor,
    adjunction_genus,
    canonical_divisor,
    curve_ray_intersection,
    divisor_of_polygon,
    intersection,
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
from .gaps import GapReport, TrigonalModel, case_iii_transform, closed_form_gaps, gap_report, gap_sequence, model_polygon
from .normal_form import normal_form, unimodular_equivalent
from .polygon import (
    Direction,
    LatticePoint,
    LatticePolygon,
    LatticeWidth,
    ShapeParams,
    apply_unimodular,
    count_boundary_points,
    count_interior_points,
    edge_lattice_length,
    genus,
    interior_points,
    is_d_simplex,
    lattice_points,
    lattice_width,
    make_polygon,
    normalize_width,
    self_intersection,
    shape_params,
    support_value,
    width,
)

__version__ = "0.1.0"
