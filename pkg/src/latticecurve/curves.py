"""Gonality and Clifford index of a curve read off from its lattice polygon.

The polygon ``P`` stands for a general member of the nef linear system it
defines on the smooth toric surface of (the minimal smooth refinement of)
its normal fan.  Smoothness of that member is assumed throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import BranchMismatch, CensusViolation, DegeneratePolygon
from .fan import divisor_of_polygon, is_relatively_minimal, pr_star
from .normal_form import unimodular_equivalent
from .polygon import (
    LatticePolygon,
    canonical_direction,
    genus,
    is_d_simplex,
    lattice_width,
    make_polygon,
    normalize_width,
    self_intersection,
    width,
)

__all__ = [
    "CurveReport",
    "classify_curve",
    "gonality_pencil_directions",
    "exceptional_census_check",
    "EXCEPTIONAL_G10",
    "EXCEPTIONAL_G4",
]

INFINITE = "infinite"
ONE_OR_TWO = "one_or_two_not_polygon_determined"

EXCEPTIONAL_G10 = make_polygon([(0, 0), (-3, -6), (-6, -3)])
EXCEPTIONAL_G4 = make_polygon([(0, 0), (4, 2), (2, 4)])

NOTE_LOW_GENUS = "theorem hypotheses g >= 2 not met; gonality is informational"
NOTE_PLANE = (
    "smooth plane curve: every gonality pencil is cut out by lines through a point of the curve"
)
NOTE_PLANE_ASSUMPTION = (
    "plane-curve isomorphism is only detected for simplex polygons; "
    "other polygons are assumed not to give smooth plane curves"
)
NOTE_TORIC = (
    "pencil directions are restrictions of toric fibrations computing the gonality; "
    "the count is of such directions"
)
NOTE_G4 = "whether the curve has one or two trigonal pencils is not determined by the polygon"
NOTE_G5 = "gonality attains the Brill-Noether bound; infinitely many gonality pencils"
NOTE_G10 = "complete intersection of two hypercubics in P^3 (cubic surfaces)"
NOTE_HYPERELLIPTIC = "hyperelliptic (or elliptic-type) pencil from a width-2 direction"


def pencil_exact(n: int) -> str:
    return f"exact({n})"


@dataclass
class CurveReport:
    g: int
    q: int
    q_prime: int
    self_int: int
    gonality: int
    clifford: int | None
    pencil_directions: list
    pencil_count: str
    branch: str
    notes: list = field(default_factory=list)

    def check_invariants(self) -> None:
        """Assert the general bounds that hold on every branch."""
        if self.g >= 2:
            assert self.gonality <= (self.g + 3) // 2, self
            if self.clifford is not None:
                assert self.gonality - 3 <= self.clifford <= self.gonality - 2, self
        assert 4 * self.self_int >= 3 * self.gonality**2, self

    def to_dict(self) -> dict:
        return {
            "genus": self.g,
            "lattice_width": self.q,
            "q_prime": self.q_prime,
            "self_intersection": self.self_int,
            "gonality": self.gonality,
            "clifford": self.clifford,
            "pencil_directions": [list(d) for d in self.pencil_directions],
            "pencil_count": self.pencil_count,
            "branch": self.branch,
            "notes": list(self.notes),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _directions(ds) -> list:
    return sorted({canonical_direction(d) for d in ds})


def classify_curve(P: LatticePolygon) -> CurveReport:
    """Run the decision tree: low genus, plane curve, hyperelliptic, the
    three exceptional (g, q) pairs, then the generic case ``k = q``."""
    if not P.is_full_dimensional:
        raise DegeneratePolygon("classify_curve needs a full-dimensional polygon")
    g = genus(P)
    lw = lattice_width(P)
    q = lw.q
    Pn, _, _ = normalize_width(P)
    qp = width(Pn, (1, 0))
    c2 = self_intersection(P)
    base = dict(g=g, q=q, q_prime=qp, self_int=c2)

    if g <= 1:
        k = 1 if g == 0 else 2
        # fibrations of degree k still realise the gonality, among infinitely many pencils
        return CurveReport(
            **base,
            gonality=k,
            clifford=None,
            pencil_directions=_directions(lw.witnesses) if q == k else [],
            pencil_count=INFINITE,
            branch=f"low_genus({g})",
            notes=[NOTE_LOW_GENUS],
        )

    d = is_d_simplex(P)
    if d is not None and d >= 2:
        # d = 2, 3 give g <= 1 and were handled above
        return CurveReport(
            **base,
            gonality=d - 1,
            clifford=1 if d == 4 else d - 4,
            pencil_directions=[],
            pencil_count=INFINITE,
            branch=f"plane_curve({d})",
            notes=[NOTE_PLANE],
        )

    notes = [NOTE_PLANE_ASSUMPTION]
    dirs = _directions(lw.witnesses)
    if q == 2:
        return CurveReport(
            **base,
            gonality=2,
            clifford=0,
            pencil_directions=dirs,
            pencil_count=pencil_exact(len(dirs)),
            branch="generic",
            notes=notes + [NOTE_HYPERELLIPTIC],
        )
    if (g, q) == (4, 4):
        return CurveReport(
            **base, gonality=3, clifford=1, pencil_directions=[],
            pencil_count=ONE_OR_TWO, branch="exc_4_4", notes=notes + [NOTE_G4],
        )
    if (g, q) == (5, 4):
        return CurveReport(
            **base, gonality=4, clifford=2, pencil_directions=[],
            pencil_count=INFINITE, branch="exc_5_4", notes=notes + [NOTE_G5],
        )
    if (g, q) == (10, 6):
        return CurveReport(
            **base, gonality=6, clifford=3, pencil_directions=[],
            pencil_count=INFINITE, branch="exc_10_6", notes=notes + [NOTE_G10],
        )
    return CurveReport(
        **base,
        gonality=q,
        clifford=q - 2,
        pencil_directions=dirs,
        pencil_count=pencil_exact(len(dirs)),
        branch="generic",
        notes=notes + [NOTE_TORIC],
    )


def gonality_pencil_directions(P: LatticePolygon) -> list:
    """Width directions that carry the gonality pencils.

    Only meaningful on the generic branch (including width 2).  Each
    direction is checked to be a fibration axis of the polygon's fan.
    """
    rep = classify_curve(P)
    if rep.branch != "generic":
        raise BranchMismatch(f"pencil directions are not determined on branch {rep.branch}")
    axes = set(pr_star(divisor_of_polygon(P).fan))
    for d in rep.pencil_directions:
        assert d in axes, f"width direction {d} is not a fibration axis"
    return rep.pencil_directions


def exceptional_census_check(P: LatticePolygon):
    """For (g, q) = (10, 6) or (4, 4), confirm ``P`` is the expected triangle.

    Returns a note string for those two pairs and ``None`` otherwise.
    Simplex polygons (plane curves) are outside the census.
    Raises ``CensusViolation`` if a relatively minimal polygon with one of
    those invariants is some other shape.
    """
    g = genus(P)
    q = lattice_width(P).q
    if (g, q) == (10, 6):
        ref, name = EXCEPTIONAL_G10, "the (10, 6) triangle"
    elif (g, q) == (4, 4):
        ref, name = EXCEPTIONAL_G4, "the (4, 4) triangle"
    else:
        return None
    if is_d_simplex(P):
        # 6 times the simplex also has (g, q) = (10, 6): a plane sextic
        return f"(g, q) = ({g}, {q}) from a plane curve; census does not apply"
    if not is_relatively_minimal(divisor_of_polygon(P)):
        return f"(g, q) = ({g}, {q}) but not relatively minimal; census does not apply"
    if not unimodular_equivalent(P, ref):
        raise CensusViolation(f"{P!r} has (g, q) = ({g}, {q}) but is not {name}")
    return f"verified: unimodularly equivalent to {name}"
