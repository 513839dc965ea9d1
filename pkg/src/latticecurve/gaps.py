"""Weierstrass gap sequences of trigonal curves over a point of the base.

A trigonal model ``y^3 + x^mu A(x) y + x^nu B(x) = 0`` on a Hirzebruch
surface with Maroni invariant ``m`` has one of four polygon shapes.  The
gaps at the point over ``x = 0`` are read off by sweeping a line
``f . u = offset + j`` across the interior lattice points of the polygon:
``j`` is a gap exactly when the line meets one.

``m`` is taken as input.  Nothing here tries to recover it from an
arbitrary polygon.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BetaEven,
    ClosedFormMismatch,
    DiscriminantOrderEven,
    EmptyRange,
    ModelError,
    NormalFormViolation,
)
from .polygon import Direction, LatticePolygon, genus, interior_points, make_polygon

__all__ = [
    "TrigonalModel",
    "GapReport",
    "CaseIIITransform",
    "model_polygon",
    "gap_sequence",
    "gap_report",
    "closed_form_gaps",
    "case_iii_transform",
    "model_genus",
    "poly_mul",
    "poly_add",
    "poly_mindeg",
]

CASES = ("i", "ii", "iii", "iv")

# functional and offset of the sweep line for each case
_SWEEP = {
    "i": ((3, 1), lambda M: 3),
    "ii": ((3, 2), lambda M: 6),
    "iii": (None, lambda M: 2 * M.beta),
    "iv": ((2, 1), lambda M: 3),
}
_CLASS = {
    "i": ("total", "I"),
    "ii": ("total", "II"),
    "iii": ("ordinary", "I"),
    "iv": ("ordinary", "II"),
}


@dataclass(frozen=True)
class TrigonalModel:
    """Parameters of one of the four ramified shapes over ``x = 0``.

    ``mu`` and ``nu`` are the orders of the ``y`` and constant coefficients
    (cases i, ii, iv); ``alpha`` and ``beta`` come from the shifted equation
    ``y^3 + 3k y^2 + x^alpha C y + x^beta D`` in case iii.
    """

    case: str
    m: int
    mu: int | None = None
    nu: int | None = None
    alpha: int | float | None = None
    beta: int | None = None

    def __post_init__(self):
        c, m = self.case, self.m
        if c not in CASES:
            raise ModelError(f"unknown case {c!r}; expected one of {', '.join(CASES)}")
        if not isinstance(m, int) or m < 0:
            raise ModelError(f"Maroni invariant must be an integer >= 0, got {m!r}")
        set_ = lambda k, v: object.__setattr__(self, k, v)  # noqa: E731
        if c in ("i", "ii"):
            nu = 1 if c == "i" else 2
            if self.nu is not None and self.nu != nu:
                raise ModelError(f"case {c} needs nu = {nu}, got {self.nu}")
            set_("nu", nu)
            if self.mu is None:
                set_("mu", nu)
            if not nu <= self.mu <= 2 * m + 4:
                raise ModelError(f"case {c} needs {nu} <= mu <= 2m+4 = {2 * m + 4}, got {self.mu}")
        elif c == "iv":
            if self.mu is not None and self.mu != 1:
                raise ModelError(f"case iv needs mu = 1, got {self.mu}")
            set_("mu", 1)
            if self.nu is None:
                set_("nu", 2)
            if not 2 <= self.nu <= 3 * m + 6:
                raise ModelError(f"case iv needs 2 <= nu <= 3m+6 = {3 * m + 6}, got {self.nu}")
        else:
            a, b = self.alpha, self.beta
            if a is None or b is None:
                raise ModelError("case iii needs alpha and beta")
            if not (a == math.inf or (isinstance(a, int) and a >= 1)):
                raise ModelError(f"alpha must be an integer >= 1 or infinity, got {a!r}")
            if not isinstance(b, int) or b < 1 or b % 2 == 0:
                raise ModelError(f"case iii needs beta odd and positive, got {b!r}")
            if not b < min(2 * a, 2 * m + 4):
                raise ModelError(
                    f"case iii needs beta < min(2 alpha, 2m+4) = {min(2 * a, 2 * m + 4)}, got {b}"
                )

    @classmethod
    def from_dict(cls, d: dict) -> "TrigonalModel":
        alpha = d.get("alpha")
        if isinstance(alpha, str) and alpha.lower() in ("inf", "infinity"):
            alpha = math.inf
        return cls(d["case"], d["m"], d.get("mu"), d.get("nu"), alpha, d.get("beta"))

    def to_dict(self) -> dict:
        a = "inf" if self.alpha == math.inf else self.alpha
        return {"case": self.case, "m": self.m, "mu": self.mu, "nu": self.nu,
                "alpha": a, "beta": self.beta}


def model_polygon(M: TrigonalModel) -> LatticePolygon:
    m = M.m
    right = (3 * m + 6, 0)
    if M.case == "i":
        pts = [(0, 3), (1, 0), right]
    elif M.case == "ii":
        # adding the vertex (0, 2) would only add boundary points, so the
        # interior, and with it every gap, is the same either way
        pts = [(0, 3), (2, 0), right]
    elif M.case == "iii":
        pts = [(0, 3), (0, 2), (M.beta, 0), right]
    else:
        pts = [(0, 3), (1, 1), (M.nu, 0), right]
    return make_polygon(pts)


def model_genus(M: TrigonalModel) -> int:
    """Genus predicted for the model shape."""
    m = M.m
    if M.case == "i":
        return 3 * m + 4
    if M.case == "iii":
        return 3 * m - (M.beta - 9) // 2
    return 3 * m + 3


def gap_sequence(P: LatticePolygon, f, offset: int) -> list:
    """All ``j >= 1`` with ``f . u = offset + j`` for some interior point ``u``."""
    fx, fy = f
    vals = {fx * z + fy * w - offset for z, w in interior_points(P)}
    return sorted(j for j in vals if j >= 1)


def closed_form_gaps(ram: str, t: str, m: int, g: int) -> list:
    """Gap sequence as a union of arithmetic progressions.

    total I:    {1,2,4,5,...,3m+1,3m+2} + {3m+4, 3m+7, ..., 3(g-m)-5}
    total II:   {1,2,4,5,...,3m+1,3m+2} + {3m+5, 3m+8, ..., 3(g-m)-4}
    ordinary I: {1,...,2m+3} + {2m+5, 2m+7, ..., 2(g-m)-3}
    ordinary II:{1,...,2m+2} + {2m+4, 2m+6, ..., 2(g-m)-2}
    """
    if m < 0:
        raise EmptyRange(f"m must be >= 0, got {m}")
    if ram == "total":
        head = [j for j in range(1, 3 * m + 3) if j % 3]
        start, last, step = (3 * m + 4, 3 * (g - m) - 5, 3) if t == "I" else (3 * m + 5, 3 * (g - m) - 4, 3)
    elif ram == "ordinary":
        head = list(range(1, 2 * m + 4)) if t == "I" else list(range(1, 2 * m + 3))
        start, last, step = (2 * m + 5, 2 * (g - m) - 3, 2) if t == "I" else (2 * m + 4, 2 * (g - m) - 2, 2)
    else:
        raise ValueError(f"ramification type must be 'total' or 'ordinary', got {ram!r}")
    if t not in ("I", "II"):
        raise ValueError(f"sequence type must be 'I' or 'II', got {t!r}")
    if g < len(head):
        raise EmptyRange(f"g = {g} is smaller than the {len(head)} forced gaps for m = {m}")
    tail = list(range(start, last + 1, step))
    out = head + tail
    if len(out) != g:
        raise EmptyRange(f"closed form for ({ram}, {t}, m={m}) has {len(out)} gaps, not g = {g}")
    return out


@dataclass
class GapReport:
    gaps: list
    ram_type: str
    seq_type: str
    genus: int
    functional: Direction
    offset: int
    model: TrigonalModel | None = None

    def to_dict(self) -> dict:
        return {
            "gaps": list(self.gaps),
            "ram_type": self.ram_type,
            "seq_type": self.seq_type,
            "genus": self.genus,
            "functional": list(self.functional),
            "offset": self.offset,
            "model": self.model.to_dict() if self.model else None,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def gap_report(M: TrigonalModel) -> GapReport:
    P = model_polygon(M)
    f, off = _SWEEP[M.case]
    if f is None:
        f = (2, M.beta)
    offset = off(M)
    gaps = gap_sequence(P, f, offset)
    g = genus(P)
    ram, t = _CLASS[M.case]
    try:
        expected = closed_form_gaps(ram, t, M.m, g)
    except EmptyRange as e:
        raise ClosedFormMismatch(f"{M}: {e}") from e
    if gaps != expected or g != model_genus(M):
        raise ClosedFormMismatch(
            f"{M}: sweep gave {gaps} (g={g}), closed form {expected} (g={model_genus(M)})"
        )
    return GapReport(gaps, ram, t, g, Direction(*f), offset, M)


# exact polynomial helpers; coefficient lists, constant term first


def _poly(p) -> list:
    out = [Fraction(c) for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_add(p, q) -> list:
    n = max(len(p), len(q))
    return _poly([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_scale(p, c) -> list:
    return _poly([c * a for a in p])


def poly_mul(p, q) -> list:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _poly(out)


def poly_mindeg(p):
    """Order of vanishing at 0; ``math.inf`` for the zero polynomial."""
    for i, c in enumerate(p):
        if c != 0:
            return i
    return math.inf


@dataclass
class CaseIIITransform:
    alpha: int | float
    beta: int
    C: list
    D: list
    discriminant: list
    discriminant_order: int | float
    model: TrigonalModel | None = field(default=None)


def case_iii_transform(A, B, k, m: int | None = None) -> CaseIIITransform:
    """Shift ``y -> y + k`` in ``y^3 + A y + B`` and read off ``alpha, beta``.

    ``A`` and ``B`` are coefficient lists (constant term first) with
    ``A(0) = -3k^2`` and ``B(0) = 2k^3``.  After the shift the equation is
    ``y^3 + 3k y^2 + x^alpha C(x) y + x^beta D(x)``.  For odd ``beta`` the
    discriminant ``4A^3 + 27B^2`` vanishes to order ``min(2 alpha, beta)``,
    which is ``beta`` precisely when ``beta < 2 alpha``.

    If ``m`` is given the matching case-iii ``TrigonalModel`` is attached.
    """
    k = Fraction(k)
    if k == 0:
        raise NormalFormViolation("k must be nonzero")
    A, B = _poly(A), _poly(B)
    a0 = A[0] if A else 0
    b0 = B[0] if B else 0
    if a0 != -3 * k * k or b0 != 2 * k**3:
        raise NormalFormViolation(
            f"need A(0) = -3k^2 = {-3 * k * k} and B(0) = 2k^3 = {2 * k ** 3}, got {a0}, {b0}"
        )
    shiftA = poly_add(A, [3 * k * k])
    shiftB = poly_add(poly_add(poly_scale(A, k), B), [k**3])
    alpha = poly_mindeg(shiftA)
    beta = poly_mindeg(shiftB)
    if beta == math.inf:
        raise NormalFormViolation("k a_i + b_i vanishes for every i; beta is undefined")
    C = [] if alpha == math.inf else shiftA[alpha:]
    D = shiftB[beta:]
    disc = poly_add(poly_scale(poly_mul(poly_mul(A, A), A), 4), poly_scale(poly_mul(B, B), 27))
    order = poly_mindeg(disc)
    if beta % 2 == 0:
        # the order is min(2 alpha, beta) only when the two leading terms
        # cannot cancel, which needs beta != 2 alpha
        raise BetaEven(f"beta = {beta} is even; the point over x = 0 is not of case iii")
    assert order == min(2 * alpha, beta), (order, alpha, beta)
    if order != beta:
        raise DiscriminantOrderEven(
            f"beta = {beta} is odd but 2 alpha = {2 * alpha} < beta, so the discriminant "
            f"has even order {order}"
        )
    model = TrigonalModel("iii", m, alpha=alpha, beta=beta) if m is not None else None
    return CaseIIITransform(alpha, beta, C, D, disc, order, model)
