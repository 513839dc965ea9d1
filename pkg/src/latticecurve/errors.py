"""Exception hierarchy shared by the latticecurve modules."""


class LatticeCurveError(Exception):
    """Base class for every error raised by this package."""


class DegeneratePolygon(LatticeCurveError, ValueError):
    """An operation needing a full-dimensional polygon got a point or segment."""


class NotUnimodular(LatticeCurveError, ValueError):
    """A matrix passed as a lattice automorphism has determinant other than +-1."""


class ShapeError(LatticeCurveError, ValueError):
    """Polygon does not satisfy the preconditions of ``shape_params``."""


class FanError(LatticeCurveError, ValueError):
    """Base class for fan invariant violations.

    ``index`` is the position (in counter-clockwise order where known) of the
    offending ray or of the first ray of an offending adjacent pair.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NonPrimitiveRay(FanError):
    pass


class NotCounterClockwise(FanError):
    pass


class NotComplete(FanError):
    pass


class NotSmooth(FanError):
    pass


class EmptyPolytope(LatticeCurveError, ValueError):
    """The half-plane system of a divisor contains no lattice point (h^0 = 0)."""

    h0 = 0


class NotNef(LatticeCurveError, ValueError):
    pass


class NoFibrations(LatticeCurveError, ValueError):
    """The fan has no pair of opposite rays (the projective plane)."""


class NotRelativelyMinimal(LatticeCurveError, ValueError):
    pass


class CensusViolation(LatticeCurveError, AssertionError):
    """An exceptional (g, q) polygon is not the triangle the classification predicts."""


class BranchMismatch(LatticeCurveError, ValueError):
    pass


class ModelError(LatticeCurveError, ValueError):
    """Invalid trigonal model parameters."""


class ClosedFormMismatch(LatticeCurveError, AssertionError):
    pass


class EmptyRange(LatticeCurveError, ValueError):
    pass


class NormalFormViolation(LatticeCurveError, ValueError):
    pass


class BetaEven(LatticeCurveError, ValueError):
    pass


class DiscriminantOrderEven(LatticeCurveError, ValueError):
    """The discriminant has even order at x = 0 although beta is odd (2*alpha < beta)."""


class CapExceeded(LatticeCurveError, ValueError):
    pass


class ParseError(LatticeCurveError, ValueError):
    """Input text could not be read as a polygon, fan or model."""
