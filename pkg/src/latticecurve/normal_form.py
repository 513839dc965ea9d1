"""Exact normal form of lattice polygons under unimodular affine maps.

Two polygons are equivalent when one is the image of the other under
``v -> M v + t`` with ``M`` an integer matrix of determinant +-1.

For every vertex and both traversal orientations the polygon is moved so
that the vertex sits at the origin, its outgoing edge runs along the
positive z-axis and the polygon lies in the upper half plane.  That pins the
map down to a shear ``(z, w) -> (z + k w, w)``, and ``k`` is fixed by
reducing the incoming edge's z-coordinate modulo its height.  The smallest of
the resulting vertex tuples is the normal form.
"""

from __future__ import annotations

from math import gcd

from .polygon import LatticePolygon, _egcd, make_polygon

__all__ = ["normal_form", "unimodular_equivalent", "normal_form_polygon"]


def _chart(u, orientation):
    """Unimodular matrix sending primitive ``u`` to (1, 0).

    ``orientation=+1`` gives determinant 1 and keeps the left side of ``u``
    on top; ``-1`` gives determinant -1 and sends the right side on top.
    """
    ux, uy = u
    g, s, t = _egcd(ux, uy)
    assert g == 1
    # first row (s, t) has s*ux + t*uy = 1; second row annihilates u
    return ((s, t), (-orientation * uy, orientation * ux))


def normal_form(P: LatticePolygon) -> tuple:
    """Canonical counter-clockwise vertex tuple of the unimodular class of ``P``."""
    v = P.vertices
    n = len(v)
    if n == 1:
        return ((0, 0),)
    if n == 2:
        L = gcd(v[1][0] - v[0][0], v[1][1] - v[0][1])
        return ((0, 0), (L, 0))
    best = None
    for i in range(n):
        for orientation in (1, -1):
            seq = [v[(i + orientation * j) % n] for j in range(n)]
            ox, oy = seq[0]
            ez, ew = seq[1][0] - ox, seq[1][1] - oy
            L = gcd(ez, ew)
            (a, b), (c, d) = _chart((ez // L, ew // L), orientation)
            img = [(a * (z - ox) + b * (w - oy), c * (z - ox) + d * (w - oy)) for z, w in seq]
            pz, pw = img[-1]
            # shear so that the incoming edge starts at 0 <= z < height
            k = -(pz // pw)
            img = tuple((z + k * w, w) for z, w in img)
            if best is None or img < best:
                best = img
    return best


def normal_form_polygon(P: LatticePolygon) -> LatticePolygon:
    return make_polygon(normal_form(P))


def unimodular_equivalent(P: LatticePolygon, Q: LatticePolygon) -> bool:
    if len(P.vertices) != len(Q.vertices) or P.twice_area != Q.twice_area:
        return False
    return normal_form(P) == normal_form(Q)
