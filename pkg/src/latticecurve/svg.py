"""Fixed-style SVG drawings of polygons and fans.

Output depends only on the input: no timestamps, no randomness, and all
coordinates are integers, so the bytes are stable across runs.
"""

from __future__ import annotations

from .polygon import LatticePolygon, interior_points, lattice_width

UNIT = 12
MARGIN = 2  # grid units around the drawing


def _header(w, h) -> list:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="white"/>',
    ]


def polygon_svg(P: LatticePolygon, arrows: bool = True) -> str:
    """Grid, stroked polygon, filled interior points and width directions."""
    zs = [v[0] for v in P.vertices]
    ws = [v[1] for v in P.vertices]
    z0, z1 = min(zs) - MARGIN, max(zs) + MARGIN
    w0, w1 = min(ws) - MARGIN, max(ws) + MARGIN
    W, H = (z1 - z0) * UNIT, (w1 - w0) * UNIT

    def X(z):
        return (z - z0) * UNIT

    def Y(w):
        return (w1 - w) * UNIT

    out = _header(W, H)
    out.append('<g stroke="#dddddd" stroke-width="1">')
    for z in range(z0, z1 + 1):
        out.append(f'<line x1="{X(z)}" y1="0" x2="{X(z)}" y2="{H}"/>')
    for w in range(w0, w1 + 1):
        out.append(f'<line x1="0" y1="{Y(w)}" x2="{W}" y2="{Y(w)}"/>')
    out.append("</g>")
    pts = " ".join(f"{X(z)},{Y(w)}" for z, w in P.vertices)
    if len(P.vertices) >= 3:
        out.append(f'<polygon points="{pts}" fill="none" stroke="black" stroke-width="2"/>')
    elif len(P.vertices) == 2:
        out.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>')
    for z, w in P.vertices:
        out.append(f'<circle class="vertex" cx="{X(z)}" cy="{Y(w)}" r="3" fill="white" stroke="black"/>')
    if P.is_full_dimensional:
        for z, w in interior_points(P):
            out.append(f'<circle class="interior" cx="{X(z)}" cy="{Y(w)}" r="3" fill="black"/>')
        if arrows:
            # each width direction drawn as a short arrow from the lower-left corner
            ox, oy = X(z0 + 1), Y(w0 + 1)
            for dx, dy in lattice_width(P).witnesses:
                out.append(
                    f'<line class="width" x1="{ox}" y1="{oy}" x2="{ox + dx * UNIT}" '
                    f'y2="{oy - dy * UNIT}" stroke="#c03030" stroke-width="2"/>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def fan_svg(rays) -> str:
    """Rays drawn from the origin, each scaled to its lattice generator."""
    r = max(max(abs(x), abs(y)) for x, y in rays) + MARGIN
    W = H = 2 * r * UNIT

    def X(x):
        return (x + r) * UNIT

    def Y(y):
        return (r - y) * UNIT

    out = _header(W, H)
    out.append('<g stroke="#dddddd" stroke-width="1">')
    for t in range(-r, r + 1):
        out.append(f'<line x1="{X(t)}" y1="0" x2="{X(t)}" y2="{H}"/>')
        out.append(f'<line x1="0" y1="{Y(t)}" x2="{W}" y2="{Y(t)}"/>')
    out.append("</g>")
    for x, y in rays:
        out.append(
            f'<line class="ray" x1="{X(0)}" y1="{Y(0)}" x2="{X(x)}" y2="{Y(y)}" '
            'stroke="black" stroke-width="2"/>'
        )
        out.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
