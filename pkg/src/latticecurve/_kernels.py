"""Compiled inner loops: the lattice-width reduction and the polygon search.

Both are plain Python functions compiled with numba.  ``lattice_width``
in :mod:`latticecurve.polygon` calls the compiled reduction for ordinary
coordinates and the very same source through ``.py_func`` (exact Python
integers) when coordinates are large enough to risk int64 overflow.
"""

from __future__ import annotations

from functools import cmp_to_key
from math import gcd

import numpy as np
from numba import njit

# coefficient box searched around a reduced basis
COEFF_BOUND = 2

# above this coordinate size the int64 kernel is not trusted
SAFE_COORD = 1 << 16


@njit(cache=True)
def lattice_width_kernel(vz, vw):
    """Return ``(q, nwit, b1x, b1y, b2x, b2y)`` for a full-dimensional polygon.

    The width ``d -> max d.v - min d.v`` is a norm; Lagrange-Gauss reduction
    of the standard basis under that norm gives ``b1, b2``, and the minimum
    over primitive ``a b1 + b b2`` with ``|a|, |b| <= 2`` is the lattice
    width.  ``nwit`` counts the minimizing directions up to sign.
    """
    n = len(vz)

    def width(x, y):
        lo = x * vz[0] + y * vw[0]
        hi = lo
        for i in range(1, n):
            t = x * vz[i] + y * vw[i]
            if t < lo:
                lo = t
            elif t > hi:
                hi = t
        return hi - lo

    def line(ax, ay, bx, by, k):
        # width of b - k a
        return width(bx - k * ax, by - k * ay)

    def argmin(ax, ay, bx, by):
        # leftmost minimizer of the convex k -> width(b - k a)
        hi = 0
        while line(ax, ay, bx, by, hi + 1) - line(ax, ay, bx, by, hi) < 0:
            hi = 2 * hi + 1
        lo = -1
        while line(ax, ay, bx, by, lo + 1) - line(ax, ay, bx, by, lo) >= 0:
            lo *= 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if line(ax, ay, bx, by, mid + 1) - line(ax, ay, bx, by, mid) >= 0:
                hi = mid
            else:
                lo = mid
        return hi

    b1x, b1y, b2x, b2y = 1, 0, 0, 1
    n1 = width(b1x, b1y)
    n2 = width(b2x, b2y)
    while True:
        if n2 < n1:
            b1x, b1y, b2x, b2y = b2x, b2y, b1x, b1y
            n1, n2 = n2, n1
        mu = argmin(b1x, b1y, b2x, b2y)
        b2x, b2y = b2x - mu * b1x, b2y - mu * b1y
        n2 = width(b2x, b2y)
        if n2 >= n1:
            break

    q = -1
    nwit = 0
    for a in range(0, COEFF_BOUND + 1):
        for b in range(-COEFF_BOUND, COEFF_BOUND + 1):
            if a == 0 and b <= 0:
                continue
            # gcd(a, b) == 1
            x, y = a, abs(b)
            while y:
                x, y = y, x % y
            if x != 1:
                continue
            v = width(a * b1x + b * b2x, a * b1y + b * b2y)
            if q < 0 or v < q:
                q = v
                nwit = 1
            elif v == q:
                nwit += 1
    return q, nwit, b1x, b1y, b2x, b2y


def run_lattice_width_kernel(vertices):
    """Dispatch to the compiled kernel or to its exact-integer source."""
    if max(max(abs(z), abs(w)) for z, w in vertices) <= SAFE_COORD:
        vz = np.fromiter((v[0] for v in vertices), dtype=np.int64, count=len(vertices))
        vw = np.fromiter((v[1] for v in vertices), dtype=np.int64, count=len(vertices))
        return tuple(int(t) for t in lattice_width_kernel(vz, vw))
    return lattice_width_kernel.py_func([v[0] for v in vertices], [v[1] for v in vertices])


# polygon search -----------------------------------------------------------


def _angle_cmp(a, b) -> int:
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def candidates(N: int, sz: int):
    """Points of ``[0, N]^2`` after the start ``(sz, 0)``, relative to it, by angle.

    They all lie in the half-open upper half plane around the start, so the
    exact cross-product comparison is a total preorder.
    """
    pts = [(z - sz, w) for w in range(N + 1) for z in range(N + 1) if w > 0 or z > sz]
    pts.sort(key=cmp_to_key(_angle_cmp))
    return np.array([p[0] for p in pts], dtype=np.int64), np.array([p[1] for p in pts], dtype=np.int64)


def oracle_directions(bound: int):
    """Primitive directions up to sign with ``max(|x|, |y|) <= bound``, by that size."""
    ds = [
        (x, y)
        for x in range(0, bound + 1)
        for y in range(-bound, bound + 1)
        if (x > 0 or y > 0) and gcd(x, y) == 1
    ]
    ds.sort(key=lambda d: (max(abs(d[0]), abs(d[1])), d))
    return (
        np.array([d[0] for d in ds], dtype=np.int64),
        np.array([d[1] for d in ds], dtype=np.int64),
        np.array([max(abs(d[0]), abs(d[1])) for d in ds], dtype=np.int64),
    )


MODE_EMIT = 0
MODE_WIDTH_ORACLE = 1

CODE_WIDTH = 1
CODE_WITNESSES = 2


@njit(cache=True)
def polygon_search(N, sz, mode, max_twice_area, cz, cw, dx, dy, dm):
    """Depth-first search over convex chains starting at ``(sz, 0)``.

    Returns ``(coords, offsets, codes, visited)``.  In emit mode ``coords``
    holds every polygon found; in width-oracle mode only those where the
    reduction disagrees with the brute-force minimum over ``dx, dy`` (code 1)
    or finds a different number of minimizing directions (code 2).
    ``max_twice_area < 0`` disables the area bound.
    """
    nc = len(cz)
    maxd = nc + 2
    chz = np.zeros(maxd, np.int64)
    chw = np.zeros(maxd, np.int64)
    start = np.zeros(maxd, np.int64)
    minz = np.zeros(maxd, np.int64)
    area = np.zeros(maxd, np.int64)
    cap = 1024
    coords = np.zeros(cap, np.int64)
    ncoords = 0
    offsets = [0]
    codes = [0]
    codes.pop()
    visited = 0
    vz = np.zeros(maxd, np.int64)
    vw = np.zeros(maxd, np.int64)

    top = 0
    while True:
        j = start[top]
        pushed = False
        while j < nc:
            cx = cz[j]
            cy = cw[j]
            if top >= 1:
                bx = chz[top]
                by = chw[top]
                ax = chz[top - 1]
                ay = chw[top - 1]
                # strict left turn at b, and c strictly after b in angle
                if (bx - ax) * (cy - by) - (by - ay) * (cx - bx) <= 0:
                    j += 1
                    continue
                tri = bx * cy - by * cx
                if tri <= 0:
                    j += 1
                    continue
            else:
                tri = 0
            a2 = area[top] + tri
            if max_twice_area >= 0 and a2 > max_twice_area:
                j += 1
                continue
            start[top] = j + 1
            top += 1
            chz[top] = cx
            chw[top] = cy
            start[top] = j + 1
            minz[top] = min(minz[top - 1], cx)
            area[top] = a2
            pushed = True
            break
        if not pushed:
            if top == 0:
                break
            top -= 1
            continue
        if top < 2 or minz[top] + sz != 0:
            continue
        bx = chz[top - 1]
        by = chw[top - 1]
        cx = chz[top]
        cy = chw[top]
        if (cx - bx) * (-cy) - (cy - by) * (-cx) <= 0:
            continue
        # a closed convex polygon with vertices chain[0..top]
        visited += 1
        k = top + 1
        code = 0
        if mode == MODE_WIDTH_ORACLE:
            for i in range(k):
                vz[i] = chz[i] + sz
                vw[i] = chw[i]
            q, nwit, _, _, _, _ = lattice_width_kernel(vz[:k], vw[:k])
            # brute force over the box of size 2 max(width(1,0), width(0,1))
            zlo = vz[0]
            zhi = vz[0]
            wlo = vw[0]
            whi = vw[0]
            for i in range(1, k):
                zlo = min(zlo, vz[i])
                zhi = max(zhi, vz[i])
                wlo = min(wlo, vw[i])
                whi = max(whi, vw[i])
            bound = 2 * max(zhi - zlo, whi - wlo)
            best = -1
            cnt = 0
            for t in range(len(dx)):
                if dm[t] > bound:
                    break
                x = dx[t]
                y = dy[t]
                lo = x * vz[0] + y * vw[0]
                hi = lo
                for i in range(1, k):
                    s = x * vz[i] + y * vw[i]
                    if s < lo:
                        lo = s
                    elif s > hi:
                        hi = s
                wd = hi - lo
                if best < 0 or wd < best:
                    best = wd
                    cnt = 1
                elif wd == best:
                    cnt += 1
            if best != q:
                code = CODE_WIDTH
            elif cnt != nwit:
                code = CODE_WITNESSES
            if code == 0:
                continue
        if ncoords + 2 * k > cap:
            while ncoords + 2 * k > cap:
                cap *= 2
            grown = np.zeros(cap, np.int64)
            grown[:ncoords] = coords[:ncoords]
            coords = grown
        for i in range(k):
            coords[ncoords] = chz[i] + sz
            coords[ncoords + 1] = chw[i]
            ncoords += 2
        offsets.append(ncoords)
        codes.append(code)
    return coords[:ncoords], np.array(offsets), np.array(codes, dtype=np.int64), visited
