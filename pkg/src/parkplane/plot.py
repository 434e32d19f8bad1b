"""SVG drawings of three-coordinate arrangements in the plane ``x1 + x2 + x3 = 0``.

Geometry upstream is exact; this module converts to floats only to draw.
"""

from __future__ import annotations

import math
from itertools import combinations

from .core import Arrangement, ParkplaneError, label_to_str
from .regions import enumerate_regions


class UnsupportedDimension(ParkplaneError):
    pass


SCALE = 80.0  # pixels per unit
PAD = 0.75  # plane units around the interesting part

_S6 = math.sqrt(6)
_S2 = math.sqrt(2)


def project(x):
    """Orthonormal coordinates in the plane; ``x3 - x2 = const`` comes out horizontal."""
    x1, x2, x3 = (float(v) for v in x)
    return (2 * x1 - x2 - x3) / _S6, (x3 - x2) / _S2


def _normal(h):
    e = [0.0, 0.0, 0.0]
    e[h.p - 1] += 1
    e[h.q - 1] -= 1
    return project(e)


def _line(h):
    """``(point, direction)`` of the drawn line; the normal has squared length 2."""
    nx, ny = _normal(h)
    a = float(h.a)
    return (a * nx / 2, a * ny / 2), (-ny, nx)


def _intersection(h1, h2):
    (px, py), (dx, dy) = _line(h1)
    (qx, qy), (ex, ey) = _line(h2)
    det = dx * ey - dy * ex
    if abs(det) < 1e-12:
        return None
    s = ((qx - px) * ey - (qy - py) * ex) / det
    return px + s * dx, py + s * dy


def _clip(point, direction, box):
    """Segment of the infinite line inside ``box`` (Liang-Barsky)."""
    (px, py), (dx, dy) = point, direction
    xmin, ymin, xmax, ymax = box
    lo, hi = -math.inf, math.inf
    for p0, d, a, b in ((px, dx, xmin, xmax), (py, dy, ymin, ymax)):
        if abs(d) < 1e-12:
            if not a <= p0 <= b:
                return None
            continue
        t1, t2 = (a - p0) / d, (b - p0) / d
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo > hi:
        return None
    return (px + lo * dx, py + lo * dy), (px + hi * dx, py + hi * dy)


def plot_svg(arr: Arrangement, with_labels: bool = True) -> str:
    if arr.n != 3:
        raise UnsupportedDimension(f"plotting needs n = 3, got n = {arr.n}")
    regions = enumerate_regions(arr)
    pts = [(0.0, 0.0)]
    pts += [project(r.witness) for r in regions]
    for h1, h2 in combinations(arr.hyperplanes, 2):
        x = _intersection(h1, h2)
        if x is not None:
            pts.append(x)
    for h in arr:
        pts.append(_line(h)[0])
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    box = (min(xs) - PAD, min(ys) - PAD, max(xs) + PAD, max(ys) + PAD)
    width = (box[2] - box[0]) * SCALE
    height = (box[3] - box[1]) * SCALE

    def tx(x, y):
        return (x - box[0]) * SCALE, (box[3] - y) * SCALE

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">',
        f'<rect x="0" y="0" width="{width:.2f}" height="{height:.2f}" fill="#ffffff"/>',
        '<g class="hyperplanes" stroke="#000000" stroke-width="1.5">',
    ]
    for h in arr:
        seg = _clip(*_line(h), box)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = (tx(*seg[0]), tx(*seg[1]))
        out.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}">'
            f"<title>{h}</title></line>"
        )
    out.append("</g>")
    ox, oy = tx(0.0, 0.0)
    out.append(f'<circle class="origin" cx="{ox:.2f}" cy="{oy:.2f}" r="3" fill="#000000"/>')
    if with_labels:
        out.append('<g class="labels" font-family="sans-serif" font-size="12" text-anchor="middle">')
        for r in regions:
            lx, ly = tx(*project(r.witness))
            out.append(f'<text x="{lx:.2f}" y="{ly:.2f}">{label_to_str(r.label)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
