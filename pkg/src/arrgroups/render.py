"""SVG picture of the real part of an arrangement in the affine chart used
for the sweep (line at infinity sent to z = 0, before shearing)."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .arrangement import Arrangement, build_lattice
from .exactgeom import apply_to_point
from .wiring import _affine_forms

WIDTH = HEIGHT = 640
MARGIN = 40


def _clip(form, box):
    """Endpoints of ``a x + b y + c = 0`` inside the box, or None."""
    a, b, c = (Fraction(v) for v in form)
    x0, y0, x1, y1 = box
    hits = []
    if b != 0:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 <= y <= y1:
                hits.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 <= x <= x1:
                hits.append((x, y))
    hits = sorted(set(hits))
    if len(hits) < 2:
        return None
    return hits[0], hits[-1]


def render_svg(arr: Arrangement, title: str = "") -> str:
    m, forms = _affine_forms(arr)
    lat = build_lattice(arr)
    affine_pts = []
    for p, s in lat.points:
        q = apply_to_point(m, p)
        if q.coords[2] != 0:
            affine_pts.append((q.affine(), s))
    xs = [p[0] for p, _ in affine_pts] or [Fraction(0)]
    ys = [p[1] for p, _ in affine_pts] or [Fraction(0)]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    pad = span / 5
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    scale = Fraction(WIDTH - 2 * MARGIN) / max(box[2] - box[0], box[3] - box[1])

    def sx(x):
        return float(MARGIN + (x - box[0]) * scale)

    def sy(y):
        return float(HEIGHT - MARGIN - (y - box[1]) * scale)

    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
           'viewBox="0 0 %d %d">' % (WIDTH, HEIGHT, WIDTH, HEIGHT),
           '<rect width="100%" height="100%" fill="white"/>']
    if title:
        out.append('<text x="%d" y="20" font-size="14" font-family="sans-serif">%s</text>'
                   % (MARGIN, escape(title)))
    for label, form in forms:
        seg = _clip(form, box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = seg
        out.append('<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" stroke="black" '
                   'stroke-width="1.2"/>' % (sx(ax), sy(ay), sx(bx), sy(by)))
        out.append('<text x="%.2f" y="%.2f" font-size="12" font-family="sans-serif" '
                   'fill="blue">L%d</text>' % (sx(bx) + 3, sy(by) - 3, label))
    for (x, y), s in affine_pts:
        if len(s) >= 3:
            out.append('<circle cx="%.2f" cy="%.2f" r="%d" fill="red"/>'
                       % (sx(x), sy(y), len(s)))
    out.append('<text x="%d" y="%d" font-size="12" font-family="sans-serif">'
               'L%d is the line at infinity</text>' % (MARGIN, HEIGHT - 12, arr.infinity))
    out.append("</svg>")
    return "\n".join(out) + "\n"


