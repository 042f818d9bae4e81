"""Static SVG rendering of planar (d=2) complexes and their colorings.

Output is a pure function of (complex, coloring, options): coordinates are
formatted from exact rationals with fixed precision, so repeated runs give
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dual import build_dual
from .errors import InputError
from .model import Coloring, Complex

DEFAULT_PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
    "#59a14f", "#edc949", "#b07aa1", "#9c755f",
)


@dataclass(frozen=True)
class RenderOptions:
    width: int = 640
    height: int = 640
    palette: tuple[str, ...] = DEFAULT_PALETTE
    show_dual: bool = False


def _fmt(x: Fraction) -> str:
    """Fixed three-decimal formatting computed in exact arithmetic."""
    n = round(x * 1000)
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 1000}.{n % 1000:03d}"


def render_svg(c: Complex, coloring: Coloring | None = None,
               options: RenderOptions = RenderOptions()) -> str:
    if c.dimension != 2:
        raise InputError(
            f"rendering supports dimension 2 only, got dimension {c.dimension}"
        )
    if not c.simplices:
        raise InputError("nothing to render: complex has no simplices")
    if coloring is not None:
        if len(coloring.colors) != len(c.simplices):
            raise InputError("coloring length does not match simplex count")
        top = max(coloring.colors)
        if top + 1 > len(options.palette):
            raise InputError(
                f"palette has {len(options.palette)} colors but the coloring "
                f"uses color index {top}"
            )

    xs = [p[0] for p in c.vertices]
    ys = [p[1] for p in c.vertices]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span_x = hi_x - lo_x or Fraction(1)
    span_y = hi_y - lo_y or Fraction(1)
    margin = Fraction(1, 20)
    usable_w = Fraction(options.width) * (1 - 2 * margin)
    usable_h = Fraction(options.height) * (1 - 2 * margin)
    scale = min(usable_w / span_x, usable_h / span_y)
    off_x = (Fraction(options.width) - scale * (lo_x + hi_x)) / 2
    off_y = (Fraction(options.height) + scale * (lo_y + hi_y)) / 2

    def xy(p):
        return off_x + scale * p[0], off_y - scale * p[1]

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{options.width}" '
        f'height="{options.height}" viewBox="0 0 {options.width} {options.height}">',
    ]
    for i, s in enumerate(c.simplices):
        pts = [xy(c.vertices[v]) for v in s.vertex_ids]
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        fill = options.palette[coloring.colors[i]] if coloring else "#d8d8d8"
        lines.append(
            f'<polygon points="{coords}" fill="{fill}" stroke="#222222" stroke-width="1"/>'
        )
    if options.show_dual:
        centroids = []
        for s in c.simplices:
            cx = sum(c.vertices[v][0] for v in s.vertex_ids) / 3
            cy = sum(c.vertices[v][1] for v in s.vertex_ids) / 3
            centroids.append(xy((cx, cy)))
        g = build_dual(c)
        for i, j, _f in g.edges():
            (x1, y1), (x2, y2) = centroids[i], centroids[j]
            lines.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="#000000" stroke-width="1.5"/>'
            )
        for x, y in centroids:
            lines.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5" fill="#000000"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
