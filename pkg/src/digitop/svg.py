"""Deterministic SVG emission for images, paths, and homotopy grids."""

from __future__ import annotations

from typing import Dict, List, Tuple

from .core import DigitalImage, Point
from .homotopy import HomotopyGrid
from .paths import LatticePath

SCALE = 40
MARGIN = 30
PALETTE = (
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
)


def _xy(p: Point) -> Tuple[int, int]:
    x = p.coords[0]
    y = p.coords[1] if p.dim > 1 else 0
    return x, y


def _bounds(points) -> Tuple[int, int, int, int]:
    xs = [c[0] for c in points]
    ys = [c[1] for c in points]
    return min(xs), min(ys), max(xs), max(ys)


def _project(x: int, y: int, min_x: int, max_y: int) -> Tuple[int, int]:
    # Flip the vertical axis so larger y is drawn higher.
    return MARGIN + SCALE * (x - min_x), MARGIN + SCALE * (max_y - y)


def render_image_svg(image: DigitalImage,
                     highlight: Tuple[Point, ...] = ()) -> str:
    coords = [_xy(p) for p in image.points]
    min_x, min_y, max_x, max_y = _bounds(coords)
    w = 2 * MARGIN + SCALE * (max_x - min_x)
    h = 2 * MARGIN + SCALE * (max_y - min_y)
    parts: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}">'
    ]
    if min_x <= 0 <= max_x:
        x0, _ = _project(0, 0, min_x, max_y)
        parts.append(
            f'<line x1="{x0}" y1="0" x2="{x0}" y2="{h}" '
            'stroke="#cccccc" stroke-dasharray="4 4"/>')
    if min_y <= 0 <= max_y:
        _, y0 = _project(0, 0, min_x, max_y)
        parts.append(
            f'<line x1="0" y1="{y0}" x2="{w}" y2="{y0}" '
            'stroke="#cccccc" stroke-dasharray="4 4"/>')
    for p, q in image.adjacent_pairs():
        (x1, y1), (x2, y2) = _xy(p), _xy(q)
        a = _project(x1, y1, min_x, max_y)
        b = _project(x2, y2, min_x, max_y)
        parts.append(
            f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
            'stroke="#555555"/>')
    marked = set(highlight)
    for p in image.points:
        x, y = _project(*_xy(p), min_x, max_y)
        fill = "#e15759" if p in marked else (
            "#222222" if p != image.basepoint else "#4e79a7")
        radius = 7 if p == image.basepoint or p in marked else 5
        parts.append(f'<circle cx="{x}" cy="{y}" r="{radius}" fill="{fill}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_path_svg(a: LatticePath) -> str:
    return render_image_svg(a.target, highlight=tuple(a.steps))


def render_grid_svg(h: HomotopyGrid) -> str:
    """Level-set shading: one colour per distinct grid value."""

    values = sorted({p for row in h.rows for p in row})
    colour: Dict[Point, str] = {
        p: PALETTE[i % len(PALETTE)] for i, p in enumerate(values)
    }
    cell = 24
    w = cell * (h.width + 1) + 2 * MARGIN
    ht = cell * (h.height + 1) + 2 * MARGIN
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{ht}">'
    ]
    for t, row in enumerate(h.rows):
        for s, p in enumerate(row):
            x = MARGIN + cell * s
            # Row zero is drawn at the bottom.
            y = MARGIN + cell * (h.height - t)
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                f'fill="{colour[p]}" stroke="#ffffff"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
