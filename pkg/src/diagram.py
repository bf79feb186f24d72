"""
Lattice charts: the RO(C₂)-graded basis of a quadric and the groups of ℍ.

A class in grading a + bσ sits at (a, b).  Text output is a character grid
followed by a legend; SVG output goes through reportlab's graphics layer.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field

from . import quadric
from .errors import OutOfScopeRegion
from .grading import Grading
from .hpoint import group_at
from .ring import quadric as quadric_space
from .ring import render_mono

try:
    from reportlab.graphics import renderSVG
    from reportlab.graphics.shapes import Circle, Drawing, Line, Rect, String
    from reportlab.lib import colors

    REPORTLAB_AVAILABLE = True
except ImportError:
    REPORTLAB_AVAILABLE = False

log = logging.getLogger("eqquad.diagram")

CELL = 28
MARGIN = 40


@dataclass
class LatticePoint:
    x: int
    y: int
    shape: str  # "dot", "double", "square", "ring", "out"
    labels: list[str] = field(default_factory=list)


@dataclass
class Chart:
    title: str
    points: list[LatticePoint]
    xs: tuple[int, int]
    ys: tuple[int, int]


# ── chart data ─────────────────────────────────────────────────────────────────
def ro2_chart(p: int) -> Chart:
    space = quadric_space(p)
    cells: dict[tuple[int, int], list[str]] = defaultdict(list)
    for mono, (u, s) in quadric.ro2_basis(p):
        cells[(u, s)].append(render_mono(mono, space))
    points = [
        LatticePoint(x, y, "double" if len(labels) > 1 else "dot", labels) for (x, y), labels in sorted(cells.items())
    ]
    xs = [x for x, _ in cells] + [0]
    ys = [y for _, y in cells] + [0]
    return Chart(f"RO(C2)-graded basis of XQ^{2 * p}", points, (min(xs), max(xs)), (min(ys), max(ys)))


_SHAPES = {"A(C2)": "square", "Z": "dot", "Z/2": "ring"}


def hpoint_chart(radius: int = 8) -> Chart:
    points = []
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            try:
                info = group_at(Grading(x, y, 0))
            except OutOfScopeRegion:
                points.append(LatticePoint(x, y, "out"))
                continue
            if info.kind != "0":
                points.append(LatticePoint(x, y, _SHAPES[info.kind], [info.kind]))
    return Chart("H^{a+b sigma} of a point", points, (-radius, radius), (-radius, radius))


# ── text ───────────────────────────────────────────────────────────────────────
_CHARS = {"dot": "o", "double": "@", "square": "#", "ring": "x", "out": "?"}


def render_text(chart: Chart) -> str:
    at = {(pt.x, pt.y): pt for pt in chart.points}
    lines = [chart.title, ""]
    for y in range(chart.ys[1], chart.ys[0] - 1, -1):
        row = []
        for x in range(chart.xs[0], chart.xs[1] + 1):
            pt = at.get((x, y))
            if pt is not None:
                row.append(_CHARS[pt.shape])
            elif x == 0 or y == 0:
                row.append("+")
            else:
                row.append(".")
        lines.append(f"{y:>4} " + " ".join(row))
    lines.append("     " + " ".join(str(abs(x) % 10) for x in range(chart.xs[0], chart.xs[1] + 1)))
    legend = [pt for pt in chart.points if pt.labels and pt.shape in ("dot", "double")]
    if legend and chart.title.startswith("RO"):
        lines.append("")
        for pt in legend:
            lines.append(f"({pt.x},{pt.y}): " + ", ".join(pt.labels))
    return "\n".join(lines) + "\n"


# ── SVG ────────────────────────────────────────────────────────────────────────
def render_svg(chart: Chart) -> str:
    """
    Draw the chart with reportlab.graphics.

    Raises:
        RuntimeError: reportlab is not installed
    """
    if not REPORTLAB_AVAILABLE:
        raise RuntimeError("ReportLab not installed. Install with: pip install reportlab")
    (x0, x1), (y0, y1) = chart.xs, chart.ys
    width = (x1 - x0) * CELL + 2 * MARGIN
    height = (y1 - y0) * CELL + 2 * MARGIN + 20
    d = Drawing(width, height)

    def pos(x: int, y: int) -> tuple[float, float]:
        return MARGIN + (x - x0) * CELL, MARGIN + (y - y0) * CELL

    ox, oy = pos(0, 0)
    d.add(Line(MARGIN, oy, width - MARGIN, oy, strokeColor=colors.grey))
    d.add(Line(ox, MARGIN, ox, height - MARGIN - 20, strokeColor=colors.grey))
    for pt in chart.points:
        cx, cy = pos(pt.x, pt.y)
        if pt.shape == "square":
            d.add(Rect(cx - 5, cy - 5, 10, 10, fillColor=colors.black))
        elif pt.shape == "ring":
            d.add(Circle(cx, cy, 4, fillColor=colors.white, strokeColor=colors.black))
        elif pt.shape == "out":
            d.add(Circle(cx, cy, 1, fillColor=colors.lightgrey, strokeColor=colors.lightgrey))
        else:
            d.add(Circle(cx, cy, 4, fillColor=colors.black))
            if pt.shape == "double":
                d.add(Circle(cx, cy, 8, fillColor=None, strokeColor=colors.black))
        for k, label in enumerate(lbl for lbl in pt.labels if "m[" in lbl):
            d.add(String(cx + 10, cy + 4 - 10 * k, label, fontSize=7))
    d.add(String(MARGIN, height - 20, chart.title, fontSize=10))
    log.debug("drew %d lattice points", len(chart.points))
    return renderSVG.drawToString(d)
