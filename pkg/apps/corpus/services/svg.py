"""
SVG drawings of symmetric realizations.

Both lifted copies of every quotient edge are drawn, the mirror axis is
dashed, and each segment is labeled with its quotient edge index. The
drawing group flips the y-axis and scales, so the coordinates written into
the file are the exact data coordinates of the lifted points.
"""
from fractions import Fraction
from pathlib import Path
from typing import List, Sequence

from apps.gain_graphs.graph import ColoredGraph, lifted_points

CANVAS = 400
MARGIN = 40
SHEET_COLORS = ('#1f4e79', '#a33b20')


def _number(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return repr(float(value))


class SVG:
    def __init__(self):
        self.svg = ""

    def header(self, width, height):
        self.svg += (
            f'<?xml version="1.0" standalone="no"?>\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n'
        )

    def group_start(self, **attr):
        rendered = ' '.join(f'{key.replace("_", "-")}="{value}"' for key, value in attr.items())
        self.svg += f'<g {rendered}>\n'

    def group_end(self):
        self.svg += '</g>\n'

    def line(self, x1, y1, x2, y2, extra=""):
        self.svg += (
            f'<line x1="{_number(x1)}" y1="{_number(y1)}" x2="{_number(x2)}" y2="{_number(y2)}" '
            f'vector-effect="non-scaling-stroke" {extra}/>\n'
        )

    def circle(self, cx, cy, r, extra=""):
        self.svg += f'<circle cx="{_number(cx)}" cy="{_number(cy)}" r="{r}" {extra}/>\n'

    def text(self, x, y, string, extra=""):
        self.svg += f'<text x="{_number(x)}" y="{_number(y)}" {extra}>{string}</text>\n'

    def get_svg(self):
        return f"{self.svg}</svg>\n"


def _extent(points: Sequence) -> Fraction:
    extent = max([abs(Fraction(c)) for point in points for c in point] + [Fraction(1)])
    return extent


def render_svg(g: ColoredGraph, placement: Sequence[Sequence], path=None) -> str:
    """
    Draw the lift of g at placement; writes the file when path is given.

    Returns the SVG text.
    """
    points = lifted_points(placement)
    extent = _extent(points.values())
    scale = Fraction(CANVAS - 2 * MARGIN, 2) / extent
    radius = float(Fraction(4) / scale)
    center = CANVAS // 2

    svg = SVG()
    svg.header(CANVAS, CANVAS)
    svg.group_start(transform=f"translate({center},{center}) scale({float(scale)},{-float(scale)})")
    svg.line(0, -extent, 0, extent, extra='stroke="#888" stroke-dasharray="6,4" class="mirror-axis"')
    labels: List = []
    for index, edge in enumerate(g.edges):
        for sheet in (0, 1):
            start = points[(edge.tail, sheet)]
            end = points[(edge.head, sheet ^ int(edge.gain))]
            svg.line(*start, *end, extra=f'stroke="{SHEET_COLORS[sheet]}" class="edge-{index}"')
            if sheet == 0:
                labels.append((index, start, end))
    for (vertex, sheet), (x, y) in sorted(points.items()):
        svg.circle(x, y, radius, extra=f'fill="{SHEET_COLORS[sheet]}" class="vertex-{vertex}-{sheet}"')
    svg.group_end()

    svg.group_start(font_family="sans-serif", font_size="11")
    for index, start, end in labels:
        mid_x = (Fraction(start[0]) + Fraction(end[0])) / 2
        mid_y = (Fraction(start[1]) + Fraction(end[1])) / 2
        svg.text(center + mid_x * scale + 3, center - mid_y * scale - 3, str(index))
    svg.group_end()

    text = svg.get_svg()
    if path is not None:
        Path(path).write_text(text)
    return text
