"""Deterministic SVG rendering of a document.

Shaded polygon, dashed cuts with an x mark at each node, curves in red,
and a marker at each end: a circled cross for a cross-cap landing (mu = 2),
an open circle for a collar landing (mu = 1), a red x at a node terminal.
Markers are drawn geometrically (no font glyphs) so output is byte-stable.
"""
from __future__ import annotations

from fractions import Fraction

from .diagram import BaseDiagram
from .errors import TroplagError
from .topology import EndKind, classify_end
from .tropical import NodeTerminal

SCALE = 48
MARGIN = 40

_POLY_STYLE = 'fill="#e8e8e8" stroke="#000000" stroke-width="2"'
_CUT_STYLE = ('stroke="#000000" stroke-width="1.5" '
              'stroke-dasharray="6 4" fill="none"')
_CURVE_STYLE = 'stroke="#cc0000" stroke-width="2.5" fill="none"'
_MARK_STYLE = 'stroke="#cc0000" stroke-width="1.5" fill="none"'
_NODE_STYLE = 'stroke="#000000" stroke-width="1.5"'


def _fmt(value: Fraction) -> str:
    return f"{float(value):.2f}"


class _Frame:
    def __init__(self, diagram: BaseDiagram):
        x0, y0, x1, y1 = diagram.bounds()
        self.x0, self.y1 = x0, y1
        self.width = float((x1 - x0) * SCALE) + 2 * MARGIN
        self.height = float((y1 - y0) * SCALE) + 2 * MARGIN

    def project(self, p):
        # SVG y grows downward.
        return (_fmt((p.x - self.x0) * SCALE + MARGIN),
                _fmt((self.y1 - p.y) * SCALE + MARGIN))


def _line(frame, a, b, style):
    ax, ay = frame.project(a)
    bx, by = frame.project(b)
    return f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" {style}/>'


def _cross(frame, p, style, radius=5.0):
    px, py = frame.project(p)
    x, y = float(px), float(py)
    r = radius
    return (f'<line x1="{x - r:.2f}" y1="{y - r:.2f}" x2="{x + r:.2f}" '
            f'y2="{y + r:.2f}" {style}/>'
            f'<line x1="{x - r:.2f}" y1="{y + r:.2f}" x2="{x + r:.2f}" '
            f'y2="{y - r:.2f}" {style}/>')


def _circle(frame, p, style, radius=6.0):
    px, py = frame.project(p)
    return f'<circle cx="{px}" cy="{py}" r="{radius:.2f}" {style}/>'


def _end_marker(frame, diagram, curve, end):
    point = curve.end_segment(diagram, end)[1]
    if isinstance(end.terminal, NodeTerminal):
        return _cross(frame, point, _MARK_STYLE, radius=4.0)
    try:
        kind = classify_end(diagram, end)
    except TroplagError:
        return _circle(frame, point, _MARK_STYLE, radius=3.0)
    if kind is EndKind.CROSS_CAP:
        return (_circle(frame, point, _MARK_STYLE, radius=6.0)
                + _cross(frame, point, _MARK_STYLE, radius=4.2))
    return _circle(frame, point, _MARK_STYLE + ' fill="#ffffff"', radius=4.0)


def render_document(doc) -> str:
    """Render the diagram and all curves to SVG 1.1 text."""
    diagram = doc.diagram
    frame = _Frame(diagram)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{frame.width:.0f}" height="{frame.height:.0f}" '
        f'viewBox="0 0 {frame.width:.0f} {frame.height:.0f}">',
    ]

    points = " ".join(",".join(frame.project(v))
                      for v in diagram.polygon_vertices)
    parts.append(f'<polygon points="{points}" {_POLY_STYLE}/>')

    for node, (start, exit_point) in zip(diagram.nodes,
                                         diagram.cut_segments):
        parts.append(_line(frame, start, exit_point, _CUT_STYLE))
        parts.append(_cross(frame, node.position, _NODE_STYLE))

    for curve in doc.curves:
        for e in curve.edges:
            parts.append(_line(frame, *curve.edge_segment(e), _CURVE_STYLE))
        for e in curve.ends:
            parts.append(_line(frame, *curve.end_segment(diagram, e),
                               _CURVE_STYLE))
        for e in curve.ends:
            parts.append(_end_marker(frame, diagram, curve, e))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
