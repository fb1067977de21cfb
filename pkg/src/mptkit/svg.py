"""Deterministic SVG drawings of L-systems and tangent segment systems."""

from __future__ import annotations

from fractions import Fraction

from .geometry import ContactLSystem, CyclicSegmentSystem
from .representations import LinearLSystem, MptRepresentation, rep_to_lsystem

MARGIN = 20
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _num(x) -> str:
    return f"{float(x):.3f}".rstrip("0").rstrip(".")


def render_svg(obj, scale: int = 40, labels: bool = False) -> str:
    """SVG 1.1 text; world y grows upward, so y is negated on screen."""
    if isinstance(obj, MptRepresentation):
        obj = rep_to_lsystem(obj)
    if isinstance(obj, ContactLSystem):
        obj = obj.lsystem()
    if isinstance(obj, LinearLSystem):
        lines = [[s.top, s.corner, s.right] for s in obj.shapes]
        anchors = [s.corner for s in obj.shapes]
        xs = [p[0] for line in lines for p in line] or [0, 1]
        lo, hi = min(xs) - 1, max(xs) + 1
        reference = [(lo, -lo), (hi, -hi)]
    elif isinstance(obj, CyclicSegmentSystem):
        lines = [[tuple(s.a), tuple(s.b)] for s in obj.segments]
        anchors = [tuple(p) for p in obj.tangency_points]
        xs = [p[0] for line in lines for p in line] or [0, 1]
        lo, hi = min(xs) - 1, max(xs) + 1
        steps = 64
        reference = []
        for i in range(steps + 1):
            x = lo + (hi - lo) * Fraction(i, steps)
            reference.append((x, x * x))
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")

    pts = [p for line in lines for p in line] + reference
    min_x = min(p[0] for p in pts)
    max_y = max(p[1] for p in pts)
    width = (max(p[0] for p in pts) - min_x) * scale + 2 * MARGIN
    height = (max_y - min(p[1] for p in pts)) * scale + 2 * MARGIN

    def screen(p) -> str:
        return f"{_num((p[0] - min_x) * scale + MARGIN)},{_num((max_y - p[1]) * scale + MARGIN)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- screen y = -(world y): the drawing is flipped vertically -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" height="{_num(height)}">',
        f'<polyline class="reference" fill="none" stroke="#999999" stroke-dasharray="4 3" points="{" ".join(screen(p) for p in reference)}"/>',
    ]
    for i, line in enumerate(lines):
        color = COLORS[i % len(COLORS)]
        out.append(
            f'<polyline class="shape" id="v{i}" fill="none" stroke="{color}" stroke-width="2" '
            f'points="{" ".join(screen(p) for p in line)}"/>'
        )
    if labels:
        for i, p in enumerate(anchors):
            x, y = screen(p).split(",")
            out.append(f'<text x="{x}" y="{y}" font-size="12" dx="4" dy="-4">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
