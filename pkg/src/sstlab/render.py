"""Static SVG rendering of instances.

One labeled circle per vertex, one line per edge of each named set.
The set labeled "B" is drawn solid black; the remaining sets cycle
through dashed styles in sorted label order.  The bounding box of the
points is padded by 5% and scaled uniformly onto a fixed canvas, and
all emitted numbers are integers of a fine internal grid, so identical
input yields identical bytes.
"""

from __future__ import annotations

from fractions import Fraction

from .instances import Instance

CANVAS = 640
_MARGIN_NUM = Fraction(1, 20)  # 5% padding per side

#: (stroke, dash pattern or None, width); "B" always takes the first.
_STYLES: tuple[tuple[str, str | None, int], ...] = (
    ("#000000", None, 3),
    ("#c02020", "10,6", 2),
    ("#2050c0", "3,5", 2),
    ("#108040", "12,3,3,3", 2),
    ("#806010", "6,6", 2),
)


def _scaler(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    width = max(maxx - minx, 1)
    height = max(maxy - miny, 1)
    span = max(width, height)
    pad = _MARGIN_NUM * span
    scale = Fraction(CANVAS) / (span + 2 * pad)
    # Center the drawing; flip y because SVG grows downward.
    offx = (Fraction(CANVAS) - scale * width) / 2
    offy = (Fraction(CANVAS) - scale * height) / 2

    def to_canvas(p) -> tuple[int, int]:
        cx = offx + scale * (p[0] - minx)
        cy = Fraction(CANVAS) - (offy + scale * (p[1] - miny))
        return round(cx), round(cy)

    return to_canvas


def render_svg(instance: Instance, labels: list[str] | None = None) -> str:
    """Render the instance's points and the chosen edge sets (all named
    sets when labels is None) as an SVG 1.1 document."""
    if labels is None:
        labels = sorted(instance.edge_sets)
    for label in labels:
        if label not in instance.edge_sets:
            raise ValueError(f"instance has no edge set labeled {label!r}")
    to_canvas = _scaler(instance.points)
    coords = [to_canvas(p) for p in instance.points]

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
    ]
    ordered = ["B"] if "B" in labels else []
    ordered += [lb for lb in sorted(labels) if lb != "B"]
    for slot, label in enumerate(ordered):
        stroke, dash, width = _STYLES[slot % len(_STYLES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        parts.append(f'  <g stroke="{stroke}" stroke-width="{width}"{dash_attr}>')
        for u, v in instance.edge_sets[label]:
            (x1, y1), (x2, y2) = coords[u], coords[v]
            parts.append(f'    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        parts.append("  </g>")
    for i, (x, y) in enumerate(coords):
        parts.append(
            f'  <circle cx="{x}" cy="{y}" r="5" fill="#ffffff" '
            'stroke="#000000" stroke-width="1.5"/>'
        )
        parts.append(
            f'  <text x="{x + 8}" y="{y - 8}" font-family="monospace" '
            f'font-size="14">{i}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
