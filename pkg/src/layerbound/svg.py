from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .drawing import TwoLayerDrawing, crossing_profile
from .graph import Graph


@dataclass(frozen=True)
class SvgOptions:
    unit: float = 24.0
    layer_gap: float = 120.0
    margin: float = 30.0
    radius: float = 4.0
    show_labels: bool = False
    annotate_crossings: bool = False


def _f(x: float) -> str:
    return f"{x:.2f}"


def render_svg(g: Graph, d: TwoLayerDrawing, opts: SvgOptions = SvgOptions()) -> str:
    """Render a two-layer drawing.  Output bytes depend only on the inputs."""
    d.check(g)
    pos: dict[int, tuple[float, float]] = {}
    for layer, order in enumerate((d.order_x, d.order_y)):
        y = opts.margin + layer * opts.layer_gap
        for i, v in enumerate(order):
            pos[v] = (opts.margin + i * opts.unit, y)
    span = max(len(d.order_x), len(d.order_y), 1) - 1
    width = 2 * opts.margin + span * opts.unit
    height = 2 * opts.margin + opts.layer_gap

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" '
        f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">',
        '<g class="edges" stroke="#333" stroke-width="1">',
    ]
    counts = crossing_profile(g, d).per_edge if opts.annotate_crossings else {}
    for e in g.edges:
        (x1, y1), (x2, y2) = pos[e[0]], pos[e[1]]
        out.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"/>')
    out.append("</g>")
    if counts:
        out.append('<g class="crossings" font-size="9" fill="#b00" text-anchor="middle">')
        for e in g.edges:
            (x1, y1), (x2, y2) = pos[e[0]], pos[e[1]]
            out.append(f'<text x="{_f((x1 + x2) / 2)}" y="{_f((y1 + y2) / 2)}">{counts[e]}</text>')
        out.append("</g>")
    out.append('<g class="nodes" fill="#fff" stroke="#000">')
    for v in d.order_x + d.order_y:
        x, y = pos[v]
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(opts.radius)}"/>')
    out.append("</g>")
    if opts.show_labels:
        out.append('<g class="labels" font-size="8" text-anchor="middle">')
        top = d.part_x
        for v in d.order_x + d.order_y:
            x, y = pos[v]
            text = str(v) if g.labels is None else "({},{})".format(*g.labels[v])
            dy = -8 if v in top else 14
            out.append(f'<text x="{_f(x)}" y="{_f(y + dy)}">{escape(text)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
