"""Arc-diagram rendering: plain text and SVG.

Vertices sit on a baseline and every edge is an arc above it. Output is
deterministic for a fixed matching and spec, so renders can be golden-filed.
"""

from dataclasses import dataclass
from typing import Optional

from .core import Edge, Matching, edges

__all__ = ["RenderSpec", "render", "render_text", "render_svg"]


@dataclass(frozen=True)
class RenderSpec:
    """Rendering options: output format, size hints, edge-label toggle."""

    format: str = "text"
    width: Optional[int] = None
    height: Optional[int] = None
    labels: bool = False


def _arc_heights(es: list[Edge]) -> dict[Edge, int]:
    """Stack arcs so that no two horizontal runs collide.

    An arc sits above every arc nested inside it and above every crossing
    arc that starts further left; the relation is acyclic, so heights are
    well-founded.
    """
    below: dict[Edge, list[Edge]] = {e: [] for e in es}
    for e in es:
        for f in es:
            if f is e:
                continue
            inside = e.left < f.left and f.right < e.right
            crossing_from_left = f.left < e.left < f.right < e.right
            if inside or crossing_from_left:
                below[e].append(f)
    heights: dict[Edge, int] = {}

    def height(e: Edge) -> int:
        if e not in heights:
            heights[e] = 1 + max((height(f) for f in below[e]), default=0)
        return heights[e]

    for e in es:
        height(e)
    return heights


def render_text(m: Matching, labels: bool = False) -> str:
    """ASCII arc diagram: '*' vertices, '.-' arc tops, '|' legs."""
    es = edges(m)
    heights = _arc_heights(es)
    top = max(heights.values())
    width = 2 * (2 * m.n - 1) + 1
    grid = [[" "] * width for _ in range(top + 1)]  # row 0 is the baseline

    def col(v: int) -> int:
        return 2 * v

    for v in range(2 * m.n):
        grid[0][col(v)] = "*"
    for e in sorted(es, key=lambda e: heights[e]):
        h = heights[e]
        lc, rc = col(e.left), col(e.right)
        grid[h][lc] = "."
        grid[h][rc] = "."
        for c in range(lc + 1, rc):
            grid[h][c] = "-"
        for row in range(1, h):
            grid[row][lc] = "|"
            grid[row][rc] = "|"
    if labels:
        for e in es:
            text = str(e.label)
            mid = (col(e.left) + col(e.right)) // 2 - (len(text) - 1) // 2
            for k, ch in enumerate(text):
                grid[heights[e]][mid + k] = ch
    lines = ["".join(row).rstrip() for row in reversed(grid)]
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    return f"{x:g}"


def render_svg(m: Matching, labels: bool = False,
               width: Optional[int] = None,
               height: Optional[int] = None) -> str:
    """SVG arc diagram: circles on a baseline, semicircular arcs above."""
    es = edges(m)
    n2 = 2 * m.n
    margin = 20.0
    unit = 24.0
    if width is not None and n2 > 1:
        unit = max((width - 2 * margin) / (n2 - 1), 1.0)
    max_radius = max((e.right - e.left) for e in es) * unit / 2
    label_room = 14.0 if labels else 0.0
    baseline = margin + label_room + max_radius
    total_w = width if width is not None else 2 * margin + (n2 - 1) * unit
    total_h = height if height is not None else baseline + margin

    def x(v: int) -> float:
        return margin + v * unit

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(total_w)}" '
        f'height="{_fmt(total_h)}" viewBox="0 0 {_fmt(total_w)} {_fmt(total_h)}">'
    ]
    parts.append(
        f'<line x1="{_fmt(x(0))}" y1="{_fmt(baseline)}" x2="{_fmt(x(n2 - 1))}" '
        f'y2="{_fmt(baseline)}" stroke="#999" stroke-width="1"/>'
    )
    for e in es:
        r = (e.right - e.left) * unit / 2
        parts.append(
            f'<path d="M {_fmt(x(e.left))} {_fmt(baseline)} '
            f'A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(x(e.right))} {_fmt(baseline)}" '
            f'fill="none" stroke="black" stroke-width="1.5"/>'
        )
    for v in range(n2):
        parts.append(
            f'<circle cx="{_fmt(x(v))}" cy="{_fmt(baseline)}" r="3" fill="black"/>'
        )
    if labels:
        for e in es:
            cx = (x(e.left) + x(e.right)) / 2
            cy = baseline - (e.right - e.left) * unit / 2 - 4
            parts.append(
                f'<text x="{_fmt(cx)}" y="{_fmt(cy)}" font-size="12" '
                f'text-anchor="middle">{e.label}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render(m: Matching, spec: RenderSpec = RenderSpec()) -> str:
    """Render ``m`` according to ``spec``."""
    if spec.format == "text":
        return render_text(m, labels=spec.labels)
    if spec.format == "svg":
        return render_svg(m, labels=spec.labels, width=spec.width,
                          height=spec.height)
    raise ValueError(f"unknown render format {spec.format!r}; expected text or svg")
