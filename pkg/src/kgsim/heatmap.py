"""Static SVG heatmaps of probability vs. time.

Vector output, no plotting dependency: one shaded rect per (site, time) cell
with the numeric probability printed inside, so the figure doubles as a
readable table. Sites run up the vertical axis labeled with their kets,
time along the horizontal axis. All coordinates and colors are formatted
deterministically, making the files diffable.
"""

from __future__ import annotations

from .experiment import ProbabilityTrace
from .state import site_label

CELL_W = 66
CELL_H = 40
LEFT = 70
TOP = 34
BOTTOM = 42

_DARK = (8, 48, 107)  # deepest fill at p = 1


def _fill(p: float) -> str:
    p = min(max(p, 0.0), 1.0)
    r = round(255 + (_DARK[0] - 255) * p)
    g = round(255 + (_DARK[1] - 255) * p)
    b = round(255 + (_DARK[2] - 255) * p)
    return f"#{r:02x}{g:02x}{b:02x}"


def _fmt_time(t: float) -> str:
    return f"{t:g}"


def render_heatmap_svg(trace: ProbabilityTrace, title: str = "") -> str:
    """Render the trace as standalone SVG text."""
    num_times = trace.times.size
    num_sites = trace.num_sites
    num_qubits = max(num_sites.bit_length() - 1, 1)
    width = LEFT + CELL_W * num_times + 10
    height = TOP + CELL_H * num_sites + BOTTOM

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        '<g font-family="monospace" font-size="12">',
    ]
    if title:
        parts.append(f'<text x="{LEFT}" y="20" font-size="14">{title}</text>')

    for i, t in enumerate(trace.times):
        for j in range(num_sites):
            p = float(trace.rows[i, j])
            x = LEFT + i * CELL_W
            # site 0 sits on the bottom row
            y = TOP + (num_sites - 1 - j) * CELL_H
            parts.append(
                f'<rect x="{x}" y="{y}" width="{CELL_W}" height="{CELL_H}" '
                f'fill="{_fill(p)}" stroke="#cccccc"/>'
            )
            color = "#ffffff" if p > 0.55 else "#000000"
            parts.append(
                f'<text x="{x + CELL_W // 2}" y="{y + CELL_H // 2 + 4}" '
                f'text-anchor="middle" fill="{color}">{p:.3f}</text>'
            )

    for j in range(num_sites):
        y = TOP + (num_sites - 1 - j) * CELL_H + CELL_H // 2 + 4
        label = site_label(j, num_qubits).replace(">", "&gt;")
        parts.append(f'<text x="{LEFT - 8}" y="{y}" text-anchor="end">{label}</text>')
    for i, t in enumerate(trace.times):
        x = LEFT + i * CELL_W + CELL_W // 2
        y = TOP + num_sites * CELL_H + 18
        parts.append(f'<text x="{x}" y="{y}" text-anchor="middle">{_fmt_time(float(t))}</text>')
    parts.append(
        f'<text x="{LEFT + (num_times * CELL_W) // 2}" y="{TOP + num_sites * CELL_H + 36}" '
        f'text-anchor="middle">t</text>'
    )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
