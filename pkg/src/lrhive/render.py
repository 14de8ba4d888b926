"""Deterministic text renderings of hives.

The ASCII form lists the boundary labels and draws the gradient triangle row
by row; the SVG form emits the triangle with edge labels at fixed
coordinates.  Both are plain-text and stable across platforms.
"""

from __future__ import annotations

from .hive import Hive, edge_labels, hive_violation


def render_ascii(h: Hive) -> str:
    bad = hive_violation(h)
    lines = [f"hive n={h.n}"]
    lines.append("lambda: " + _fmt(h.lam))
    lines.append("mu:     " + _fmt(h.mu))
    lines.append("nu:     " + _fmt(h.nu))
    if bad:
        lines.append(f"INVALID: {bad}")
    lines.append("upright gradients (diagonal j, top to bottom):")
    width = max((len(str(x)) for d in h.u for x in d), default=1)
    for j in range(2, h.n + 1):
        entries = " ".join(str(x).rjust(width) for x in h.u[j - 2])
        pad = " " * ((h.n - j) * (width + 1) // 2)
        lines.append(f"  j={j}: {pad}{entries}")
    return "\n".join(lines) + "\n"


def render_svg(h: Hive) -> str:
    """Triangle with all edge labels; fixed layout, 80 units per edge."""
    e = edge_labels(h)
    n = max(h.n, 1)
    s = 80.0
    height = 0.8660254 * s

    def pt(i: int, j: int) -> tuple[float, float]:
        # vertex a_{ij}: j steps along the base direction, i of them flipped right
        x = (j - i) * s * 0.5 + i * s
        y = (n - (j - i)) * height
        return (x + 10, y + 10)

    w = n * s + 20
    hgt = n * height + 20
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{hgt:.0f}" '
        f'viewBox="0 0 {w:.0f} {hgt:.0f}">',
        '<style>text{font:10px monospace}line{stroke:#444;stroke-width:1}</style>',
    ]
    for j in range(1, h.n + 1):
        for i in range(0, j):
            parts.append(_edge(pt(i, j - 1), pt(i, j), e.alpha[(i, j)]))
        for i in range(1, j + 1):
            parts.append(_edge(pt(i - 1, j), pt(i, j), e.beta[(i, j)]))
            parts.append(_edge(pt(i - 1, j - 1), pt(i, j), e.gamma[(i, j)]))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _edge(a, b, label) -> str:
    mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    return (
        f'<line x1="{a[0]:.1f}" y1="{a[1]:.1f}" x2="{b[0]:.1f}" y2="{b[1]:.1f}"/>'
        f'<text x="{mx:.1f}" y="{my:.1f}">{label}</text>'
    )


def _fmt(seq) -> str:
    return "(" + ",".join(str(x) for x in seq) + ")"
