"""Minimal SVG line charts: axes, legend, one polyline per series.

Presentation-only output for experiment results; deliberately free of
any plotting dependency so emitted files are small and deterministic.
"""

from __future__ import annotations

from typing import Mapping, Sequence

__all__ = ["polyline_chart"]

WIDTH, HEIGHT = 640, 440
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 160, 40, 50
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"]


def _spans(series: Mapping[str, Sequence[tuple[float, float]]]):
    xs = [x for points in series.values() for x, _ in points]
    ys = [y for points in series.values() for _, y in points]
    if not xs:
        xs, ys = [0.0, 1.0], [0.0, 1.0]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    return x_lo, x_hi, y_lo, y_hi


def polyline_chart(series: Mapping[str, Sequence[tuple[float, float]]], path,
                   title: str = "", xlabel: str = "", ylabel: str = "") -> None:
    """Write an SVG chart of the given (x, y) series to ``path``."""
    x_lo, x_hi, y_lo, y_hi = _spans(series)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x: float) -> float:
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y: float) -> float:
        return MARGIN_TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        # axes
        f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP + plot_h}" x2="{MARGIN_LEFT + plot_w}" '
        f'y2="{MARGIN_TOP + plot_h}" stroke="black"/>',
        f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
        f'y2="{MARGIN_TOP + plot_h}" stroke="black"/>',
        f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 12}" '
        f'text-anchor="middle">{xlabel}</text>',
        f'<text x="16" y="{MARGIN_TOP + plot_h / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_TOP + plot_h / 2:.1f})">{ylabel}</text>',
        # extremal tick labels
        f'<text x="{MARGIN_LEFT}" y="{MARGIN_TOP + plot_h + 16}" '
        f'text-anchor="middle">{x_lo:.3g}</text>',
        f'<text x="{MARGIN_LEFT + plot_w}" y="{MARGIN_TOP + plot_h + 16}" '
        f'text-anchor="middle">{x_hi:.3g}</text>',
        f'<text x="{MARGIN_LEFT - 6}" y="{MARGIN_TOP + plot_h + 4}" '
        f'text-anchor="end">{y_lo:.3g}</text>',
        f'<text x="{MARGIN_LEFT - 6}" y="{MARGIN_TOP + 4}" '
        f'text-anchor="end">{y_hi:.3g}</text>',
    ]
    for i, (name, points) in enumerate(series.items()):
        color = PALETTE[i % len(PALETTE)]
        if points:
            coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in points)
            parts.append(f'<polyline points="{coords}" fill="none" '
                         f'stroke="{color}" stroke-width="1.5"/>')
        ly = MARGIN_TOP + 14 + 18 * i
        lx = MARGIN_LEFT + plot_w + 12
        parts.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 18}" y2="{ly - 4}" '
                     f'stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{lx + 24}" y="{ly}">{name}</text>')
    parts.append("</svg>")
    with open(path, "w") as handle:
        handle.write("\n".join(parts) + "\n")
