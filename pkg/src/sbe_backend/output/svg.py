"""Minimal SVG line plots with no plotting dependency."""

from __future__ import annotations

import math
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ..utils.errors import DomainError
from .artifacts import Table

COLORS = ["#1f77b4", "#d62728", "#2ca02c"]

WIDTH = 960
HEIGHT = 600
MARGIN_LEFT = 90
MARGIN_RIGHT = 40
MARGIN_TOP = 60
MARGIN_BOTTOM = 80
TICKS = 6

# kind -> (x column, y column, log x, log y, x label, y label)
_LAYOUTS = {
    ("trajectory", "r"): ("r", "U", True, False, "r", "U(r)"),
    ("trajectory", "s"): ("s", "w1", False, False, "s = ln r", "w1(s)"),
    ("bifurcation", None): ("lambda", "u0", False, True, "lambda", "u0 = u(0)"),
    ("phase", None): ("w1", "w2", False, False, "w1", "w2"),
}


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
        .replace("'", "&#39;")
    )


def _layout(table: Table, kind: str):
    if kind == "trajectory":
        key = ("trajectory", "r" if "r" in table.header else "s")
    elif kind in ("bifurcation", "phase"):
        key = (kind, None)
    else:
        raise DomainError(f"unknown plot kind {kind!r}")
    return _LAYOUTS[key]


def _points(table: Table, x_col: str, y_col: str, log_x: bool, log_y: bool) -> List[Tuple[float, float]]:
    pts = []
    for x, y in zip(table.column(x_col), table.column(y_col)):
        if (log_x and x <= 0) or (log_y and y <= 0):
            continue
        if not (math.isfinite(x) and math.isfinite(y)):
            continue
        pts.append((math.log10(x) if log_x else x, math.log10(y) if log_y else y))
    return pts


def _tick_label(value: float, log: bool) -> str:
    return f"{10 ** value:.3g}" if log else f"{value:.4g}"


def emit_svg(
    table: Table,
    kind: str,
    path: Path,
    title: Optional[str] = None,
    reference: Optional[float] = None,
) -> Path:
    """
    Write a standalone polyline plot of an artifact table.

    trajectory: U against log r (radial CSV) or w1 against s (orbit CSV);
    bifurcation: log u0 against lambda; phase: w2 against w1. ``reference``
    draws a horizontal line at that y value (e.g. K₀^{1/(p-1)} for w1).

    Raises:
        DomainError: empty data or missing columns.
    """
    x_col, y_col, log_x, log_y, x_label, y_label = _layout(table, kind)
    pts = _points(table, x_col, y_col, log_x, log_y)
    if not pts:
        raise DomainError(f"no plottable points for a {kind} plot")

    ys: Sequence[float] = [y for _, y in pts]
    if reference is not None and not log_y:
        ys = list(ys) + [reference]
    x_min, x_max = min(x for x, _ in pts), max(x for x, _ in pts)
    y_min, y_max = min(ys), max(ys)
    if x_max <= x_min:
        x_min, x_max = x_min - 1.0, x_max + 1.0
    if y_max <= y_min:
        y_min, y_max = y_min - 1.0, y_max + 1.0
    pad = 0.05 * (y_max - y_min)
    y_min, y_max = y_min - pad, y_max + pad

    plot_left, plot_right = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
    plot_top, plot_bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM

    def x_to_px(x: float) -> float:
        return plot_left + (x - x_min) / (x_max - x_min) * (plot_right - plot_left)

    def y_to_px(y: float) -> float:
        return plot_bottom - (y - y_min) / (y_max - y_min) * (plot_bottom - plot_top)

    lines: List[str] = []
    lines.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">')
    lines.append('<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>')
    lines.append(
        f'<text x="{WIDTH / 2:.1f}" y="34" text-anchor="middle" font-size="20" font-family="Arial">{_escape(title or kind)}</text>'
    )

    for i in range(TICKS + 1):
        yv = y_min + (y_max - y_min) * i / TICKS
        y = y_to_px(yv)
        lines.append(f'<line x1="{plot_left}" y1="{y:.2f}" x2="{plot_right}" y2="{y:.2f}" stroke="#e0e0e0" stroke-width="1"/>')
        lines.append(
            f'<text x="{plot_left - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="12" font-family="Arial">{_escape(_tick_label(yv, log_y))}</text>'
        )
        xv = x_min + (x_max - x_min) * i / TICKS
        x = x_to_px(xv)
        lines.append(f'<line x1="{x:.2f}" y1="{plot_bottom}" x2="{x:.2f}" y2="{plot_bottom + 6}" stroke="#000000" stroke-width="1"/>')
        lines.append(
            f'<text x="{x:.2f}" y="{plot_bottom + 22}" text-anchor="middle" font-size="12" font-family="Arial">{_escape(_tick_label(xv, log_x))}</text>'
        )

    lines.append(f'<line x1="{plot_left}" y1="{plot_bottom}" x2="{plot_right}" y2="{plot_bottom}" stroke="#000000" stroke-width="2"/>')
    lines.append(f'<line x1="{plot_left}" y1="{plot_top}" x2="{plot_left}" y2="{plot_bottom}" stroke="#000000" stroke-width="2"/>')

    if reference is not None and not log_y:
        y = y_to_px(reference)
        lines.append(
            f'<line x1="{plot_left}" y1="{y:.2f}" x2="{plot_right}" y2="{y:.2f}" stroke="{COLORS[1]}" stroke-width="1.5" stroke-dasharray="6,4"/>'
        )

    poly = " ".join(f"{x_to_px(x):.2f},{y_to_px(y):.2f}" for x, y in pts)
    lines.append(f'<polyline fill="none" stroke="{COLORS[0]}" stroke-width="2" points="{poly}"/>')

    lines.append(
        f'<text x="{(plot_left + plot_right) / 2:.1f}" y="{HEIGHT - 25}" text-anchor="middle" font-size="15" font-family="Arial">{_escape(x_label)}</text>'
    )
    mid = (plot_top + plot_bottom) / 2
    lines.append(
        f'<text x="26" y="{mid:.1f}" text-anchor="middle" font-size="15" font-family="Arial" transform="rotate(-90 26 {mid:.1f})">{_escape(y_label)}</text>'
    )
    lines.append("</svg>")

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
