"""Self-contained SVG scatter plot with a fitted line.

Hand-rolled rather than delegating to a plotting library so the output
bytes are fully deterministic.
"""

from __future__ import annotations

WIDTH, HEIGHT = 800, 600
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 30, 30, 60


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def scatter_with_line(
    points: list[tuple[float, float]],
    slope: float,
    intercept: float,
    x_label: str,
    y_label: str,
) -> str:
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    x_min, x_max = min(xs), max(xs)
    y_fit = [slope * x + intercept for x in (x_min, x_max)]
    y_min = min(min(ys), min(y_fit))
    y_max = max(max(ys), max(y_fit))
    x_span = (x_max - x_min) or 1.0
    y_span = (y_max - y_min) or 1.0

    def px(x: float) -> float:
        return MARGIN_L + (x - x_min) / x_span * (WIDTH - MARGIN_L - MARGIN_R)

    def py(y: float) -> float:
        return HEIGHT - MARGIN_B - (y - y_min) / y_span * (HEIGHT - MARGIN_T - MARGIN_B)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{MARGIN_L}" y1="{HEIGHT - MARGIN_B}" x2="{WIDTH - MARGIN_R}" '
        f'y2="{HEIGHT - MARGIN_B}" stroke="black"/>',
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T}" x2="{MARGIN_L}" '
        f'y2="{HEIGHT - MARGIN_B}" stroke="black"/>',
        f'<text x="{(MARGIN_L + WIDTH - MARGIN_R) // 2}" y="{HEIGHT - 15}" '
        f'text-anchor="middle" font-family="sans-serif">{x_label}</text>',
        f'<text x="20" y="{(MARGIN_T + HEIGHT - MARGIN_B) // 2}" '
        f'text-anchor="middle" font-family="sans-serif" '
        f'transform="rotate(-90 20 {(MARGIN_T + HEIGHT - MARGIN_B) // 2})">'
        f"{y_label}</text>",
        f'<line x1="{_fmt(px(x_min))}" y1="{_fmt(py(y_fit[0]))}" '
        f'x2="{_fmt(px(x_max))}" y2="{_fmt(py(y_fit[1]))}" stroke="red"/>',
    ]
    for x, y in points:
        parts.append(
            f'<circle cx="{_fmt(px(x))}" cy="{_fmt(py(y))}" r="4" '
            f'fill="none" stroke="blue"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
