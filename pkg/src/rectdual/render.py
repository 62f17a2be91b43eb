"""Deterministic SVG rendering of layouts and cartograms."""

from __future__ import annotations

from typing import Any, Sequence

_SCALE = 48
_MARGIN = 12
_FONT = 13


def _fmt(value: float) -> str:
    """Integers render bare; real coordinates render with 3 decimals."""
    if isinstance(value, int) or float(value).is_integer():
        return str(int(value))
    return f"{value:.3f}"


def _rect_tuples(payload: dict[str, Any]) -> list[tuple[str, float, float, float, float]]:
    rects = payload.get("rects")
    if not isinstance(rects, list) or not rects:
        raise ValueError("render needs a layout object with a nonempty 'rects' array")
    out = []
    for entry in rects:
        try:
            rid = str(entry["id"])
            x, y, w, h = (float(entry[f]) for f in ("x", "y", "w", "h"))
        except (TypeError, KeyError) as exc:
            raise ValueError(f"bad rect entry {entry!r}") from exc
        if w <= 0 or h <= 0:
            raise ValueError(f"rect {rid!r} has nonpositive extent")
        out.append((rid, x, y, w, h))
    return out


def render_svg(payload: dict[str, Any]) -> str:
    """SVG with one rect element per layout rect and its id label centred.

    The SVG y axis grows downward while layouts grow upward, so y is flipped
    against the top of the bounding box; output bytes are a pure function of
    the input.
    """
    rects = _rect_tuples(payload)
    x0 = min(r[1] for r in rects)
    y1 = max(r[2] + r[4] for r in rects)
    width = max(r[1] + r[3] for r in rects) - x0
    height = y1 - min(r[2] for r in rects)

    def sx(v: float) -> float:
        return _MARGIN + (v - x0) * _SCALE

    def sy(v: float) -> float:
        return _MARGIN + (y1 - v) * _SCALE

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width * _SCALE + 2 * _MARGIN)}" '
        f'height="{_fmt(height * _SCALE + 2 * _MARGIN)}">\n',
    ]
    for i, (rid, x, y, w, h) in enumerate(rects):
        fill = f"hsl({(i * 53) % 360},55%,82%)"
        parts.append(
            f'  <rect x="{_fmt(sx(x))}" y="{_fmt(sy(y + h))}" '
            f'width="{_fmt(w * _SCALE)}" height="{_fmt(h * _SCALE)}" '
            f'fill="{fill}" stroke="black" stroke-width="1"/>\n'
        )
        parts.append(
            f'  <text x="{_fmt(sx(x + w / 2))}" y="{_fmt(sy(y + h / 2))}" '
            f'font-size="{_FONT}" font-family="monospace" '
            f'text-anchor="middle" dominant-baseline="central">{rid}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def render_svg_bytes(payload: dict[str, Any]) -> bytes:
    return render_svg(payload).encode("utf-8")
