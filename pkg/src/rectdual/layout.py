"""Rectangle layout data model and its JSON form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, NamedTuple

from .graphs import VertexId


class LayoutError(Exception):
    """Malformed layout value or layout JSON."""


class Rect(NamedTuple):
    """Axis-aligned rectangle: bottom-left corner (x, y), width w, height h.

    Coordinates are exact integers (grid units); w, h >= 1 for well-formed
    layouts, which validate_partition reports on rather than assumes.
    NamedTuple keeps construction cheap on 1e5-rect builds.
    """

    id: VertexId
    x: int
    y: int
    w: int
    h: int

    @property
    def x2(self) -> int:
        return self.x + self.w

    @property
    def y2(self) -> int:
        return self.y + self.h

    @property
    def area(self) -> int:
        return self.w * self.h


@dataclass(frozen=True)
class Layout:
    """Ordered collection of rects, plus the construction origin.

    Immutable value; construction ops return new layouts.  When complete, the
    rects partition one enclosing rectangle with no four rects meeting at a
    point -- checked by the verifier, not assumed here.
    """

    rects: tuple[Rect, ...]
    origin: tuple[int, int] = (0, 0)

    def __len__(self) -> int:
        return len(self.rects)

    def __iter__(self) -> Iterator[Rect]:
        return iter(self.rects)

    def ids(self) -> set[VertexId]:
        return {r.id for r in self.rects}

    def rect(self, v: VertexId) -> Rect:
        for r in self.rects:
            if r.id == v:
                return r
        raise LayoutError(f"no rect with id {v!r}")

    def bounds(self) -> tuple[int, int, int, int]:
        """Bounding box (x0, y0, x1, y1); requires at least one rect."""
        if not self.rects:
            raise LayoutError("empty layout has no bounds")
        x0 = min(r.x for r in self.rects)
        y0 = min(r.y for r in self.rects)
        x1 = max(r.x2 for r in self.rects)
        y1 = max(r.y2 for r in self.rects)
        return x0, y0, x1, y1

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "origin": [self.origin[0], self.origin[1]],
            "rects": [
                {"id": r.id, "x": r.x, "y": r.y, "w": r.w, "h": r.h}
                for r in self.rects
            ],
        }


def layout_from_json_dict(data: Any) -> Layout:
    """Parse the layout JSON schema; coordinates must be exact integers.

    Coordinates may be negative: construction grows in all four directions
    from the origin row.
    """
    if not isinstance(data, dict) or "rects" not in data:
        raise LayoutError("layout JSON must be an object with a 'rects' array")
    origin_raw = data.get("origin", [0, 0])
    if (
        not isinstance(origin_raw, (list, tuple))
        or len(origin_raw) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in origin_raw)
    ):
        raise LayoutError("layout origin must be a pair of integers")
    rects = []
    raw_rects = data["rects"]
    if not isinstance(raw_rects, list):
        raise LayoutError("'rects' must be an array")
    for entry in raw_rects:
        if not isinstance(entry, dict):
            raise LayoutError(f"bad rect entry: {entry!r}")
        try:
            rid = entry["id"]
            coords = [entry["x"], entry["y"], entry["w"], entry["h"]]
        except KeyError as exc:
            raise LayoutError(f"bad rect entry {entry!r}: missing {exc}") from exc
        if not isinstance(rid, str) or not rid:
            raise LayoutError(f"bad rect id: {rid!r}")
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in coords):
            raise LayoutError(
                f"rect {rid!r}: coordinates must be exact integers, got {coords!r}"
            )
        rects.append(Rect(rid, *coords))
    return Layout(tuple(rects), (origin_raw[0], origin_raw[1]))
