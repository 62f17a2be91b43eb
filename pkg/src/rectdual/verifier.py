"""Independent geometric oracle: partition validity, maximal internal
segments, the one-sidedness test, contact graphs, and weak equivalence.

Everything here is exact integer arithmetic -- no epsilon comparisons.  The
construction code deliberately shares no logic with this module so the two
can check each other.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Optional

from .graphs import PlaneGraph, VertexId
from .layout import Layout


@dataclass(frozen=True, order=True)
class Segment:
    """Maximal internal line segment of a layout.

    `orientation` is "h" (level is a y, span along x) or "v" (level is an x,
    span along y).  The default ordering (orientation, level, lo, hi) is the
    deterministic reporting order.
    """

    orientation: str
    level: int
    lo: int
    hi: int

    @property
    def length(self) -> int:
        return self.hi - self.lo

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "orientation": self.orientation,
            "level": self.level,
            "span": [self.lo, self.hi],
        }


@dataclass(frozen=True)
class Violation:
    kind: str  # overlap | gap | four_joint | duplicate_id | nonpositive_extent
    location: tuple
    ids: tuple[VertexId, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "location": list(self.location), "ids": list(self.ids)}


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def validate_partition(layout: Layout) -> ValidationReport:
    """Report whether the rects tile one rectangle with only 3-joints.

    ok iff interiors are pairwise disjoint, the union is exactly the bounding
    rectangle, and no point is a corner of four or more rects.  All failures
    are report entries, never exceptions.
    """
    if not layout.rects:
        raise ValueError("validate_partition needs a nonempty layout")
    violations: list[Violation] = []
    seen_ids: set[VertexId] = set()
    for r in layout.rects:
        if r.id in seen_ids:
            violations.append(Violation("duplicate_id", (r.x, r.y), (r.id,)))
        seen_ids.add(r.id)
        if r.w <= 0 or r.h <= 0:
            violations.append(Violation("nonpositive_extent", (r.x, r.y), (r.id,)))
    if violations:
        return ValidationReport(False, tuple(violations))

    x0, y0, x1, y1 = layout.bounds()

    # Slab sweep: between consecutive x-boundaries the active rects must tile
    # [y0, y1] exactly.  Catches overlaps, gaps, and non-rectangular unions.
    starts: dict[int, list] = defaultdict(list)
    ends: dict[int, list] = defaultdict(list)
    for r in layout.rects:
        starts[r.x].append(r)
        ends[r.x2].append(r)
    xs = sorted(set(starts) | set(ends))
    active: set = set()
    for i, x in enumerate(xs[:-1]):
        active |= set(starts.get(x, ()))
        active -= set(ends.get(x, ()))
        intervals = sorted((r.y, r.y2, r.id) for r in active)
        cursor = y0
        cover_id: Optional[VertexId] = None
        for a, b, rid in intervals:
            if a < cursor:
                violations.append(
                    Violation("overlap", (x, a), tuple(v for v in (cover_id, rid) if v))
                )
            elif a > cursor:
                violations.append(Violation("gap", (x, cursor), ()))
            if b > cursor:
                cursor = b
                cover_id = rid
        if cursor < y1:
            violations.append(Violation("gap", (x, cursor), ()))

    # Four or more rects meeting at a point all have a corner there.
    corners: dict[tuple[int, int], list[VertexId]] = defaultdict(list)
    for r in layout.rects:
        for pt in ((r.x, r.y), (r.x2, r.y), (r.x, r.y2), (r.x2, r.y2)):
            corners[pt].append(r.id)
    for pt in sorted(corners):
        ids = corners[pt]
        if len(ids) >= 4:
            violations.append(Violation("four_joint", pt, tuple(sorted(ids))))

    return ValidationReport(not violations, tuple(violations))


def _merge_touching(intervals: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Union of closed intervals, joining ones that touch at a point."""
    merged: list[tuple[int, int]] = []
    for a, b in sorted(intervals):
        if merged and a <= merged[-1][1]:
            lo, hi = merged[-1]
            merged[-1] = (lo, max(hi, b))
        else:
            merged.append((a, b))
    return merged


def extract_maximal_segments(layout: Layout) -> list[Segment]:
    """The maximal internal segments of a valid partition.

    Every internal rect edge is covered by exactly one returned segment; no
    two returned segments are collinear-adjacent.  Assumes the layout passes
    validate_partition.
    """
    x0, y0, x1, y1 = layout.bounds()
    vert: dict[int, list[tuple[int, int]]] = defaultdict(list)
    horiz: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for r in layout.rects:
        if r.x != x0:
            vert[r.x].append((r.y, r.y2))
        if r.x2 != x1:
            vert[r.x2].append((r.y, r.y2))
        if r.y != y0:
            horiz[r.y].append((r.x, r.x2))
        if r.y2 != y1:
            horiz[r.y2].append((r.x, r.x2))
    out: list[Segment] = []
    for level in horiz:
        out.extend(Segment("h", level, a, b) for a, b in _merge_touching(horiz[level]))
    for level in vert:
        out.extend(Segment("v", level, a, b) for a, b in _merge_touching(vert[level]))
    out.sort()
    return out


def is_area_universal(layout: Layout) -> tuple[bool, Optional[Segment]]:
    """One-sidedness test: every maximal internal segment must coincide with
    a full side of some rect.  On failure, the witness is the first violating
    segment in (orientation, level, span-start) order."""
    sides: set[tuple[str, int, int, int]] = set()
    for r in layout.rects:
        sides.add(("v", r.x, r.y, r.y2))
        sides.add(("v", r.x2, r.y, r.y2))
        sides.add(("h", r.y, r.x, r.x2))
        sides.add(("h", r.y2, r.x, r.x2))
    for seg in extract_maximal_segments(layout):
        if (seg.orientation, seg.level, seg.lo, seg.hi) not in sides:
            return False, seg
    return True, None


def _contact_pairs(layout: Layout) -> dict[frozenset, tuple[str, VertexId]]:
    """Map each positive-length contact {u, w} to its direction.

    Direction is ("h", left_id) for a vertical shared border and
    ("v", bottom_id) for a horizontal one.  Corner-only contact is not
    adjacency.
    """
    out: dict[frozenset, tuple[str, VertexId]] = {}

    def join(
        neg: dict[int, list[tuple[int, int, VertexId]]],
        pos: dict[int, list[tuple[int, int, VertexId]]],
        axis: str,
    ) -> None:
        for level, left_list in neg.items():
            right_list = pos.get(level)
            if not right_list:
                continue
            a = sorted(left_list)
            b = sorted(right_list)
            i = j = 0
            while i < len(a) and j < len(b):
                lo = max(a[i][0], b[j][0])
                hi = min(a[i][1], b[j][1])
                if hi > lo:
                    out[frozenset((a[i][2], b[j][2]))] = (axis, a[i][2])
                if a[i][1] <= b[j][1]:
                    i += 1
                else:
                    j += 1

    rights: dict[int, list[tuple[int, int, VertexId]]] = defaultdict(list)
    lefts: dict[int, list[tuple[int, int, VertexId]]] = defaultdict(list)
    tops: dict[int, list[tuple[int, int, VertexId]]] = defaultdict(list)
    bottoms: dict[int, list[tuple[int, int, VertexId]]] = defaultdict(list)
    for r in layout.rects:
        rights[r.x2].append((r.y, r.y2, r.id))
        lefts[r.x].append((r.y, r.y2, r.id))
        tops[r.y2].append((r.x, r.x2, r.id))
        bottoms[r.y].append((r.x, r.x2, r.id))
    join(rights, lefts, "h")
    join(tops, bottoms, "v")
    return out


def contact_graph(layout: Layout) -> PlaneGraph:
    """Graph with one vertex per rect and an edge per positive-length side
    contact.  Assumes a valid partition."""
    pairs = _contact_pairs(layout)
    edges = [tuple(sorted(p)) for p in pairs]
    edges.sort()
    return PlaneGraph(edges, vertices=[r.id for r in layout.rects])


def weak_equivalent(a: Layout, b: Layout) -> bool:
    """Same ids, same contact pairs, and every contact keeps both its axis
    and which rect is on the lower/left side."""
    if a.ids() != b.ids():
        return False
    return _contact_pairs(a) == _contact_pairs(b)
