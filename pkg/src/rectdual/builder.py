"""Constructs one-sided rectangular duals by full-side strip insertion, and
deletes exterior rects with single-neighbor repair."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from . import verifier
from .detector import Degree4Path, MembershipCertificate, MAX_OUTSIDE_NEIGHBORS
from .graphs import PlaneGraph, VertexId
from .layout import Layout, Rect

# Candidate sides in fallback order; names refer to the current enclosure.
SIDE_ORDER = ("bottom", "left", "right", "top")


class BuildError(Exception):
    pass


class NoValidPlacement(BuildError):
    """No side placement touches exactly the placed neighbours.

    Signals that the input was not in the constructible class, or that the
    certificate's insertion order is geometrically infeasible.
    """

    def __init__(self, vertex: VertexId, reason: str = ""):
        self.vertex = vertex
        msg = f"no valid placement for {vertex!r}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class NotRepairable(BuildError):
    """Deleting this exterior rect leaves a hole no single neighbour can fill."""


class InvalidCertificateError(ValueError):
    """Certificate inconsistent with the graph it claims to witness."""


class _Frame:
    """Incremental construction state.

    Tracks the enclosure bounds and, per side, the set of rect ids flush with
    that side.  A strip insertion replaces one side set and joins the two
    perpendicular ones, so the whole build stays O(n + m).
    """

    __slots__ = ("x0", "y0", "x1", "y1", "sides", "rects")

    def __init__(self) -> None:
        self.rects: list[Rect] = []
        self.sides: dict[str, set[VertexId]] = {}
        self.x0 = self.y0 = self.x1 = self.y1 = 0

    @classmethod
    def from_row(cls, path: Sequence[VertexId], origin: tuple[int, int]) -> "_Frame":
        frame = cls()
        ox, oy = origin
        for i, v in enumerate(path):
            frame.rects.append(Rect(v, ox + i, oy, 1, 1))
        k = len(path)
        frame.x0, frame.y0, frame.x1, frame.y1 = ox, oy, ox + k, oy + 1
        frame.sides = {
            "bottom": set(path),
            "top": set(path),
            "left": {path[0]},
            "right": {path[-1]},
        }
        return frame

    @classmethod
    def from_layout(cls, layout: Layout) -> "_Frame":
        frame = cls()
        frame.rects = list(layout.rects)
        if len({r.id for r in frame.rects}) != len(frame.rects):
            raise ValueError("layout has duplicate rect ids")
        frame.x0, frame.y0, frame.x1, frame.y1 = layout.bounds()
        frame.sides = {
            "bottom": {r.id for r in frame.rects if r.y == frame.y0},
            "top": {r.id for r in frame.rects if r.y2 == frame.y1},
            "left": {r.id for r in frame.rects if r.x == frame.x0},
            "right": {r.id for r in frame.rects if r.x2 == frame.x1},
        }
        return frame

    def strip_rect(self, v: VertexId, side: str) -> Rect:
        """Thickness-1 rect spanning the full given side of the enclosure."""
        if side == "bottom":
            return Rect(v, self.x0, self.y0 - 1, self.x1 - self.x0, 1)
        if side == "top":
            return Rect(v, self.x0, self.y1, self.x1 - self.x0, 1)
        if side == "left":
            return Rect(v, self.x0 - 1, self.y0, 1, self.y1 - self.y0)
        if side == "right":
            return Rect(v, self.x1, self.y0, 1, self.y1 - self.y0)
        raise ValueError(f"unknown side {side!r}")

    def choose_side(self, placed_ids: set[VertexId]) -> Optional[str]:
        """First side lined by exactly the placed neighbours, in SIDE_ORDER.

        Equivalent to trying the coordinate-case side first: two sides can
        only carry equal id sets when they are opposite sides, and for those
        both orders prefer bottom over top and left over right.
        """
        sides = self.sides
        for side in SIDE_ORDER:
            if sides[side] == placed_ids:
                return side
        return None

    def insert_on_side(self, v: VertexId, side: str) -> Rect:
        """Append the strip without neighbour validation (generator path)."""
        r = self.strip_rect(v, side)
        self.rects.append(r)
        sides = self.sides
        if side == "bottom":
            self.y0 -= 1
            sides["bottom"] = {v}
            sides["left"].add(v)
            sides["right"].add(v)
        elif side == "top":
            self.y1 += 1
            sides["top"] = {v}
            sides["left"].add(v)
            sides["right"].add(v)
        elif side == "left":
            self.x0 -= 1
            sides["left"] = {v}
            sides["bottom"].add(v)
            sides["top"].add(v)
        else:
            self.x1 += 1
            sides["right"] = {v}
            sides["bottom"].add(v)
            sides["top"].add(v)
        return r

    def insert(self, v: VertexId, placed_ids: set[VertexId]) -> Rect:
        side = self.choose_side(placed_ids)
        if side is None:
            raise NoValidPlacement(v, "placed neighbours line no enclosure side")
        return self.insert_on_side(v, side)

    def to_layout(self, origin: tuple[int, int]) -> Layout:
        return Layout(tuple(self.rects), origin)


def init_path_row(path: Degree4Path, origin: tuple[int, int] = (0, 0)) -> Layout:
    """Unit squares in a horizontal row, one per path vertex, left to right
    from the origin."""
    if len(path) < 2:
        raise ValueError("path must have more than one vertex")
    return _Frame.from_row(path.vertices, origin).to_layout(origin)


def _primary_side(placed: Sequence[Rect]) -> str:
    """Coordinate case analysis: aligned bottoms go below, aligned lefts go
    left, anything else goes right (the catch-all of the insertion rule)."""
    if len({r.y for r in placed}) == 1:
        return "bottom"
    if len({r.x for r in placed}) == 1:
        return "left"
    return "right"


def placement_for(layout: Layout, v: VertexId, placed: Sequence[Rect]) -> Rect:
    """Candidate rect for inserting `v` against the placed neighbours.

    Returns the full-side strip of the first side lined by exactly the placed
    set (case-analysis side first, then the fixed fallback order).  When no
    side matches, falls back to the raw case formula -- the candidate then
    fails insert_vertex's validation, which owns error reporting.
    """
    if not placed:
        raise ValueError("placed must be nonempty")
    frame = _Frame.from_layout(layout)
    rects_by_id = {r.id: r for r in layout.rects}
    placed_ids = set()
    for r in placed:
        if rects_by_id.get(r.id) != r:
            raise ValueError(f"placed rect {r.id!r} is not in the layout")
        placed_ids.add(r.id)
    side = frame.choose_side(placed_ids)
    if side is not None:
        return frame.strip_rect(v, side)
    return _case_formula_rect(v, _primary_side(placed), placed)


def _case_formula_rect(v: VertexId, side: str, placed: Sequence[Rect]) -> Rect:
    """Literal per-case placement formulas (min corner, summed extents)."""
    if side == "bottom":
        x = min(r.x for r in placed)
        y = placed[0].y - 1
        return Rect(v, x, y, sum(r.w for r in placed), 1)
    if side == "left":
        x = placed[0].x - 1
        y = min(r.y for r in placed)
        return Rect(v, x, y, 1, sum(r.h for r in placed))
    if side == "right":
        x = max(r.x2 for r in placed)
        y = min(r.y for r in placed)
        return Rect(v, x, y, 1, sum(r.h for r in placed))
    x = min(r.x for r in placed)
    y = max(r.y2 for r in placed)
    return Rect(v, x, y, sum(r.w for r in placed), 1)


def insert_vertex(layout: Layout, v: VertexId, g: PlaneGraph) -> Layout:
    """Insert `v`'s rect so the union stays a rectangle and the new rect
    borders exactly the placed neighbours of `v` (no 4-joint can arise from a
    full-side strip).  Raises NoValidPlacement when no side qualifies."""
    frame = _Frame.from_layout(layout)
    ids = layout.ids()
    if v in ids:
        raise ValueError(f"vertex {v!r} already placed")
    placed_ids = {u for u in g.neighborhood(v) if u in ids}
    if not placed_ids:
        raise ValueError(f"vertex {v!r} has no placed neighbours")
    frame.insert(v, placed_ids)
    return frame.to_layout(layout.origin)


def _path_chord(g: PlaneGraph, verts: Sequence[VertexId]) -> Optional[tuple[VertexId, VertexId]]:
    pos = {v: i for i, v in enumerate(verts)}
    for i, v in enumerate(verts):
        for w in g.neighborhood(v):
            j = pos.get(w)
            if j is not None and j - i >= 2:
                return v, w
    return None


def build_dual(
    g: PlaneGraph,
    cert: MembershipCertificate,
    origin: tuple[int, int] = (0, 0),
) -> Layout:
    """Replay a membership certificate into a complete layout.

    The result partitions its enclosure, realizes `g` as its contact graph,
    and is one-sided (every maximal internal segment a full rect side);
    the per-step strip validation guarantees all three, surfacing
    NoValidPlacement instead of ever emitting a broken layout.
    """
    verts = cert.path.vertices
    if len(verts) < 2:
        raise InvalidCertificateError("certificate path too short")
    for u, w in zip(verts, verts[1:]):
        if not g.has_edge(u, w):
            raise InvalidCertificateError(f"path step {u!r}-{w!r} is not an edge")
    chord = _path_chord(g, verts)
    if chord is not None:
        raise NoValidPlacement(
            chord[1], f"path chord {chord[0]}-{chord[1]} cannot be realized by a row"
        )

    inserted = [v for v, _ in cert.insertions]
    expected = set(g.vertices) - set(verts)
    if len(set(inserted)) != len(inserted) or set(inserted) != expected:
        raise InvalidCertificateError(
            "insertions must cover exactly the off-path vertices, once each"
        )

    ox, oy = origin
    rects = [Rect(v, ox + i, oy, 1, 1) for i, v in enumerate(verts)]
    k = len(verts)
    x0, y0, x1, y1 = ox, oy, ox + k, oy + 1
    bottom: set[VertexId] = set(verts)
    top: set[VertexId] = set(verts)
    left: set[VertexId] = {verts[0]}
    right: set[VertexId] = {verts[-1]}
    placed_so_far = set(verts)

    for v, placed in cert.insertions:
        nbrs = g._neighbors(v)
        actual = placed_so_far.intersection(nbrs)
        if len(actual) != len(placed) or not actual.issuperset(placed):
            raise InvalidCertificateError(
                f"insertion of {v!r} lists placed neighbours {sorted(placed)}, "
                f"graph gives {sorted(actual)}"
            )
        if not actual:
            raise InvalidCertificateError(f"insertion of {v!r} touches nothing placed")
        if len(nbrs) - len(actual) > MAX_OUTSIDE_NEIGHBORS:
            raise InvalidCertificateError(
                f"insertion of {v!r} leaves too many unplaced neighbours"
            )
        if actual == bottom:
            y0 -= 1
            rects.append(Rect(v, x0, y0, x1 - x0, 1))
            bottom = {v}
            left.add(v)
            right.add(v)
        elif actual == left:
            x0 -= 1
            rects.append(Rect(v, x0, y0, 1, y1 - y0))
            left = {v}
            bottom.add(v)
            top.add(v)
        elif actual == right:
            rects.append(Rect(v, x1, y0, 1, y1 - y0))
            x1 += 1
            right = {v}
            bottom.add(v)
            top.add(v)
        elif actual == top:
            rects.append(Rect(v, x0, y1, x1 - x0, 1))
            y1 += 1
            top = {v}
            left.add(v)
            right.add(v)
        else:
            raise NoValidPlacement(v, "placed neighbours line no enclosure side")
        placed_so_far.add(v)
    return Layout(tuple(rects), origin)


def _stretch_candidates(hole: Rect, others: Sequence[Rect]) -> list[Rect]:
    """Neighbours whose full side coincides with a full side of the hole,
    stretched to fill it; ordered below/left/right/above."""
    out: list[Rect] = []
    for p in others:  # below
        if p.x == hole.x and p.w == hole.w and p.y2 == hole.y:
            out.append(Rect(p.id, p.x, p.y, p.w, p.h + hole.h))
    for p in others:  # left
        if p.y == hole.y and p.h == hole.h and p.x2 == hole.x:
            out.append(Rect(p.id, p.x, p.y, p.w + hole.w, p.h))
    for p in others:  # right
        if p.y == hole.y and p.h == hole.h and p.x == hole.x2:
            out.append(Rect(p.id, hole.x, p.y, p.w + hole.w, p.h))
    for p in others:  # above
        if p.x == hole.x and p.w == hole.w and p.y == hole.y2:
            out.append(Rect(p.id, p.x, hole.y, p.w, p.h + hole.h))
    return out


def _deletion_ok(result: Layout, target_graph: PlaneGraph) -> bool:
    report = verifier.validate_partition(result)
    if not report.ok:
        return False
    universal, _ = verifier.is_area_universal(result)
    if not universal:
        return False
    return verifier.contact_graph(result) == target_graph


def delete_exterior_rect(layout: Layout, v: VertexId) -> Layout:
    """Remove an exterior rect and repair the layout.

    A rect spanning a full boundary strip just comes off.  Otherwise exactly
    one neighbouring rect whose side coincides with a side of the hole is
    stretched to fill it; the repaired layout must still be a valid,
    one-sided partition whose contact graph is the induced subgraph on the
    remaining ids, else NotRepairable.
    """
    report = verifier.validate_partition(layout)
    if not report.ok:
        raise ValueError("delete_exterior_rect needs a complete, valid layout")
    hole = layout.rect(v)
    x0, y0, x1, y1 = layout.bounds()
    if not (hole.x == x0 or hole.y == y0 or hole.x2 == x1 or hole.y2 == y1):
        raise ValueError(f"rect {v!r} does not touch the enclosure boundary")
    if len(layout.rects) < 2:
        raise ValueError("cannot delete from a single-rect layout")

    others = tuple(r for r in layout.rects if r.id != v)
    target = verifier.contact_graph(layout).induced_subgraph(
        [r.id for r in others]
    )

    full_strip = (
        hole.w == x1 - x0 and (hole.y == y0 or hole.y2 == y1)
    ) or (hole.h == y1 - y0 and (hole.x == x0 or hole.x2 == x1))
    if full_strip:
        result = Layout(others, layout.origin)
        if not _deletion_ok(result, target):
            raise NotRepairable(f"removing boundary strip {v!r} broke the layout")
        return result

    for stretched in _stretch_candidates(hole, others):
        result = Layout(
            tuple(stretched if r.id == stretched.id else r for r in others),
            layout.origin,
        )
        if _deletion_ok(result, target):
            return result
    raise NotRepairable(
        f"no single neighbour of {v!r} can fill the hole it leaves"
    )
