"""Realizes target area assignments on one-sided layouts by sliding the
maximal internal segments (rectangular cartograms)."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Mapping

from . import verifier
from .graphs import VertexId
from .layout import Layout

DEFAULT_REL_TOL = 1e-6
DEFAULT_MAX_ITERS = 10000

# Minimum slack kept between a moving segment and the nearest abutting rect
# side, as a fraction of the enclosure span along the moving axis.
_MIN_GAP_FRACTION = 1e-9


class NotAreaUniversal(ValueError):
    """The source layout fails the one-sidedness test, so arbitrary area
    assignments need not be realizable."""


class NotConverged(Exception):
    """Sweeps hit the iteration cap before reaching the tolerance.

    Carries diagnostics; no layout is returned, corrupt or otherwise.
    """

    def __init__(self, iterations: int, best_error: float):
        self.iterations = iterations
        self.best_error = best_error
        super().__init__(
            f"not converged after {iterations} sweeps; best error {best_error:.3e}"
        )


@dataclass(frozen=True)
class CartogramRect:
    id: VertexId
    x: float
    y: float
    w: float
    h: float


@dataclass(frozen=True)
class CartogramLayout:
    """Real-coordinate layout realizing an area assignment, weak-equivalent
    to its integer source."""

    rects: tuple[CartogramRect, ...]
    origin: tuple[float, float]
    achieved_error: float

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "origin": [self.origin[0], self.origin[1]],
            "rects": [
                {"id": r.id, "x": r.x, "y": r.y, "w": r.w, "h": r.h}
                for r in self.rects
            ],
            "achieved_error": self.achieved_error,
        }


def measure_areas(c: CartogramLayout) -> dict[VertexId, float]:
    return {r.id: r.w * r.h for r in c.rects}


def normalize_targets(
    layout: Layout, targets: Mapping[VertexId, float]
) -> dict[VertexId, float]:
    """Rescale targets so they sum to the enclosure area.

    Cartogram inputs are ratio data, so only proportions matter.
    """
    ids = layout.ids()
    missing = ids - set(targets)
    extra = set(targets) - ids
    if missing:
        raise ValueError(f"targets missing ids: {sorted(missing)}")
    if extra:
        raise ValueError(f"targets name unknown ids: {sorted(extra)}")
    for v, t in targets.items():
        if not t > 0:
            raise ValueError(f"target for {v!r} must be positive, got {t!r}")
    x0, y0, x1, y1 = layout.bounds()
    scale = ((x1 - x0) * (y1 - y0)) / sum(targets.values())
    return {v: t * scale for v, t in targets.items()}


class _SegmentSystem:
    """Rect coordinates expressed through segment-level variables.

    Each rect side is bound either to the fixed enclosure boundary or to one
    maximal segment; sliding a segment moves every edge on it at once, which
    is exactly the freedom the one-sidedness property guarantees is safe.
    """

    def __init__(self, layout: Layout):
        self.x0, self.y0, self.x1, self.y1 = layout.bounds()
        self.segments = verifier.extract_maximal_segments(layout)
        self.level = [float(s.level) for s in self.segments]
        by_line: dict[tuple[str, int], list[tuple[int, int, int]]] = defaultdict(list)
        for i, s in enumerate(self.segments):
            by_line[(s.orientation, s.level)].append((s.lo, s.hi, i))

        def bind(orient: str, lvl: int, lo: int, hi: int):
            for slo, shi, idx in by_line.get((orient, lvl), ()):
                if slo <= lo and hi <= shi:
                    return ("s", idx)
            raise ValueError("internal edge not covered by any maximal segment")

        # Per rect: bindings for left, right, bottom, top.
        self.ids: list[VertexId] = []
        self.binds: list[tuple] = []
        # Rect indices abutting each segment from the low / high side.
        self.low_side: list[list[int]] = [[] for _ in self.segments]
        self.high_side: list[list[int]] = [[] for _ in self.segments]
        for k, r in enumerate(layout.rects):
            bl = ("f", float(r.x)) if r.x == self.x0 else bind("v", r.x, r.y, r.y2)
            br = ("f", float(r.x2)) if r.x2 == self.x1 else bind("v", r.x2, r.y, r.y2)
            bb = ("f", float(r.y)) if r.y == self.y0 else bind("h", r.y, r.x, r.x2)
            bt = ("f", float(r.y2)) if r.y2 == self.y1 else bind("h", r.y2, r.x, r.x2)
            self.ids.append(r.id)
            self.binds.append((bl, br, bb, bt))
            if br[0] == "s":
                self.low_side[br[1]].append(k)
            if bl[0] == "s":
                self.high_side[bl[1]].append(k)
            if bt[0] == "s":
                self.low_side[bt[1]].append(k)
            if bb[0] == "s":
                self.high_side[bb[1]].append(k)

    def _val(self, b: tuple) -> float:
        return self.level[b[1]] if b[0] == "s" else b[1]

    def coords(self, k: int) -> tuple[float, float, float, float]:
        bl, br, bb, bt = self.binds[k]
        return self._val(bl), self._val(br), self._val(bb), self._val(bt)

    def area(self, k: int) -> float:
        left, right, bottom, top = self.coords(k)
        return (right - left) * (top - bottom)


def solve_areas(
    layout: Layout,
    targets: Mapping[VertexId, float],
    rel_tol: float = DEFAULT_REL_TOL,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> CartogramLayout:
    """Iterative per-segment balancing toward the target areas.

    Each sweep moves every segment to the coordinate equating the
    achieved/target area ratios of the rect groups on its two sides, clamped
    so every abutting rect keeps positive extent (which preserves the order
    of overlapping parallel segments, hence weak equivalence).  Stops when
    the max relative area error is <= rel_tol, else raises NotConverged.
    """
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    report = verifier.validate_partition(layout)
    if not report.ok:
        raise ValueError("solve_areas needs a valid partition")
    universal, witness = verifier.is_area_universal(layout)
    if not universal:
        raise NotAreaUniversal(f"layout is not area-universal; witness {witness}")

    goal_by_id = normalize_targets(layout, targets)
    sys = _SegmentSystem(layout)
    goal = [goal_by_id[v] for v in sys.ids]
    gap_x = _MIN_GAP_FRACTION * (sys.x1 - sys.x0)
    gap_y = _MIN_GAP_FRACTION * (sys.y1 - sys.y0)

    def max_rel_error() -> float:
        return max(
            abs(sys.area(k) - goal[k]) / goal[k] for k in range(len(sys.ids))
        )

    err = max_rel_error()
    best = err
    sweeps = 0
    while err > rel_tol and sweeps < max_iters:
        for i, seg in enumerate(sys.segments):
            low = sys.low_side[i]
            high = sys.high_side[i]
            a_low = sum(sys.area(k) for k in low)
            a_high = sum(sys.area(k) for k in high)
            t_low = sum(goal[k] for k in low)
            t_high = sum(goal[k] for k in high)
            horizontal = seg.orientation == "h"
            if horizontal:
                width = sum(
                    sys.coords(k)[1] - sys.coords(k)[0] for k in low
                )
                lo_lim = max(sys.coords(k)[2] for k in low)
                hi_lim = min(sys.coords(k)[3] for k in high)
                gap = gap_y
            else:
                width = sum(
                    sys.coords(k)[3] - sys.coords(k)[2] for k in low
                )
                lo_lim = max(sys.coords(k)[0] for k in low)
                hi_lim = min(sys.coords(k)[1] for k in high)
                gap = gap_x
            delta = (a_high * t_low - a_low * t_high) / (width * (t_low + t_high))
            if hi_lim - lo_lim > 2 * gap:
                sys.level[i] = min(max(sys.level[i] + delta, lo_lim + gap), hi_lim - gap)
        sweeps += 1
        err = max_rel_error()
        best = min(best, err)
    if err > rel_tol:
        raise NotConverged(sweeps, best)

    edges = [(sys.ids[k], *sys.coords(k)) for k in range(len(sys.ids))]
    _check_cartogram(layout, edges)
    rects = tuple(
        CartogramRect(rid, left, bottom, right - left, top - bottom)
        for rid, left, right, bottom, top in edges
    )
    return CartogramLayout(
        rects, (float(layout.origin[0]), float(layout.origin[1])), err
    )


_Edges = list[tuple[VertexId, float, float, float, float]]  # id, l, r, b, t


def _snap_edges(c: CartogramLayout) -> _Edges:
    """Recover exact shared edge coordinates from a serialized cartogram.

    x + w only approximates the shared right-edge level after a JSON round
    trip, so coordinates within a snap tolerance far below the solver's
    minimum segment gap are clustered to one representative.
    """
    xs = sorted({r.x for r in c.rects} | {r.x + r.w for r in c.rects})
    ys = sorted({r.y for r in c.rects} | {r.y + r.h for r in c.rects})

    def snap_map(values: list[float]) -> dict[float, float]:
        span = max(values[-1] - values[0], 1.0)
        eps = 1e-11 * span
        rep: dict[float, float] = {}
        anchor = values[0]
        for v in values:
            if v - anchor > eps:
                anchor = v
            rep[v] = anchor
        return rep

    sx = snap_map(xs)
    sy = snap_map(ys)
    return [
        (r.id, sx[r.x], sx[r.x + r.w], sy[r.y], sy[r.y + r.h]) for r in c.rects
    ]


def _edge_contacts(edges: _Edges) -> dict[frozenset, tuple[str, VertexId]]:
    out: dict[frozenset, tuple[str, VertexId]] = {}
    for ida, la, ra, ba, ta in edges:
        for idb, lb, rb, bb, tb in edges:
            if ida >= idb:
                continue
            if ra == lb and min(ta, tb) > max(ba, bb):
                out[frozenset((ida, idb))] = ("h", ida)
            elif rb == la and min(ta, tb) > max(ba, bb):
                out[frozenset((ida, idb))] = ("h", idb)
            elif ta == bb and min(ra, rb) > max(la, lb):
                out[frozenset((ida, idb))] = ("v", ida)
            elif tb == ba and min(ra, rb) > max(la, lb):
                out[frozenset((ida, idb))] = ("v", idb)
    return out


def cartogram_contacts(c: CartogramLayout) -> dict[frozenset, tuple[str, VertexId]]:
    """Contact pairs with direction for a cartogram (snap-tolerant)."""
    return _edge_contacts(_snap_edges(c))


def cartogram_weak_equivalent(source: Layout, c: CartogramLayout) -> bool:
    if source.ids() != {r.id for r in c.rects}:
        return False
    return cartogram_contacts(c) == verifier._contact_pairs(source)


def _check_cartogram(source: Layout, edges: _Edges) -> None:
    """Self-check on exact edge coordinates: positive extents, exact tiling,
    and weak equivalence with the source."""
    for rid, left, right, bottom, top in edges:
        if not (right > left and top > bottom):
            raise RuntimeError(f"solver produced nonpositive extent for {rid!r}")
    xs = sorted({e[1] for e in edges} | {e[2] for e in edges})
    y0 = min(e[3] for e in edges)
    y1 = max(e[4] for e in edges)
    for a, b in zip(xs, xs[1:]):
        cover = sorted((e[3], e[4]) for e in edges if e[1] <= a and e[2] >= b)
        cursor = y0
        for lo, hi in cover:
            if lo != cursor:
                raise RuntimeError("solver produced a gap or overlap")
            cursor = hi
        if cursor != y1:
            raise RuntimeError("solver produced a non-rectangular union")
    if _edge_contacts(edges) != verifier._contact_pairs(source):
        raise RuntimeError("solver output is not weak-equivalent to its source")
