"""Seeded generator of constructible instances, grown from the geometry side:
random full-side strip insertions whose contact graph is then extracted, so
membership holds by construction."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .builder import SIDE_ORDER, _Frame
from .detector import Degree4Path, MembershipCertificate, enumerate_degree4_paths
from .graphs import PlaneGraph, VertexId
from .layout import Layout
from .verifier import contact_graph

# Row of 3 plus the six deterministic strips below.
MIN_SIZE = 9

_MAX_ROW = 8


@dataclass(frozen=True)
class GeneratedInstance:
    graph: PlaneGraph
    path: Degree4Path
    certificate: MembershipCertificate
    layout: Layout
    requested_size: int
    size: int
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "requested_size": self.requested_size,
            "size": self.size,
            "seed": self.seed,
            "graph": [[u, w] for u, w in self.graph.edges()],
            "certificate": self.certificate.to_json_dict(),
            "layout": self.layout.to_json_dict(),
        }


def generate(size: int, seed: int) -> GeneratedInstance:
    """Deterministic instance with `max(size, MIN_SIZE)` rects.

    The seed row gets degree exactly 4 via a fixed sealing sequence (bottom,
    top, right, left strips, then one more bottom and top cover); the seal
    also pins every strip adjacent to the row away from degree 4, so the row
    is always the first enumerated degree-4 path.  Labels are zero-padded so
    lexicographic order equals generation order, which makes the detector's
    worklist reproduce this exact insertion order.
    """
    if size < 2:
        raise ValueError("size must be at least 2")
    rng = random.Random(f"rectdual-generate:{seed}")
    total = max(size, MIN_SIZE)
    k = rng.randint(3, min(_MAX_ROW, total - 6))
    width = len(str(total))
    names = [f"v{i:0{width}d}" for i in range(1, total + 1)]

    row = names[:k]
    frame = _Frame.from_row(row, (0, 0))
    insertions: list[tuple[VertexId, tuple[VertexId, ...]]] = []

    def put(v: VertexId, side: str) -> None:
        placed = tuple(sorted(frame.sides[side]))
        insertions.append((v, placed))
        frame.insert_on_side(v, side)

    seal_sides = ("bottom", "top", "right", "left", "bottom", "top")
    for v, side in zip(names[k : k + 6], seal_sides):
        put(v, side)
    # Tail discipline keeps the contact graph biconnected: a strip that spans
    # the full enclosure cross-section with rects on both sides would be a
    # cut vertex, so the last insertions must re-extend both axes.
    rest = names[k + 6 :]
    if len(rest) == 1:
        put(rest[0], rng.choice(("left", "right")))
    elif len(rest) >= 2:
        for v in rest[:-2]:
            put(v, rng.choice(SIDE_ORDER))
        put(rest[-2], "bottom")
        put(rest[-1], "right")

    layout = frame.to_layout((0, 0))
    graph = contact_graph(layout)
    path = Degree4Path(tuple(row))
    cert = MembershipCertificate(path, tuple(insertions))

    paths = enumerate_degree4_paths(graph)
    if not paths or paths[0].canonical() != path.canonical():
        raise RuntimeError(
            f"generator invariant broken for seed={seed}, size={size}: "
            "seed row is not the first degree-4 path"
        )
    return GeneratedInstance(graph, path, cert, layout, size, total, seed)
