"""Membership detection: degree-4 path enumeration and the insertion-chain
fixpoint, producing certificates the builder replays."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .graphs import PlaneGraph, VertexId

# A vertex outside the current set L is insertable when it touches L and has
# at most this many neighbours still outside L.
MAX_OUTSIDE_NEIGHBORS = 3


class NotBiconnectedError(Exception):
    """Membership checking is defined for biconnected graphs only."""


class InvalidPathError(ValueError):
    """Sequence of vertices that is not a path in the source graph."""


@dataclass(frozen=True)
class Degree4Path:
    """A path whose vertices all have degree 4 in the source graph.

    Enumeration guarantees the degree condition; hand-built instances are
    validated against a graph only where consecutive adjacency matters.
    """

    vertices: tuple[VertexId, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def canonical(self) -> tuple[VertexId, ...]:
        """Reversal-invariant key for deduplication."""
        fwd = self.vertices
        rev = tuple(reversed(fwd))
        return min(fwd, rev)


@dataclass(frozen=True)
class MembershipCertificate:
    """Witness of membership: a seed path plus the insertion order.

    Each insertion records the vertex and its already-placed neighbours;
    replaying the insertions keeps every step's outside-neighbour count at
    most MAX_OUTSIDE_NEIGHBORS.
    """

    path: Degree4Path
    insertions: tuple[tuple[VertexId, tuple[VertexId, ...]], ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "path": list(self.path.vertices),
            "insertions": [
                {"vertex": v, "placed_neighbors": list(placed)}
                for v, placed in self.insertions
            ],
        }


def certificate_from_json_dict(data: Any) -> MembershipCertificate:
    path = Degree4Path(tuple(data["path"]))
    insertions = tuple(
        (entry["vertex"], tuple(entry["placed_neighbors"]))
        for entry in data["insertions"]
    )
    return MembershipCertificate(path, insertions)


@dataclass(frozen=True)
class ClassCResult:
    """Outcome of classification.

    The method is sufficient, not necessary, so every negative outcome is
    `inconclusive` rather than a rejection.
    """

    verdict: str  # "member" | "inconclusive"
    certificate: Optional[MembershipCertificate]
    tried_paths: tuple[Degree4Path, ...]

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "certificate": (
                self.certificate.to_json_dict() if self.certificate else None
            ),
            "tried_paths": [list(p.vertices) for p in self.tried_paths],
        }


def _cut_vertices(g: PlaneGraph) -> set[VertexId]:
    """Articulation points, iterative (safe for 1e5-vertex graphs)."""
    index: dict[VertexId, int] = {}
    low: dict[VertexId, int] = {}
    parent: dict[VertexId, Optional[VertexId]] = {}
    cuts: set[VertexId] = set()
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        parent[root] = None
        root_children = 0
        counter += 1
        index[root] = low[root] = counter
        stack: list[tuple[VertexId, Any]] = [(root, iter(sorted(g.neighborhood(root))))]
        while stack:
            v, it = stack[-1]
            descended = False
            for w in it:
                if w not in index:
                    parent[w] = v
                    counter += 1
                    index[w] = low[w] = counter
                    if v == root:
                        root_children += 1
                    stack.append((w, iter(sorted(g.neighborhood(w)))))
                    descended = True
                    break
                if w != parent[v]:
                    low[v] = min(low[v], index[w])
            if not descended:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if u != root and low[v] >= index[u]:
                        cuts.add(u)
        if root_children >= 2:
            cuts.add(root)
    return cuts


def is_biconnected(g: PlaneGraph) -> bool:
    return g.n >= 2 and g.is_connected() and not _cut_vertices(g)


def _greedy_chain(g: PlaneGraph, start: VertexId, deg4: set[VertexId]) -> list[VertexId]:
    """Maximal chain through `start`, extending each end toward the
    lexicographically smallest unvisited degree-4 neighbour."""
    chain = [start]
    visited = {start}
    for extend_tail in (True, False):
        while True:
            cur = chain[-1] if extend_tail else chain[0]
            candidates = [
                w for w in g.neighborhood(cur) if w in deg4 and w not in visited
            ]
            if not candidates:
                break
            nxt = min(candidates)
            visited.add(nxt)
            if extend_tail:
                chain.append(nxt)
            else:
                chain.insert(0, nxt)
    return chain


def enumerate_degree4_paths(g: PlaneGraph) -> list[Degree4Path]:
    """All greedy degree-4 chains of length >= 2, from every degree-4 start,
    deduplicated up to reversal.  Empty when no degree-4 vertex has a
    degree-4 neighbour."""
    deg4 = {v for v in g.vertices if g.degree(v) == 4}
    out: list[Degree4Path] = []
    seen: set[tuple[VertexId, ...]] = set()
    for start in sorted(deg4):
        chain = _greedy_chain(g, start, deg4)
        if len(chain) < 2:
            continue
        path = Degree4Path(tuple(chain))
        key = path.canonical()
        if key not in seen:
            seen.add(key)
            out.append(path)
    return out


def validate_path(g: PlaneGraph, path: Degree4Path) -> None:
    """Check `path` is a simple path of length >= 2 in `g`.

    Degree-4-ness is an enumeration-side guarantee, deliberately not
    re-checked here: the insertion chain itself only needs a path seed.
    """
    verts = path.vertices
    if len(verts) < 2:
        raise InvalidPathError("path must have at least two vertices")
    if len(set(verts)) != len(verts):
        raise InvalidPathError("path vertices must be distinct")
    for v in verts:
        if v not in g:
            raise InvalidPathError(f"path vertex {v!r} not in graph")
    for u, w in zip(verts, verts[1:]):
        if not g.has_edge(u, w):
            raise InvalidPathError(f"path vertices {u!r}, {w!r} are not adjacent")


def check_membership(
    g: PlaneGraph, path: Degree4Path
) -> Optional[MembershipCertificate]:
    """Grow L from the path by repeated label-order passes until fixpoint.

    The insertion condition is monotone in L (once insertable, always
    insertable), so the fixpoint reaches V exactly when some insertion order
    does; scanning in label order just pins the certificate deterministically.
    Returns None when the fixpoint stops short of V.
    """
    validate_path(g, path)
    if not is_biconnected(g):
        raise NotBiconnectedError("membership check requires a biconnected graph")

    placed_set = set(path.vertices)
    placed_count: dict[VertexId, int] = {}
    for u in placed_set:
        for w in g.neighborhood(u):
            if w not in placed_set:
                placed_count[w] = placed_count.get(w, 0) + 1

    remaining = sorted(v for v in g.vertices if v not in placed_set)
    insertions: list[tuple[VertexId, tuple[VertexId, ...]]] = []
    while remaining:
        progressed = False
        next_remaining: list[VertexId] = []
        for v in remaining:
            hits = placed_count.get(v, 0)
            if hits >= 1 and g.degree(v) - hits <= MAX_OUTSIDE_NEIGHBORS:
                placed = tuple(sorted(u for u in g.neighborhood(v) if u in placed_set))
                insertions.append((v, placed))
                placed_set.add(v)
                for w in g.neighborhood(v):
                    if w not in placed_set:
                        placed_count[w] = placed_count.get(w, 0) + 1
                progressed = True
            else:
                next_remaining.append(v)
        remaining = next_remaining
        if not progressed:
            return None
    return MembershipCertificate(path, tuple(insertions))


def classify(g: PlaneGraph) -> ClassCResult:
    """Try every enumerated degree-4 path; member on the first success."""
    tried: list[Degree4Path] = []
    for path in enumerate_degree4_paths(g):
        tried.append(path)
        cert = check_membership(g, path)
        if cert is not None:
            return ClassCResult("member", cert, tuple(tried))
    return ClassCResult("inconclusive", None, tuple(tried))
