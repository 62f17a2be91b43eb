"""Plane graph data model, edge-list parsing, and basic queries."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

VertexId = str

# Text format: one "U V" pair per line, blank lines and '#' comments allowed.
_COMMENT = "#"


class GraphError(Exception):
    """Structurally invalid graph or bad graph query."""


class GraphParseError(GraphError):
    """Edge-list input that cannot be parsed into a valid graph."""


class PlaneGraph:
    """Undirected simple graph with string-labelled vertices.

    Immutable after construction; all queries are pure, so instances can be
    shared freely between threads.  Connectivity is enforced by
    :func:`parse_graph`, not by the constructor, so induced subgraphs may be
    disconnected -- callers check :meth:`is_connected` where it matters.
    """

    __slots__ = ("_order", "_adj")

    def __init__(
        self,
        edges: Iterable[tuple[VertexId, VertexId]] = (),
        vertices: Iterable[VertexId] = (),
    ):
        order: list[VertexId] = []
        adj: dict[VertexId, set[VertexId]] = {}

        def note(v: VertexId) -> None:
            if not isinstance(v, str) or not v or v.split() != [v]:
                raise GraphError(f"bad vertex label: {v!r}")
            if v not in adj:
                adj[v] = set()
                order.append(v)

        for v in vertices:
            note(v)
        for u, w in edges:
            note(u)
            note(w)
            if u == w:
                raise GraphError(f"self-loop at {u!r}")
            adj[u].add(w)
            adj[w].add(u)

        self._order = tuple(order)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return self._order

    @property
    def n(self) -> int:
        return len(self._order)

    def __contains__(self, v: VertexId) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset(self._adj.items()))

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.edge_count()})"

    def _require(self, v: VertexId) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v!r}")

    def degree(self, v: VertexId) -> int:
        self._require(v)
        return len(self._adj[v])

    def neighborhood(self, v: VertexId) -> set[VertexId]:
        """Return N(v) as a fresh set; mutating it does not affect the graph."""
        self._require(v)
        return set(self._adj[v])

    def _neighbors(self, v: VertexId) -> frozenset[VertexId]:
        """No-copy adjacency view for hot paths; treat as read-only."""
        return self._adj[v]

    def has_edge(self, u: VertexId, w: VertexId) -> bool:
        self._require(u)
        self._require(w)
        return w in self._adj[u]

    def edges(self) -> list[tuple[VertexId, VertexId]]:
        """All edges as (u, w) pairs with u < w, sorted lexicographically."""
        out = [(u, w) for u, ns in self._adj.items() for w in ns if u < w]
        out.sort()
        return out

    def edge_count(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def induced_subgraph(self, keep: Iterable[VertexId]) -> "PlaneGraph":
        """Subgraph on `keep` with every edge of this graph inside `keep`.

        The result may be disconnected; the caller decides whether that is an
        error (check :meth:`is_connected`).
        """
        kept = set()
        for v in keep:
            self._require(v)
            kept.add(v)
        if not kept:
            raise GraphError("induced subgraph needs a nonempty vertex set")
        verts = [v for v in self._order if v in kept]
        edges = [
            (u, w) for u in verts for w in self._adj[u] if u < w and w in kept
        ]
        return PlaneGraph(edges, vertices=verts)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {self._order[0]}
        queue = deque(seen)
        while queue:
            for w in self._adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n


def parse_graph(text: str | bytes) -> PlaneGraph:
    """Parse UTF-8 edge-list text into a validated PlaneGraph.

    Vertex order is first-appearance order.  Rejects malformed lines,
    self-loops, duplicate edges, disconnected graphs, and graphs violating
    the planarity edge bound |E| <= 3|V| - 6 (for |V| >= 3).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    edges: list[tuple[VertexId, VertexId]] = []
    seen_edges: set[frozenset[VertexId]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'U V', got {raw!r}")
        u, w = parts
        if u == w:
            raise GraphParseError(f"line {lineno}: self-loop at {u!r}")
        key = frozenset((u, w))
        if key in seen_edges:
            raise GraphParseError(f"line {lineno}: duplicate edge {u} {w}")
        seen_edges.add(key)
        edges.append((u, w))
    if not edges:
        raise GraphParseError("no edges found")
    g = PlaneGraph(edges)
    if not g.is_connected():
        raise GraphParseError("graph is not connected")
    if g.n >= 3 and g.edge_count() > 3 * g.n - 6:
        raise GraphParseError(
            f"edge bound violated: {g.edge_count()} > 3*{g.n} - 6 (not planar)"
        )
    return g


def serialize_graph(g: PlaneGraph) -> str:
    """Edge-list text for `g`; parse_graph(serialize_graph(g)) == g."""
    return "".join(f"{u} {w}\n" for u, w in g.edges())


def sorted_vertices(g: PlaneGraph) -> list[VertexId]:
    """Vertices in lexicographic order, for deterministic iteration."""
    return sorted(g.vertices)
