"""Graphs, curve families, drawings, and the exact searches everything else uses.

Vertices are dense integer indices 0..n-1. Graphs are immutable; edges are
normalized to pairs (u, v) with u < v. The exact clique / independent-set
searches here are meant for desk scale (they are exponential in the worst
case) and are the ground truth the heuristic layers are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .geometry import (
    Point,
    Polyline,
    boxes_separated,
    on_segment,
    open_edges_intersect,
    polylines_intersect,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    _adj: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, default=()
    )

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"bad vertex count {self.n!r}")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"non-integer edge {e!r}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e!r} out of range or not normalized (u < v)")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build from unordered pairs; duplicates collapse, loops are rejected."""
        normalized = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            normalized.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph plus the index mapping.

    Returns (subgraph, old_ids) where old_ids[new] is the original index of
    the subgraph's vertex `new`; old ids are kept in ascending order, so the
    inverse old->new map is just a position lookup.
    """
    old_ids = tuple(sorted(set(vertices)))
    for v in old_ids:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    new_index = {v: i for i, v in enumerate(old_ids)}
    edges = frozenset(
        (new_index[u], new_index[v])
        for u, v in g.edges
        if u in new_index and v in new_index
    )
    return Graph(len(old_ids), edges), old_ids


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    components: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    frontier.append(w)
        components.append(sorted(comp))
    return components


def bfs_layers(g: Graph, root: int) -> list[list[int]]:
    """Breadth-first layers from root (each layer sorted); unreachable
    vertices do not appear."""
    if not (0 <= root < g.n):
        raise ValueError(f"root {root} out of range")
    seen = {root}
    layers = [[root]]
    while True:
        nxt = set()
        for v in layers[-1]:
            for w in g.neighbors(v):
                if w not in seen:
                    nxt.add(w)
        if not nxt:
            return layers
        seen |= nxt
        layers.append(sorted(nxt))


def max_degree_vertex(g: Graph) -> int:
    """Smallest-index vertex of maximum degree."""
    if g.n == 0:
        raise ValueError("empty graph")
    best = 0
    for v in range(1, g.n):
        if g.degree(v) > g.degree(best):
            best = v
    return best


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    vs = sorted(set(vertices))
    for i, u in enumerate(vs):
        nb = g.neighbors(u)
        for v in vs[i + 1 :]:
            if v in nb:
                return False
    return True


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = sorted(set(vertices))
    for i, u in enumerate(vs):
        nb = g.neighbors(u)
        for v in vs[i + 1 :]:
            if v not in nb:
                return False
    return True


def find_clique(g: Graph, t: int) -> tuple[int, ...] | None:
    """Lexicographically first clique on exactly t vertices, or None.

    Plain backtracking over ascending candidate lists with a counting prune;
    exact, deterministic, intended for desk scale (may be slow on large dense
    graphs).
    """
    if t < 1:
        raise ValueError("clique size must be >= 1")
    if t > g.n:
        return None
    if t == 1:
        return (0,)

    def extend(prefix: list[int], cands: list[int]) -> tuple[int, ...] | None:
        if len(prefix) == t:
            return tuple(prefix)
        need = t - len(prefix)
        for i, v in enumerate(cands):
            if len(cands) - i < need:
                return None
            nb = g.neighbors(v)
            prefix.append(v)
            found = extend(prefix, [w for w in cands[i + 1 :] if w in nb])
            if found is not None:
                return found
            prefix.pop()
        return None

    return extend([], list(range(g.n)))


def is_kt_free(g: Graph, t: int) -> bool:
    """True iff g has no clique on t vertices; exact."""
    return find_clique(g, t) is None


def maximum_independent_set(g: Graph) -> tuple[int, ...]:
    """Exact maximum independent set by branch and bound over bitmasks.

    Branches on a maximum-degree vertex of the remaining subproblem
    (ties to the smallest index), pruning with the remaining-vertex count.
    Deterministic; comfortable to n around 40 on sparse graphs.
    """
    n = g.n
    if n == 0:
        return ()
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    best_mask = 0
    best_size = 0

    def branch(avail: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        if size + avail.bit_count() <= best_size:
            return
        if avail == 0:
            best_size, best_mask = size, chosen
            return
        # pick the available vertex with most available neighbors
        pick = -1
        pick_deg = -1
        rest = avail
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            deg = (adj[v] & avail).bit_count()
            if deg > pick_deg:
                pick, pick_deg = v, deg
        branch(avail & ~(adj[pick] | (1 << pick)), chosen | (1 << pick), size + 1)
        if pick_deg > 0:  # excluding an isolated vertex can never help
            branch(avail & ~(1 << pick), chosen, size)

    branch((1 << n) - 1, 0, 0)
    return tuple(v for v in range(n) if best_mask >> v & 1)


@dataclass(frozen=True)
class CurveFamily:
    """Indexed curves; curve i is vertex i of the derived string graph."""

    curves: tuple[Polyline, ...]

    def __post_init__(self) -> None:
        if not self.curves:
            raise ValueError("curve family needs at least one curve")
        for c in self.curves:
            if not isinstance(c, Polyline):
                raise ValueError(f"not a polyline: {c!r}")

    @property
    def n(self) -> int:
        return len(self.curves)

    def translated(self, dx: int, dy: int) -> "CurveFamily":
        return CurveFamily(tuple(c.translated(dx, dy) for c in self.curves))


def build_string_graph(family: CurveFamily, use_bbox_prefilter: bool = False) -> Graph:
    """Intersection graph of the family: edge (u, v) iff the curves meet.

    Exhaustive pairwise testing; the bounding-box prefilter only skips pairs
    whose boxes are strictly disjoint, so it cannot change the result.
    """
    curves = family.curves
    boxes = [c.bounding_box() for c in curves] if use_bbox_prefilter else None
    edges = set()
    for u in range(len(curves)):
        for v in range(u + 1, len(curves)):
            if boxes is not None and boxes_separated(boxes[u], boxes[v]):
                continue
            if polylines_intersect(curves[u], curves[v]):
                edges.add((u, v))
    return Graph(len(curves), frozenset(edges))


@dataclass(frozen=True)
class Drawing:
    """A topological graph: vertex points plus one polyline per edge.

    Construction normalizes each edge to u < v (reversing its curve when
    needed) and enforces: simple underlying graph, distinct vertex points,
    each curve running from points[u] to points[v], and no curve passing
    through any vertex point other than its own endpoints.
    """

    points: tuple[Point, ...]
    edges: tuple[tuple[int, int, Polyline], ...]

    def __post_init__(self) -> None:
        n = len(self.points)
        if len(set(self.points)) != n:
            raise ValueError("vertex points must be pairwise distinct")
        normalized = []
        seen_pairs = set()
        for u, v, curve in self.edges:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"non-integer endpoints ({u!r}, {v!r})")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u > v:
                u, v = v, u
                curve = Polyline(tuple(reversed(curve.points)))
            if (u, v) in seen_pairs:
                raise ValueError(f"parallel edge ({u}, {v})")
            seen_pairs.add((u, v))
            if curve.first != self.points[u] or curve.last != self.points[v]:
                raise ValueError(
                    f"curve of edge ({u}, {v}) must run from {self.points[u]} "
                    f"to {self.points[v]}"
                )
            normalized.append((u, v, curve))
        object.__setattr__(self, "edges", tuple(normalized))
        self._check_vertex_passing()

    def _check_vertex_passing(self) -> None:
        # no curve may touch a vertex point other than its two endpoints
        for u, v, curve in self.edges:
            for w, p in enumerate(self.points):
                if w == u or w == v:
                    continue
                for seg in curve.segments():
                    if on_segment(seg, p):
                        raise ValueError(
                            f"curve of edge ({u}, {v}) passes through vertex {w}"
                        )

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.edges)

    def graph(self) -> Graph:
        """The underlying abstract simple graph."""
        return Graph(self.n, frozenset((u, v) for u, v, _ in self.edges))


def build_edge_crossing_graph(drawing: Drawing) -> Graph:
    """Intersection graph of the drawing's open edges.

    One vertex per drawing edge (in drawing order); two edge-vertices are
    adjacent iff their curves share a point other than a common endpoint.
    The result is itself a string graph on m vertices.
    """
    m = len(drawing.edges)
    edges = set()
    for i in range(m):
        ui, vi, ci = drawing.edges[i]
        for j in range(i + 1, m):
            uj, vj, cj = drawing.edges[j]
            shared = frozenset(drawing.points[w] for w in {ui, vi} & {uj, vj})
            if open_edges_intersect(ci, cj, shared):
                edges.add((i, j))
    return Graph(m, frozenset(edges))
