"""Analyses of topological drawings through their edge crossing graphs.

Every function here starts the same way: build the intersection graph of the
drawing's open edges (endpoints excluded) and then ask a combinatorial
question about it. Crossing certificates are re-verified geometrically
before being returned.
"""

from __future__ import annotations

from .decomposition import (
    EXACT_BICLIQUE_MAX_N,
    BicliqueResult,
    greedy_biclique,
    max_biclique_exact,
)
from .errors import InvariantError
from .geometry import open_edges_intersect
from .graphs import Drawing, Graph, build_edge_crossing_graph, induced_subgraph, is_kt_free


def crossing_count(drawing: Drawing) -> tuple[int, float | None]:
    """Number of unordered crossing edge pairs, plus the scale-free ratio.

    The ratio count * n^2 / m^3 is only meaningful in the dense regime and
    is reported when m >= 4n, else None.
    """
    count = build_edge_crossing_graph(drawing).m
    n, m = drawing.n, drawing.m
    ratio = count * n * n / m**3 if m >= 4 * n and m > 0 else None
    return count, ratio


def quasi_planarity(drawing: Drawing, t: int) -> bool:
    """True iff no t edges pairwise cross (no K_t in the crossing graph)."""
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    return is_kt_free(build_edge_crossing_graph(drawing), t)


def _edges_cross(drawing: Drawing, i: int, j: int) -> bool:
    ui, vi, ci = drawing.edges[i]
    uj, vj, cj = drawing.edges[j]
    shared = frozenset(drawing.points[w] for w in {ui, vi} & {uj, vj})
    return open_edges_intersect(ci, cj, shared)


def crossing_pair_sets(drawing: Drawing) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two edge-index sets with every pair (one from each) crossing.

    Extracts a balanced biclique from the crossing graph: exactly when at
    most 16 edges participate in any crossing, greedily otherwise. The
    result is re-verified against the geometry before being returned.
    """
    crossing_graph = build_edge_crossing_graph(drawing)
    involved = [v for v in range(crossing_graph.n) if crossing_graph.degree(v) > 0]
    if len(involved) <= EXACT_BICLIQUE_MAX_N:
        sub, old_ids = induced_subgraph(crossing_graph, involved)
        found = max_biclique_exact(sub)
        result = BicliqueResult(
            tuple(old_ids[i] for i in found.a), tuple(old_ids[i] for i in found.b)
        )
    else:
        result = greedy_biclique(crossing_graph)

    for i in result.a:
        for j in result.b:
            if not _edges_cross(drawing, i, j):
                raise InvariantError(
                    f"crossing-pair certificate failed geometric recheck on edges {i}, {j}"
                )
    return result.a, result.b
