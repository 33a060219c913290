"""Exact geometry, string graphs, balanced separators, and decompositions.

The package builds intersection graphs of polyline curves with exact integer
arithmetic, finds balanced 2/3 vertex separators (exact, BFS, and spectral),
uses them to extract large independent sets and colorings of K_t-free string
graphs, finds balanced complete bipartite subgraphs, certifies per-vertex
edge bounds for K_{t,t}-free string graphs, and analyzes crossings in graph
drawings. A CLI (`stringgraphs`) and a JSON-config experiment harness sit on
top; everything is deterministic for fixed inputs and seeds.
"""

__version__ = "0.1.0"

from .bounds import (
    DEFAULT_PARAMS,
    EdgeBoundCertificate,
    ParamSet,
    biclique_target_size,
    bracketed_product,
    chromatic_bound,
    independence_target,
    ktt_edge_bound,
    quasi_planar_edge_bound,
    separator_size_bound,
)
from .crossings import crossing_count, crossing_pair_sets, quasi_planarity
from .decomposition import (
    BicliqueResult,
    CliqueOrIndependent,
    Coloring,
    biclique_is_complete,
    clique_or_independent,
    color_graph,
    find_independent_set,
    greedy_biclique,
    is_proper_coloring,
    max_biclique_exact,
)
from .errors import InputError, InvariantError
from .generators import (
    SplitMix64,
    convex_drawing,
    disjoint_segments,
    grid_biclique,
    interval_path,
    pairwise_crossing_star,
    random_drawing,
    random_plane_drawing,
    random_segments,
)
from .geometry import (
    COORDINATE_LIMIT,
    Point,
    Polyline,
    Segment,
    open_edges_intersect,
    orient,
    polylines_intersect,
    segments_intersect,
)
from .graphs import (
    CurveFamily,
    Drawing,
    Graph,
    build_edge_crossing_graph,
    build_string_graph,
    connected_components,
    find_clique,
    induced_subgraph,
    is_clique,
    is_independent_set,
    is_kt_free,
    maximum_independent_set,
)
from .separators import (
    SeparatorResult,
    bfs_separator,
    exact_min_separator,
    is_valid_separator,
    make_separator,
    spectral_separator,
    split_separator,
    trivial_separator,
)

__all__ = [
    "__version__",
    "COORDINATE_LIMIT",
    "DEFAULT_PARAMS",
    "BicliqueResult",
    "CliqueOrIndependent",
    "Coloring",
    "CurveFamily",
    "Drawing",
    "EdgeBoundCertificate",
    "Graph",
    "InputError",
    "InvariantError",
    "ParamSet",
    "Point",
    "Polyline",
    "Segment",
    "SeparatorResult",
    "SplitMix64",
    "bfs_separator",
    "biclique_is_complete",
    "biclique_target_size",
    "bracketed_product",
    "build_edge_crossing_graph",
    "build_string_graph",
    "chromatic_bound",
    "clique_or_independent",
    "color_graph",
    "connected_components",
    "convex_drawing",
    "crossing_count",
    "crossing_pair_sets",
    "disjoint_segments",
    "exact_min_separator",
    "find_clique",
    "find_independent_set",
    "greedy_biclique",
    "grid_biclique",
    "independence_target",
    "induced_subgraph",
    "interval_path",
    "is_clique",
    "is_independent_set",
    "is_kt_free",
    "is_proper_coloring",
    "is_valid_separator",
    "ktt_edge_bound",
    "make_separator",
    "max_biclique_exact",
    "maximum_independent_set",
    "open_edges_intersect",
    "orient",
    "pairwise_crossing_star",
    "polylines_intersect",
    "quasi_planar_edge_bound",
    "quasi_planarity",
    "random_drawing",
    "random_plane_drawing",
    "random_segments",
    "segments_intersect",
    "separator_size_bound",
    "spectral_separator",
    "split_separator",
    "trivial_separator",
]
