"""Recursive decomposition: independent sets, coloring, bicliques, and the
clique-versus-independent-set dichotomy.

The central routine is find_independent_set. On a graph that is sparse for
its size it splits along a balanced separator and recurses into both sides
with the same clique parameter t; on a dense graph it extracts a balanced
biclique and, when the sides reach the reference density target, recurses
into both sides with parameter ceil(t/2), keeping the larger answer (a
biclique below target falls back to the separator split, which keeps every
non-separator vertex). Exact branch-and-bound search anchors the recursion
below base_case_n. The sparse/dense threshold is m <= eps * n^2 with
eps = (4 d (log2 n)^2)^(-2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .bounds import DEFAULT_PARAMS, ParamSet, biclique_target_size, chromatic_bound
from .errors import InvariantError
from .graphs import (
    Graph,
    find_clique,
    induced_subgraph,
    is_clique,
    is_independent_set,
    maximum_independent_set,
)
from .separators import spectral_separator

EXACT_BICLIQUE_MAX_N = 16


@dataclass(frozen=True)
class BicliqueResult:
    """A balanced complete bipartite subgraph: disjoint equal-size sides."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.a) != len(self.b):
            raise ValueError("sides must have equal size")
        for side in (self.a, self.b):
            if list(side) != sorted(set(side)):
                raise ValueError(f"side must be sorted and duplicate-free: {side}")
        if set(self.a) & set(self.b):
            raise ValueError("sides must be disjoint")

    @property
    def size(self) -> int:
        return len(self.a)


def biclique_is_complete(g: Graph, result: BicliqueResult) -> bool:
    """Every a-b pair really is an edge (direct re-verification)."""
    return all(g.has_edge(u, v) for u in result.a for v in result.b)


def greedy_biclique(g: Graph) -> BicliqueResult:
    """Balanced biclique by greedy alternating growth.

    Seeds with the edge of maximum endpoint-degree sum (lexicographically
    first on ties), then alternately extends each side by the candidate
    adjacent to all of the opposite side that keeps the most opposite-side
    candidates alive (smallest vertex on ties). Finally the longer side is
    truncated, dropping its most recently added vertices. Sides of size 1
    (a single edge) or 0 (empty graph) are legitimate outcomes.
    """
    if g.m == 0:
        return BicliqueResult((), ())
    seed = max(g.sorted_edges(), key=lambda e: (g.degree(e[0]) + g.degree(e[1]), -e[0], -e[1]))
    side_a = [seed[0]]
    side_b = [seed[1]]
    cand_a = set(g.neighbors(seed[1])) - {seed[0], seed[1]}
    cand_b = set(g.neighbors(seed[0])) - {seed[0], seed[1]}

    grow_a = True
    stalled = 0
    while stalled < 2:
        cands, opposite = (cand_a, cand_b) if grow_a else (cand_b, cand_a)
        best_v = -1
        best_alive = -1
        for v in sorted(cands):
            alive = len(opposite & g.neighbors(v))
            if alive > best_alive:
                best_alive = alive
                best_v = v
        if best_v < 0:
            stalled += 1
        else:
            stalled = 0
            nb = g.neighbors(best_v)
            if grow_a:
                side_a.append(best_v)
                cand_a.discard(best_v)
                cand_b &= nb
                cand_b.discard(best_v)
            else:
                side_b.append(best_v)
                cand_b.discard(best_v)
                cand_a &= nb
                cand_a.discard(best_v)
        grow_a = not grow_a

    size = min(len(side_a), len(side_b))
    return BicliqueResult(tuple(sorted(side_a[:size])), tuple(sorted(side_b[:size])))


def max_biclique_exact(g: Graph) -> BicliqueResult:
    """Maximum balanced biclique by enumeration (n <= 16 enforced).

    For every candidate side A (largest size first, lexicographic within a
    size) the other side lives in the common neighborhood of A; the first A
    whose common neighborhood (minus A) can match its size wins, with B the
    lexicographically smallest choice.
    """
    if g.n > EXACT_BICLIQUE_MAX_N:
        raise ValueError(f"exact search is capped at n = {EXACT_BICLIQUE_MAX_N}, got {g.n}")
    if g.m == 0:
        return BicliqueResult((), ())
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1

    for size in range(n // 2, 0, -1):
        for side_a in combinations(range(n), size):
            common = full
            for v in side_a:
                common &= adj[v]
                if common == 0:
                    break
            for v in side_a:
                common &= ~(1 << v)
            if common.bit_count() >= size:
                side_b = []
                rest = common
                while len(side_b) < size:
                    v = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    side_b.append(v)
                return BicliqueResult(tuple(side_a), tuple(side_b))
    return BicliqueResult((), ())


def find_independent_set(g: Graph, t: int, params: ParamSet = DEFAULT_PARAMS) -> tuple[int, ...]:
    """An independent set of g, found by recursive decomposition.

    t is the caller's promise about clique content (the graph is treated as
    K_t-free); the promise is never checked here, only used to steer the
    dense-case recursion depth. The returned set is independent regardless.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    return _find_independent(g, t, params)


def _find_independent(g: Graph, t: int, params: ParamSet) -> tuple[int, ...]:
    n = g.n
    if n == 0:
        return ()
    if g.m == 0:
        return tuple(range(n))
    if n <= params.base_case_n or n < 3:
        return maximum_independent_set(g)

    eps = (4.0 * params.d * math.log2(n) ** 2) ** -2
    if g.m > eps * n * n:
        biclique = greedy_biclique(g)
        # Recursing into the biclique discards every vertex outside it, so
        # commit only when the sides reach their density target; otherwise
        # the separator route below keeps all non-separator vertices.
        if biclique.size >= max(2.0, biclique_target_size(n, g.m, params)):
            half_t = max(2, -(-t // 2))
            best: tuple[int, ...] = ()
            for side in (biclique.a, biclique.b):
                sub, old_ids = induced_subgraph(g, side)
                found = tuple(old_ids[i] for i in _find_independent(sub, half_t, params))
                if len(found) > len(best):
                    best = found
            return tuple(sorted(best))

    separator = spectral_separator(g)
    chosen: list[int] = []
    for side in (separator.v1, separator.v2):
        if side:
            sub, old_ids = induced_subgraph(g, side)
            chosen.extend(old_ids[i] for i in _find_independent(sub, t, params))
    # the union is independent only because no edge spans v1 x v2; check it
    chosen_in_v2 = set(separator.v2) & set(chosen)
    for v in chosen:
        if v not in chosen_in_v2 and g.neighbors(v) & chosen_in_v2:
            raise InvariantError("separator sides were not edge-free")
    return tuple(sorted(chosen))


@dataclass(frozen=True)
class Coloring:
    """A proper coloring: colors[v] in 0..k-1, every color used."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        used = set(self.colors)
        if self.k != len(used):
            raise ValueError(f"k = {self.k} but {len(used)} colors used")
        if used and used != set(range(self.k)):
            raise ValueError("colors must be exactly 0..k-1")

    def color_class(self, color: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == color)


def is_proper_coloring(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        return False
    return all(coloring.colors[u] != coloring.colors[v] for u, v in g.edges)


def color_graph(
    g: Graph, t: int, params: ParamSet = DEFAULT_PARAMS
) -> tuple[Coloring, float]:
    """Color by repeatedly extracting independent sets.

    Each round runs find_independent_set on the still-uncolored subgraph and
    gives the result a fresh color. Also returns the reference color count
    4 (log2 n)^(C log2 t + 1) for reporting (trivially n when n < 2).
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    colors = [-1] * g.n
    k = 0
    remaining = list(range(g.n))
    while remaining:
        sub, old_ids = induced_subgraph(g, remaining)
        chosen = _find_independent(sub, t, params)
        if not chosen:
            raise InvariantError("independent-set search returned nothing on a nonempty graph")
        for i in chosen:
            colors[old_ids[i]] = k
        k += 1
        remaining = [v for v in remaining if colors[v] < 0]
    bound = chromatic_bound(g.n, t, params) if g.n >= 2 else float(g.n)
    coloring = Coloring(tuple(colors), k)
    if not is_proper_coloring(g, coloring):
        raise InvariantError("produced coloring is not proper")
    return coloring, bound


@dataclass(frozen=True)
class CliqueOrIndependent:
    """Outcome of the dichotomy: a clique or an independent set, re-verified,
    with the report-time targets it was measured against."""

    kind: str  # "clique" | "independent"
    vertices: tuple[int, ...]
    t: int
    independent_target: float

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def clique_target(self) -> int:
        return self.t

    @property
    def target_met(self) -> bool:
        if self.kind == "clique":
            return self.size >= self.t
        return self.size >= self.independent_target


def clique_or_independent(
    g: Graph, epsilon: float, params: ParamSet = DEFAULT_PARAMS
) -> CliqueOrIndependent:
    """Find a clique of size t = ceil(n^(c / log2 log2 n)) with c = epsilon/C,
    or failing that the largest color class of a decomposition coloring.

    The returned certificate always re-verifies (completeness or
    independence is checked before returning); whether the sizes meet the
    n^(c/log log n) and n^(1-epsilon) targets is reported, not asserted.
    """
    if g.n < 3:
        raise ValueError(f"need n >= 3, got {g.n}")
    if not 0.0 < epsilon < 1.0:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    c = epsilon / params.C
    t = max(2, math.ceil(g.n ** (c / math.log2(math.log2(g.n)))))
    independent_target = g.n ** (1.0 - epsilon)

    clique = find_clique(g, t)
    if clique is not None:
        if not is_clique(g, clique):
            raise InvariantError("clique certificate failed re-verification")
        return CliqueOrIndependent("clique", clique, t, independent_target)

    coloring, _ = color_graph(g, t, params)
    counts = [0] * coloring.k
    for color in coloring.colors:
        counts[color] += 1
    best_color = max(range(coloring.k), key=lambda color: (counts[color], -color))
    vertices = coloring.color_class(best_color)
    if not is_independent_set(g, vertices):
        raise InvariantError("independent certificate failed re-verification")
    return CliqueOrIndependent("independent", vertices, t, independent_target)
