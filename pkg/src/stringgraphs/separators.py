"""Balanced 2/3 vertex separators: checking, exact search, and heuristics.

A separator of a graph on n vertices is a partition V = S u V1 u V2 with no
edge between V1 and V2 and |V1|, |V2| <= 2n/3. The balance comparison is done
in integers (3 * size <= 2 * n) so there are no rounding questions. Removing
any ceil(n/3) vertices always leaves at most floor(2n/3) vertices in total,
so the "trivial" prefix separator is valid on every graph — it is the
fallback that makes every algorithm here total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph, bfs_layers, connected_components, max_degree_vertex

EXACT_SEPARATOR_MAX_N = 20


@dataclass(frozen=True)
class SeparatorResult:
    """A separator set with its witnessing balanced partition."""

    s: tuple[int, ...]
    v1: tuple[int, ...]
    v2: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = (self.s, self.v1, self.v2)
        for part in parts:
            if list(part) != sorted(set(part)):
                raise ValueError(f"separator parts must be sorted and duplicate-free: {part}")
        total = set(self.s) | set(self.v1) | set(self.v2)
        if len(total) != len(self.s) + len(self.v1) + len(self.v2):
            raise ValueError("separator parts must be disjoint")

    @property
    def size(self) -> int:
        return len(self.s)


def _balanced(size: int, n: int) -> bool:
    return 3 * size <= 2 * n


def _components_without(g: Graph, removed: set[int]) -> list[list[int]]:
    """Connected components of g with `removed` deleted, ordered by smallest
    member, each sorted."""
    seen = set(removed)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    frontier.append(w)
        comps.append(sorted(comp))
    return comps


def _pack_components(comps: list[list[int]], n: int) -> tuple[list[int], list[int]] | None:
    """Distribute components over two sides, both within the 2/3 balance.

    Greedy largest-first into the currently smaller side; if that misses, an
    exact subset-sum over component sizes decides (and reconstructs) a valid
    split, so the only None case is a genuinely impossible one.
    """
    order = sorted(comps, key=lambda c: (-len(c), c[0] if c else -1))
    side1: list[int] = []
    side2: list[int] = []
    for comp in order:
        (side1 if len(side1) <= len(side2) else side2).extend(comp)
    if _balanced(len(side1), n) and _balanced(len(side2), n):
        return side1, side2

    # exact fallback: find an achievable side-1 total within the window
    sizes = [len(c) for c in order]
    total = sum(sizes)
    limit = (2 * n) // 3
    low = max(0, total - limit)
    if low > limit:
        return None
    reach = [1]
    for sz in sizes:
        reach.append(reach[-1] | reach[-1] << sz)
    target = -1
    for cand in range(limit, low - 1, -1):
        if reach[-1] >> cand & 1:
            target = cand
            break
    if target < 0:
        return None
    side1, side2 = [], []
    remaining = target
    for i in range(len(sizes) - 1, -1, -1):
        if reach[i] >> remaining & 1:
            side2.extend(order[i])
        else:
            side1.extend(order[i])
            remaining -= sizes[i]
    return side1, side2


def split_separator(g: Graph, s: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """The witnessing (v1, v2) partition for separator candidate s, or None.

    Valid iff every component of g - s obeys 3*size <= 2n and the components
    pack into two sides that both obey it. v1 is the side holding the
    smallest remaining vertex (ties and empty sides normalized
    deterministically).
    """
    s_set = set(s)
    for v in s_set:
        if not (0 <= v < g.n):
            raise ValueError(f"separator vertex {v} out of range")
    comps = _components_without(g, s_set)
    if any(not _balanced(len(c), g.n) for c in comps):
        return None
    packed = _pack_components(comps, g.n)
    if packed is None:
        return None
    side1, side2 = sorted(packed[0]), sorted(packed[1])
    if side2 and (not side1 or side2[0] < side1[0]):
        side1, side2 = side2, side1
    return tuple(side1), tuple(side2)


def is_valid_separator(g: Graph, s: Iterable[int]) -> bool:
    return split_separator(g, s) is not None


def make_separator(g: Graph, s: Iterable[int]) -> SeparatorResult:
    """SeparatorResult for a candidate set, or ValueError if it is invalid."""
    s_sorted = tuple(sorted(set(s)))
    sides = split_separator(g, s_sorted)
    if sides is None:
        raise ValueError(f"{s_sorted} is not a valid separator")
    return SeparatorResult(s_sorted, sides[0], sides[1])


def trivial_separator(g: Graph) -> SeparatorResult:
    """The always-valid prefix separator on ceil(n/3) vertices."""
    k = -(-g.n // 3)
    return make_separator(g, range(k))


def exact_min_separator(g: Graph) -> SeparatorResult:
    """Minimum-cardinality separator by enumeration (n <= 20 enforced).

    Candidate sets are tried in increasing size and lexicographic order, so
    ties resolve to the lexicographically smallest vertex set.
    """
    if g.n > EXACT_SEPARATOR_MAX_N:
        raise ValueError(f"exact search is capped at n = {EXACT_SEPARATOR_MAX_N}, got {g.n}")
    for k in range(g.n + 1):
        for cand in combinations(range(g.n), k):
            sides = split_separator(g, cand)
            if sides is not None:
                return SeparatorResult(cand, sides[0], sides[1])
    raise AssertionError("unreachable: the trivial separator is always valid")


def bfs_separator(g: Graph) -> SeparatorResult:
    """Separator from the breadth-first level structure.

    Runs BFS from the maximum-degree vertex (smallest index on ties). Every
    level is a separator candidate — removing it disconnects earlier levels
    from later ones — and the smallest valid level wins (ties to the earliest
    level). The result is the smaller of that level and the trivial
    separator, so the output is always valid.
    """
    if g.n < 1:
        raise ValueError("need n >= 1")
    best: tuple[int, ...] | None = None
    for layer in bfs_layers(g, max_degree_vertex(g)):
        if best is not None and len(layer) >= len(best):
            continue
        if is_valid_separator(g, layer):
            best = tuple(layer)
    fallback = trivial_separator(g)
    if best is not None and len(best) <= fallback.size:
        return make_separator(g, best)
    return fallback


def _fiedler_order(g: Graph, comp: list[int]) -> list[int]:
    """Component vertices sorted by the second-smallest Laplacian eigenvector.

    Lanczos iteration with full reorthogonalization on the component's dense
    Laplacian, with the all-ones direction deflated; deterministic start
    vector; stops when the Lanczos residual estimate drops below 1e-8 or the
    matvec budget 10*n^2 runs out, whichever first (using the best iterate
    seen either way — separator validity never depends on eigen-quality).
    """
    nc = len(comp)
    index = {v: i for i, v in enumerate(comp)}
    lap = np.zeros((nc, nc))
    for v in comp:
        lap[index[v], index[v]] = g.degree(v)
        for w in g.neighbors(v):
            lap[index[v], index[w]] = -1.0

    ones = np.full(nc, 1.0 / math.sqrt(nc))
    v0 = np.arange(nc, dtype=float)
    v0 -= ones * (ones @ v0)
    v0 /= np.linalg.norm(v0)

    basis = [v0]
    alphas: list[float] = []
    betas: list[float] = []
    budget = 10 * g.n * g.n
    tol = 1e-8
    best_vec = v0
    best_residual = math.inf

    for k in range(min(nc - 1, budget)):
        w = lap @ basis[-1]
        alpha = float(basis[-1] @ w)
        alphas.append(alpha)
        w -= alpha * basis[-1]
        if k > 0:
            w -= betas[-1] * basis[-2]
        # full reorthogonalization keeps the recurrence honest at this scale
        w -= ones * (ones @ w)
        for u in basis:
            w -= u * (u @ w)
        beta = float(np.linalg.norm(w))

        tri = np.diag(alphas)
        if betas:
            off = np.array(betas)
            tri += np.diag(off, 1) + np.diag(off, -1)
        evals, evecs = np.linalg.eigh(tri)
        y = evecs[:, 0]  # smallest Ritz pair approximates the Fiedler pair
        residual = abs(beta * y[-1])
        if residual < best_residual:
            best_residual = residual
            best_vec = np.column_stack(basis) @ y
        if residual <= tol or beta <= 1e-12:
            break
        betas.append(beta)
        basis.append(w / beta)

    values = best_vec
    return [v for _, v in sorted(zip((float(values[index[v]]) for v in comp), comp))]


def spectral_separator(g: Graph) -> SeparatorResult:
    """Separator from a spectral ordering of the largest component.

    Sorts that component by Fiedler-vector value, scans all prefix cuts with
    both sides in [n/3, 2n/3] of the component, keeps the cut with fewest
    crossing edges, and converts it to a vertex set by taking each cut edge's
    endpoint on the smaller side. The set is then shrunk greedily (repeatedly
    dropping the smallest vertex whose removal keeps it valid). Fallback
    chain when the cut-derived set is invalid: bfs_separator, whose own
    fallback is the trivial separator.
    """
    if g.n < 3:
        raise ValueError(f"need n >= 3, got {g.n}")
    comps = connected_components(g)
    largest = max(comps, key=len)

    candidate: list[int] = []
    if len(largest) >= 3:
        order = _fiedler_order(g, largest)
        position = {v: i for i, v in enumerate(order)}
        nc = len(order)
        lo = -(-nc // 3)
        hi = (2 * nc) // 3
        # cut_at[p] = edges crossing between order[:p] and order[p:]
        diff = [0] * (nc + 1)
        for v in largest:
            for w in g.neighbors(v):
                if v < w:
                    pv, pw = position[v], position[w]
                    if pv > pw:
                        pv, pw = pw, pv
                    diff[pv + 1] += 1
                    diff[pw + 1] -= 1
        best_p = -1
        best_cut = math.inf
        running = 0
        for p in range(1, nc + 1):
            running += diff[p]
            if lo <= p <= hi and running < best_cut:
                best_cut = running
                best_p = p
        if best_p >= 0:
            prefix = set(order[:best_p])
            small_side = prefix if best_p <= nc - best_p else set(order[best_p:])
            chosen = set()
            for v in largest:
                for w in g.neighbors(v):
                    if v < w and (v in prefix) != (w in prefix):
                        chosen.add(v if v in small_side else w)
            candidate = sorted(chosen)

    if split_separator(g, candidate) is None:
        return bfs_separator(g)

    # greedy shrink: drop the smallest droppable vertex until none is
    current = list(candidate)
    while True:
        for v in current:
            trial = [w for w in current if w != v]
            if is_valid_separator(g, trial):
                current = trial
                break
        else:
            break
    return make_separator(g, current)
