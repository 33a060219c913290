"""Independent reference implementations used to check the package.

Everything here favors obvious correctness over speed: exact rational
arithmetic (fractions.Fraction) for geometry, tiny-case exhaustive search
for graph quantities. None of it shares code with the package under test.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from stringgraphs.geometry import Point, Segment


def _cross(ax: int, ay: int, bx: int, by: int) -> int:
    return ax * by - ay * bx


def _closed_params(s1: Segment, s2: Segment):
    """Solve a1 + t*d1 = a2 + u*d2 over the rationals.

    Returns ("point", t, u) for non-parallel lines, ("collinear", t_lo, t_hi)
    with the parameter window of s2 on s1's line, or ("parallel",) for
    parallel non-collinear lines.
    """
    a1, b1, a2, b2 = s1.a, s1.b, s2.a, s2.b
    d1 = (b1.x - a1.x, b1.y - a1.y)
    d2 = (b2.x - a2.x, b2.y - a2.y)
    w = (a2.x - a1.x, a2.y - a1.y)
    denom = _cross(*d1, *d2)
    if denom != 0:
        t = Fraction(_cross(*w, *d2), denom)
        u = Fraction(_cross(*w, *d1), denom)
        return ("point", t, u)
    if _cross(*w, *d1) != 0:
        return ("parallel",)
    dot11 = d1[0] * d1[0] + d1[1] * d1[1]
    ta = Fraction(w[0] * d1[0] + w[1] * d1[1], dot11)
    tb = Fraction((b2.x - a1.x) * d1[0] + (b2.y - a1.y) * d1[1], dot11)
    return ("collinear", min(ta, tb), max(ta, tb))


def segments_intersect_rational(s1: Segment, s2: Segment) -> bool:
    """Closed-segment intersection decided with exact rational arithmetic."""
    kind, *rest = _closed_params(s1, s2)
    if kind == "parallel":
        return False
    if kind == "point":
        t, u = rest
        return 0 <= t <= 1 and 0 <= u <= 1
    lo, hi = rest
    return max(lo, Fraction(0)) <= min(hi, Fraction(1))


def _point_at(s: Segment, t: Fraction) -> tuple[Fraction, Fraction]:
    return (
        Fraction(s.a.x) + t * (s.b.x - s.a.x),
        Fraction(s.a.y) + t * (s.b.y - s.a.y),
    )


def open_segments_intersect_rational(
    s1: Segment, s2: Segment, shared: frozenset[Point]
) -> bool:
    """Intersection of two straight edges ignoring listed shared endpoints."""
    kind, *rest = _closed_params(s1, s2)
    if kind == "parallel":
        return False
    if kind == "point":
        t, u = rest
        if not (0 <= t <= 1 and 0 <= u <= 1):
            return False
        px, py = _point_at(s1, t)
        return not any(px == p.x and py == p.y for p in shared)
    lo, hi = rest
    lo, hi = max(lo, Fraction(0)), min(hi, Fraction(1))
    if lo > hi:
        return False
    if lo < hi:
        return True  # a whole sub-segment in common; no finite set excuses it
    px, py = _point_at(s1, lo)
    return not any(px == p.x and py == p.y for p in shared)


def drawing_crossing_pairs(drawing) -> set[tuple[int, int]]:
    """All crossing edge-index pairs of a straight-line drawing (rationally)."""
    segs = []
    for u, v, curve in drawing.edges:
        if len(curve.points) != 2:
            raise ValueError("oracle only handles straight-line drawings")
        segs.append((u, v, Segment(curve.points[0], curve.points[1])))
    out = set()
    for i, j in combinations(range(len(segs)), 2):
        ui, vi, si = segs[i]
        uj, vj, sj = segs[j]
        shared = frozenset(
            drawing.points[w] for w in {ui, vi} & {uj, vj}
        )
        if open_segments_intersect_rational(si, sj, shared):
            out.add((i, j))
    return out


# --- exhaustive graph oracles -------------------------------------------------


def brute_max_independent_set_size(g) -> int:
    """Subset-DP maximum independent set (safe for n <= 20)."""
    neighbor_masks = [0] * g.n
    for u, v in g.edges:
        neighbor_masks[u] |= 1 << v
        neighbor_masks[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        without = best(mask & ~(1 << v))
        with_v = 1 + best(mask & ~(1 << v) & ~neighbor_masks[v])
        return max(without, with_v)

    result = best((1 << g.n) - 1)
    best.cache_clear()
    return result


def brute_chromatic_number(g) -> int:
    """Backtracking chromatic number (safe for n <= 12)."""
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    colors = [-1] * g.n

    def feasible(k: int) -> bool:
        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            banned = {colors[u] for u in g.neighbors(v) if colors[u] >= 0}
            for c in range(min(used + 1, k)):
                if c in banned:
                    continue
                colors[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
            return False

        for v in range(g.n):
            colors[v] = -1
        return place(0, 0)

    for k in range(1, g.n + 1):
        if feasible(k):
            return k
    raise AssertionError("unreachable")


def brute_min_balanced_separator_size(g) -> int:
    """Smallest separator over all subsets and partitions (safe for n <= 12)."""
    vertices = list(range(g.n))
    for k in range(g.n + 1):
        for s in combinations(vertices, k):
            rest = [v for v in vertices if v not in s]
            comps = _components_among(g, rest)
            if _packable(comps, g.n):
                return k
    raise AssertionError("unreachable")


def _components_among(g, rest: list[int]) -> list[int]:
    rest_set = set(rest)
    seen: set[int] = set()
    sizes = []
    for v in rest:
        if v in seen:
            continue
        stack, size = [v], 0
        seen.add(v)
        while stack:
            u = stack.pop()
            size += 1
            for w in g.neighbors(u):
                if w in rest_set and w not in seen:
                    seen.add(w)
                    stack.append(w)
        sizes.append(size)
    return sizes


def _packable(comp_sizes: list[int], n: int) -> bool:
    total = sum(comp_sizes)
    for r in range(len(comp_sizes) + 1):
        for chosen in combinations(comp_sizes, r):
            side = sum(chosen)
            if 3 * side <= 2 * n and 3 * (total - side) <= 2 * n:
                return True
    return False


def brute_max_balanced_biclique_side(g) -> int:
    """Largest s with disjoint A, B (|A| = |B| = s) fully joined (n <= 12)."""
    vertices = list(range(g.n))
    for s in range(g.n // 2, 0, -1):
        for a in combinations(vertices, s):
            common: set[int] | None = None
            for v in a:
                nb = set(g.neighbors(v))
                common = nb if common is None else common & nb
                if len(common) < s:
                    break
            if common is None:
                continue
            if len(common - set(a)) >= s:
                return s
    return 0
