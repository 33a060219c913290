"""Deterministic and seeded constructions of curve families and drawings.

Every generator is a pure function of its parameters (plus seed); the same
inputs always produce bit-identical output. Randomness comes from SplitMix64,
specified below bit-for-bit so other implementations can reproduce fixtures.
"""

from __future__ import annotations

import math

from .geometry import COORDINATE_LIMIT, Point, Polyline, open_edges_intersect, orient
from .graphs import CurveFamily, Drawing

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The SplitMix64 generator, fixed as the package's portable RNG.

    All arithmetic is modulo 2^64. One step:

        state = (state + 0x9E3779B97F4A7C15) mod 2^64
        z = state
        z = ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
        z = ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
        output z XOR (z >> 31)

    below(k) reduces an output by plain modulo (`next_u64() % k`); shuffle is
    a Fisher-Yates walk from the last index down, swapping index i with
    j = below(i + 1). These reductions are part of the documented contract.
    """

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError(f"need a positive bound, got {k}")
        return self.next_u64() % k

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _segment(x1: int, y1: int, x2: int, y2: int) -> Polyline:
    return Polyline((Point(x1, y1), Point(x2, y2)))


def disjoint_segments(n: int) -> CurveFamily:
    """n horizontal segments at distinct heights; the string graph is empty."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return CurveFamily(tuple(_segment(0, 3 * i, 10, 3 * i) for i in range(n)))


def pairwise_crossing_star(n: int) -> CurveFamily:
    """n segments that pairwise cross at distinct points; string graph K_n.

    Segment i lies on the line y = i*x + i^2 (i = 1..n) restricted to
    x in [-(2n+2), 2]. Lines i and j meet at x = -(i+j), which identifies
    the pair {i, j}, so all crossing points are distinct, no three segments
    share a point, and every crossing is interior to both segments.
    """
    if not 2 <= n <= 360:
        raise ValueError(f"need 2 <= n <= 360, got {n}")
    left = -(2 * n + 2)
    curves = []
    for i in range(1, n + 1):
        curves.append(_segment(left, i * left + i * i, 2, 2 * i + i * i))
    return CurveFamily(tuple(curves))


def interval_path(n: int) -> CurveFamily:
    """Flat segments [2i, 2i+3] on the x-axis; the string graph is the path P_n."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return CurveFamily(tuple(_segment(2 * i, 0, 2 * i + 3, 0) for i in range(n)))


def grid_biclique(r: int, c: int) -> CurveFamily:
    """r horizontal and c vertical segments, all crossing; string graph K_{r,c}.

    Horizontals come first (vertices 0..r-1), then verticals.
    """
    if r < 1 or c < 1:
        raise ValueError(f"need r, c >= 1, got r={r}, c={c}")
    curves = [_segment(0, 2 * i + 1, 2 * c, 2 * i + 1) for i in range(r)]
    curves += [_segment(2 * j + 1, 0, 2 * j + 1, 2 * r) for j in range(c)]
    return CurveFamily(tuple(curves))


def random_segments(n: int, span: int, seed: int) -> CurveFamily:
    """n seeded random segments with integer endpoints.

    Per curve, in this exact RNG call order: x1 = below(span+1),
    y1 = below(span+1), then dx = below(2w+1) - w and dy = below(2w+1) - w
    with w = max(4, span // 8), redrawing the (dx, dy) pair while it is
    (0, 0). The segment runs from (x1, y1) to (x1+dx, y1+dy). The span floor
    4n keeps families from collapsing into a blob of mutual intersections.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if span < 4 * n:
        raise ValueError(f"need span >= 4n = {4 * n}, got {span}")
    if span > COORDINATE_LIMIT // 2:
        raise ValueError(f"span {span} too large for the coordinate limit")
    rng = SplitMix64(seed)
    w = max(4, span // 8)
    curves = []
    for _ in range(n):
        x1 = rng.below(span + 1)
        y1 = rng.below(span + 1)
        while True:
            dx = rng.below(2 * w + 1) - w
            dy = rng.below(2 * w + 1) - w
            if (dx, dy) != (0, 0):
                break
        curves.append(_segment(x1, y1, x1 + dx, y1 + dy))
    return CurveFamily(tuple(curves))


def _convex_points(n: int) -> tuple[Point, ...]:
    radius = 4 * n * n
    for _ in range(40):
        points = tuple(
            Point(
                round(radius * math.cos(2 * math.pi * i / n)),
                round(radius * math.sin(2 * math.pi * i / n)),
            )
            for i in range(n)
        )
        # strict convex position: every consecutive triple turns left
        if len(set(points)) == n and all(
            orient(points[i], points[(i + 1) % n], points[(i + 2) % n]) == 1
            for i in range(n)
        ):
            return points
        radius *= 2
    raise AssertionError("unreachable: rounding noise cannot survive doubling")


def convex_drawing(n: int) -> Drawing:
    """Complete graph drawn with straight edges on n convex-position points.

    Points sit on a rounded circle; the radius doubles until strict convex
    position is verified exactly (which also rules out any 3 collinear
    points, so no edge can pass through a foreign vertex).
    """
    if not 3 <= n <= 64:
        raise ValueError(f"need 3 <= n <= 64, got {n}")
    points = _convex_points(n)
    edges = tuple(
        (u, v, Polyline((points[u], points[v])))
        for u in range(n)
        for v in range(u + 1, n)
    )
    return Drawing(points, edges)


def _general_position_points(n: int, rng: SplitMix64) -> tuple[Point, ...]:
    # span scales with n^2 so collinear triples stay rare; 1000 tries per
    # point before giving up
    span = max(64, 16 * n * n)
    points: list[Point] = []
    for _ in range(n):
        for _attempt in range(1000):
            p = Point(rng.below(span + 1), rng.below(span + 1))
            if p in points:
                continue
            if any(
                orient(points[i], points[j], p) == 0
                for i in range(len(points))
                for j in range(i + 1, len(points))
            ):
                continue
            points.append(p)
            break
        else:
            raise RuntimeError("could not reach general position in 1000 attempts")
    return tuple(points)


def random_drawing(n: int, m: int, seed: int) -> Drawing:
    """n seeded random points in general position, m random straight edges.

    The point set is drawn first (rejection-sampled until no three points
    are collinear, exactly verified); then all n(n-1)/2 vertex pairs are
    Fisher-Yates shuffled and the first m become edges. The edge list is
    stored sorted.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 0 <= m <= n * (n - 1) // 2:
        raise ValueError(f"need 0 <= m <= n(n-1)/2, got m={m}")
    rng = SplitMix64(seed)
    points = _general_position_points(n, rng)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    selected = sorted(pairs[:m])
    edges = tuple((u, v, Polyline((points[u], points[v]))) for u, v in selected)
    return Drawing(points, edges)


def random_plane_drawing(n: int, m: int, seed: int) -> Drawing:
    """A seeded crossing-free straight-line drawing with at most m edges.

    Same point model as random_drawing; candidate edges are visited in
    Fisher-Yates order and accepted greedily while they cross no previously
    accepted edge, stopping at m accepted. The drawing may end up with fewer
    than m edges when the shuffled prefix saturates first.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    rng = SplitMix64(seed)
    points = _general_position_points(n, rng)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    accepted: list[tuple[int, int]] = []
    for u, v in pairs:
        if len(accepted) >= m:
            break
        curve = Polyline((points[u], points[v]))
        ok = True
        for au, av, acurve in (
            (a, b, Polyline((points[a], points[b]))) for a, b in accepted
        ):
            shared = frozenset(points[w] for w in {u, v} & {au, av})
            if open_edges_intersect(curve, acurve, shared):
                ok = False
                break
        if ok:
            accepted.append((u, v))
    edges = tuple((u, v, Polyline((points[u], points[v]))) for u, v in sorted(accepted))
    return Drawing(points, edges)
