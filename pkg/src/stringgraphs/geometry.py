"""Exact predicates over integer points, segments, and polyline curves.

Everything in this module is pure integer arithmetic: no floating point,
no rounding, no tolerance knobs. Coordinates are capped at |x|, |y| <= 2**30
so that orientation determinants stay exact in any 64-bit signed integer
implementation, not just in Python's arbitrary-precision ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

COORDINATE_LIMIT = 2**30


class Point(NamedTuple):
    x: int
    y: int


def _check_coordinate(value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"coordinates must be plain integers, got {value!r}")
    if abs(value) > COORDINATE_LIMIT:
        raise ValueError(f"|{value}| exceeds the coordinate limit 2**30")


def check_point(p: Point) -> Point:
    _check_coordinate(p.x)
    _check_coordinate(p.y)
    return p


@dataclass(frozen=True)
class Segment:
    """Closed segment with distinct integer endpoints."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        check_point(self.a)
        check_point(self.b)
        if self.a == self.b:
            raise ValueError(f"degenerate segment at {self.a}")


@dataclass(frozen=True)
class Polyline:
    """A curve given as a chain of integer points.

    At least two vertices; consecutive vertices must differ. Collinear
    consecutive segments are allowed.
    """

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(self.points) < 2:
            raise ValueError("polyline needs at least 2 vertices")
        for p in self.points:
            check_point(p)
        for p, q in zip(self.points, self.points[1:]):
            if p == q:
                raise ValueError(f"repeated consecutive vertex {p}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Polyline":
        return cls(tuple(Point(int(x), int(y)) for x, y in pairs))

    def segments(self) -> Iterator[Segment]:
        for p, q in zip(self.points, self.points[1:]):
            yield Segment(p, q)

    @property
    def first(self) -> Point:
        return self.points[0]

    @property
    def last(self) -> Point:
        return self.points[-1]

    def translated(self, dx: int, dy: int) -> "Polyline":
        return Polyline(tuple(Point(p.x + dx, p.y + dy) for p in self.points))

    def bounding_box(self) -> tuple[int, int, int, int]:
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p).

    +1 for a counterclockwise turn, -1 for clockwise, 0 for collinear.
    """
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if cross > 0:
        return 1
    if cross < 0:
        return -1
    return 0


def on_segment(s: Segment, p: Point) -> bool:
    """Closed containment: p lies on s, endpoints included."""
    if orient(s.a, s.b, p) != 0:
        return False
    return (
        min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
        and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y)
    )


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """Do the closed segments share at least one point?

    Decided purely from orientation signs and bounding-box tests, so the
    answer is exact for collinear overlaps and endpoint touching.
    """
    d1 = orient(s2.a, s2.b, s1.a)
    d2 = orient(s2.a, s2.b, s1.b)
    d3 = orient(s1.a, s1.b, s2.a)
    d4 = orient(s1.a, s1.b, s2.b)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and on_segment(s2, s1.a):
        return True
    if d2 == 0 and on_segment(s2, s1.b):
        return True
    if d3 == 0 and on_segment(s1, s2.a):
        return True
    if d4 == 0 and on_segment(s1, s2.b):
        return True
    return False


def _collinear_overlap_is_positive(s1: Segment, s2: Segment) -> bool:
    """True iff s1 and s2 lie on one line and share more than a point."""
    if orient(s1.a, s1.b, s2.a) != 0 or orient(s1.a, s1.b, s2.b) != 0:
        return False
    # Project onto the dominant axis of s1; both segments live on its line.
    if s1.a.x != s1.b.x:
        lo1, hi1 = sorted((s1.a.x, s1.b.x))
        lo2, hi2 = sorted((s2.a.x, s2.b.x))
    else:
        lo1, hi1 = sorted((s1.a.y, s1.b.y))
        lo2, hi2 = sorted((s2.a.y, s2.b.y))
    return min(hi1, hi2) > max(lo1, lo2)


def _segments_meet_outside(s1: Segment, s2: Segment, excluded: frozenset[Point]) -> bool:
    """Do s1 and s2 share a point that is not one of `excluded`?

    When the intersection is a single point, that point equals an excluded
    point iff the excluded point lies on both segments, so no intersection
    coordinates ever need to be computed.
    """
    if not segments_intersect(s1, s2):
        return False
    if _collinear_overlap_is_positive(s1, s2):
        return True  # infinitely many shared points, excluded set is finite
    return not any(on_segment(s1, e) and on_segment(s2, e) for e in excluded)


def polylines_intersect(c1: Polyline, c2: Polyline) -> bool:
    """Closed-curve intersection: any segment of c1 meets any segment of c2."""
    segs2 = list(c2.segments())
    for s1 in c1.segments():
        for s2 in segs2:
            if segments_intersect(s1, s2):
                return True
    return False


def open_edges_intersect(
    c1: Polyline, c2: Polyline, shared_endpoints: Iterable[Point] = ()
) -> bool:
    """Do c1 and c2 share a point other than a listed shared endpoint?

    `shared_endpoints` must be a subset of the first/last vertices of c1
    and c2. An intersection exactly at a listed point is ignored; any other
    contact, including interior touching and collinear overlap, counts.
    """
    excluded = frozenset(shared_endpoints)
    ends = {c1.first, c1.last, c2.first, c2.last}
    bad = excluded - ends
    if bad:
        raise ValueError(f"shared endpoints {sorted(bad)} are not curve endpoints")
    segs2 = list(c2.segments())
    for s1 in c1.segments():
        for s2 in segs2:
            if _segments_meet_outside(s1, s2, excluded):
                return True
    return False


def boxes_separated(
    box1: tuple[int, int, int, int], box2: tuple[int, int, int, int]
) -> bool:
    """Strictly disjoint bounding boxes (touching boxes are not separated)."""
    return (
        box1[2] < box2[0]
        or box2[2] < box1[0]
        or box1[3] < box2[1]
        or box2[3] < box1[1]
    )
