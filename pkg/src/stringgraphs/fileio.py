"""Readers and writers for the plain-text exchange formats.

All formats are line-oriented ASCII. Full lines starting with '#' are
comments; blank lines are ignored. Writers are deterministic (stable order,
'\\n' newlines, trailing newline).

curve family   one curve per line:  `id: x1,y1 x2,y2 ...`, ids dense 0..n-1
graph          header `n m`, then m lines `u v` with 0 <= u < v < n
drawing        `[points]` section of `id: x,y` lines, then an `[edges]`
               section of `u v: x1,y1 x2,y2 ...` polyline lines whose first
               and last points equal the endpoints' coordinates
separator      three lines: `S:`, `V1:`, `V2:`, each followed by
               space-separated vertex indices
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import InputError
from .geometry import Point, Polyline
from .graphs import CurveFamily, Drawing, Graph


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def _parse_point(token: str, lineno: int) -> Point:
    try:
        xs, ys = token.split(",")
        return Point(int(xs), int(ys))
    except ValueError:
        raise InputError(f"line {lineno}: bad point {token!r} (want x,y)") from None


def _parse_point_row(body: str, lineno: int) -> Polyline:
    points = tuple(_parse_point(tok, lineno) for tok in body.split())
    try:
        return Polyline(points)
    except ValueError as exc:
        raise InputError(f"line {lineno}: {exc}") from None


def _split_id_line(line: str, lineno: int) -> tuple[str, str]:
    head, sep, body = line.partition(":")
    if not sep:
        raise InputError(f"line {lineno}: expected `id: ...`, got {line!r}")
    return head.strip(), body.strip()


# --- curve families ---------------------------------------------------------


def parse_curve_family(text: str) -> CurveFamily:
    rows: dict[int, Polyline] = {}
    for lineno, line in _content_lines(text):
        head, body = _split_id_line(line, lineno)
        try:
            idx = int(head)
        except ValueError:
            raise InputError(f"line {lineno}: bad curve id {head!r}") from None
        if idx in rows:
            raise InputError(f"line {lineno}: duplicate curve id {idx}")
        rows[idx] = _parse_point_row(body, lineno)
    if not rows:
        raise InputError("no curves in file")
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise InputError(f"curve ids must be dense 0..{n - 1}, got {sorted(rows)}")
    return CurveFamily(tuple(rows[i] for i in range(n)))


def format_curve_family(family: CurveFamily) -> str:
    lines = []
    for i, curve in enumerate(family.curves):
        pts = " ".join(f"{p.x},{p.y}" for p in curve.points)
        lines.append(f"{i}: {pts}")
    return "\n".join(lines) + "\n"


# --- graphs -----------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise InputError(f"line {lineno}: header must be `n m`, got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"line {lineno}: header must be `n m`, got {header!r}") from None
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected `u v`, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {lineno}: expected `u v`, got {line!r}") from None
        if not u < v:
            raise InputError(f"line {lineno}: edges must have u < v, got {u} {v}")
        edges.append((u, v))
    if len(edges) != m:
        raise InputError(f"header promises {m} edges, file has {len(edges)}")
    if len(set(edges)) != len(edges):
        raise InputError("duplicate edge in file")
    try:
        return Graph(n, frozenset(edges))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# --- drawings ---------------------------------------------------------------


def parse_drawing(text: str) -> Drawing:
    section = None
    points: dict[int, Point] = {}
    edges: list[tuple[int, int, Polyline]] = []
    for lineno, line in _content_lines(text):
        if line == "[points]":
            section = "points"
            continue
        if line == "[edges]":
            section = "edges"
            continue
        if section == "points":
            head, body = _split_id_line(line, lineno)
            try:
                idx = int(head)
            except ValueError:
                raise InputError(f"line {lineno}: bad point id {head!r}") from None
            if idx in points:
                raise InputError(f"line {lineno}: duplicate point id {idx}")
            points[idx] = _parse_point(body, lineno)
        elif section == "edges":
            head, body = _split_id_line(line, lineno)
            parts = head.split()
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected `u v: ...`, got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: expected `u v: ...`") from None
            edges.append((u, v, _parse_point_row(body, lineno)))
        else:
            raise InputError(f"line {lineno}: content before [points] section")
    n = len(points)
    if n == 0:
        raise InputError("drawing has no points")
    if sorted(points) != list(range(n)):
        raise InputError(f"point ids must be dense 0..{n - 1}")
    try:
        return Drawing(tuple(points[i] for i in range(n)), tuple(edges))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def format_drawing(drawing: Drawing) -> str:
    lines = ["[points]"]
    lines.extend(f"{i}: {p.x},{p.y}" for i, p in enumerate(drawing.points))
    lines.append("[edges]")
    for u, v, curve in drawing.edges:
        pts = " ".join(f"{p.x},{p.y}" for p in curve.points)
        lines.append(f"{u} {v}: {pts}")
    return "\n".join(lines) + "\n"


def looks_like_drawing(text: str) -> bool:
    """Cheap format sniff used by CLI commands that accept either format."""
    for _, line in _content_lines(text):
        return line == "[points]"
    return False


# --- vertex-set result files ------------------------------------------------


def _format_index_line(label: str, indices: Iterable[int]) -> str:
    idx = list(indices)
    return f"{label}:" + ("" if not idx else " " + " ".join(str(i) for i in idx))


def _parse_labeled_lines(text: str, labels: tuple[str, ...]) -> list[tuple[int, ...]]:
    lines = _content_lines(text)
    if len(lines) != len(labels):
        raise InputError(f"expected lines {labels}, got {len(lines)} content lines")
    out = []
    for (lineno, line), label in zip(lines, labels):
        head, sep, body = line.partition(":")
        if not sep or head.strip() != label:
            raise InputError(f"line {lineno}: expected `{label}: ...`, got {line!r}")
        try:
            out.append(tuple(int(tok) for tok in body.split()))
        except ValueError:
            raise InputError(f"line {lineno}: non-integer index") from None
    return out


def format_separator(s: Iterable[int], v1: Iterable[int], v2: Iterable[int]) -> str:
    return (
        _format_index_line("S", s)
        + "\n"
        + _format_index_line("V1", v1)
        + "\n"
        + _format_index_line("V2", v2)
        + "\n"
    )


def parse_separator(text: str) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    s, v1, v2 = _parse_labeled_lines(text, ("S", "V1", "V2"))
    return s, v1, v2


def format_vertex_sets(pairs: list[tuple[str, Iterable[int]]]) -> str:
    return "\n".join(_format_index_line(label, idx) for label, idx in pairs) + "\n"


def parse_vertex_sets(text: str, labels: tuple[str, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(_parse_labeled_lines(text, labels))


# --- colorings ----------------------------------------------------------------


def format_coloring(colors: Iterable[int]) -> str:
    """Header `n k`, then one `v c` line per vertex in vertex order."""
    cols = list(colors)
    k = len(set(cols))
    lines = [f"{len(cols)} {k}"]
    lines.extend(f"{v} {c}" for v, c in enumerate(cols))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> tuple[int, ...]:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty coloring file")
    lineno, header = lines[0]
    parts = header.split()
    try:
        n, k = int(parts[0]), int(parts[1])
        if len(parts) != 2:
            raise ValueError
    except (ValueError, IndexError):
        raise InputError(f"line {lineno}: header must be `n k`, got {header!r}") from None
    colors: dict[int, int] = {}
    for lineno, line in lines[1:]:
        parts = line.split()
        try:
            v, c = int(parts[0]), int(parts[1])
            if len(parts) != 2:
                raise ValueError
        except (ValueError, IndexError):
            raise InputError(f"line {lineno}: expected `v c`, got {line!r}") from None
        if v in colors:
            raise InputError(f"line {lineno}: duplicate vertex {v}")
        colors[v] = c
    if sorted(colors) != list(range(n)):
        raise InputError(f"coloring must cover vertices 0..{n - 1}")
    if len(set(colors.values())) != k:
        raise InputError(f"header promises {k} colors, file uses {len(set(colors.values()))}")
    return tuple(colors[v] for v in range(n))


# --- path helpers -----------------------------------------------------------


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)
