"""Shared fixtures and the acceptance-criteria summary.

Acceptance tests call `record(number, passed, detail)`; a terminal-summary
hook prints one `ACCEPTANCE NN <name>: PASS|FAIL` line per criterion at the
end of the run, so the lines appear in plain `pytest -v` output.
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable

from stringgraphs import CurveFamily, Graph, Polyline, build_string_graph

CRITERIA = {
    1: "exact intersection predicates agree with the rational oracle",
    2: "generators produce their documented graphs",
    3: "all separator algorithms return valid balanced separators",
    4: "heuristic separators are never smaller than the exact optimum",
    5: "colorings are proper and match brute-force chromatic numbers on small graphs",
    6: "independent sets are independent and match brute-force optima on small graphs",
    7: "bicliques are complete and the exact search matches known values",
    8: "edge-bound certificates pass their internal checks with pinned q values",
    9: "crossing-free drawings respect the planar edge bound",
    10: "crossing counts match the rational oracle and convex-position formula",
    11: "crossing pair sets are verified pairwise-crossing families",
    12: "clique-or-independent meets its size targets on random instances",
    13: "CLI runs are deterministic byte-for-byte",
}

_RESULTS: dict[int, tuple[bool, str]] = {}


def record(number: int, passed: bool, detail: str = "") -> None:
    assert number in CRITERIA
    _RESULTS[number] = (passed, detail)


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        name = CRITERIA[number]
        if number in _RESULTS:
            passed, detail = _RESULTS[number]
            status = "PASS" if passed else "FAIL"
        else:
            status, detail = "NOT RUN", ""
        line = f"ACCEPTANCE {number:02d} {name}: {status}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)


# --- frozen fixtures ----------------------------------------------------------

# Extended sides of a regular pentagon (radius 100): each curve crosses
# exactly its two neighbors, so the string graph is the 5-cycle.
C5_CURVES = (
    ((28, 121), (-124, 10)),
    ((-106, 65), (-48, -115)),
    ((-94, -81), (94, -81)),
    ((48, -115), (106, 65)),
    ((124, 10), (-28, 121)),
)


@pytest.fixture(scope="session")
def c5_family() -> CurveFamily:
    return CurveFamily(tuple(Polyline.from_pairs(pair) for pair in C5_CURVES))


@pytest.fixture(scope="session")
def c5_graph(c5_family) -> Graph:
    return build_string_graph(c5_family)


@pytest.fixture(scope="session")
def path9() -> Graph:
    return Graph.from_edges(9, [(i, i + 1) for i in range(8)])


@pytest.fixture(scope="session")
def k6() -> Graph:
    return Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6)])


@pytest.fixture(scope="session")
def c9() -> Graph:
    return Graph.from_edges(9, [(i, (i + 1) % 9) for i in range(9)])


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Deterministic Erdos-Renyi-style G(n, m) built on the package RNG."""
    from stringgraphs import SplitMix64

    rng = SplitMix64(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    return Graph.from_edges(n, pairs[:m])
