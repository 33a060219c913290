"""Experiment orchestration: JSON configs in, deterministic CSV reports out.

A config names generator grids and analyses:

    {
      "params":    {"d": 1.0, "b": 1.0, "C": null, "base_case_n": 18},
      "instances": [{"kind": "random-seg", "n": [30, 50], "seed": [1, 2, 3]}],
      "analyses":  [{"op": "separate", "algo": "spectral"},
                    {"op": "color", "t": 3}]
    }

Any instance parameter may be a scalar or a list; lists expand as a grid.
Report rows are ordered by (kind, parameters, seed) and cells are formatted
deterministically, so rerunning a config byte-reproduces the file. A cell is
"skip" when its analysis was requested but a precondition fails (exact-search
caps, degenerate sizes); empty when the column belongs to an analysis that
was not requested. Every certificate (separator, coloring, independent set,
biclique, crossing pair) is re-verified while the row is built; a failure is
an InvariantError, never a silent number.

The adjacent metadata file (<out>.meta.json) stores the config, the column
schema, and the package version.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from itertools import product
from typing import Any, Callable

from . import __version__
from .bounds import (
    ParamSet,
    biclique_target_size,
    chromatic_bound,
    independence_target,
    separator_size_bound,
)
from .crossings import crossing_count, crossing_pair_sets, quasi_planarity
from .decomposition import (
    EXACT_BICLIQUE_MAX_N,
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
    convex_drawing,
    disjoint_segments,
    grid_biclique,
    interval_path,
    pairwise_crossing_star,
    random_drawing,
    random_plane_drawing,
    random_segments,
)
from .graphs import (
    Drawing,
    Graph,
    build_edge_crossing_graph,
    build_string_graph,
    is_independent_set,
    is_kt_free,
)
from .separators import (
    EXACT_SEPARATOR_MAX_N,
    bfs_separator,
    exact_min_separator,
    is_valid_separator,
    spectral_separator,
)

GRAPH_KINDS = ("disjoint", "star", "path", "grid", "random-seg")
DRAWING_KINDS = ("convex", "random-draw", "random-plane")

_KIND_KEYS = {
    "disjoint": ("n",),
    "star": ("n",),
    "path": ("n",),
    "grid": ("r", "c"),
    "random-seg": ("n", "span", "seed"),
    "convex": ("n",),
    "random-draw": ("n", "m", "seed"),
    "random-plane": ("n", "m", "seed"),
}

COLUMNS = [
    "kind", "n", "r", "c", "m_req", "span", "seed",
    "draw_n", "draw_m", "g_n", "g_m",
    "sep_algo", "sep_size", "sep_valid", "sep_bound", "sep_ratio",
    "indep_t", "indep_size", "indep_target", "indep_ratio",
    "color_t", "colors_used", "color_bound", "color_ratio",
    "biclique_method", "biclique_side", "biclique_target", "biclique_ratio",
    "eh_epsilon", "eh_t", "eh_kind", "eh_size",
    "eh_clique_target", "eh_indep_target", "eh_target_met",
    "crossing_count", "crossing_ratio", "pairs_side",
    "qp_t", "quasiplanar",
]

SKIP = "skip"


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    options: tuple[tuple[str, int], ...]  # sorted (key, value) pairs

    def get(self, key: str, default: int | None = None) -> int | None:
        for k, v in self.options:
            if k == key:
                return v
        return default


def _as_list(value: Any) -> list[Any]:
    return list(value) if isinstance(value, list) else [value]


def expand_instances(raw_instances: Any) -> list[InstanceSpec]:
    if not isinstance(raw_instances, list) or not raw_instances:
        raise InputError("config needs a non-empty `instances` list")
    specs: list[InstanceSpec] = []
    for entry in raw_instances:
        if not isinstance(entry, dict) or "kind" not in entry:
            raise InputError(f"instance entries need a `kind`: {entry!r}")
        kind = entry["kind"]
        if kind not in _KIND_KEYS:
            raise InputError(f"unknown instance kind {kind!r}")
        allowed = _KIND_KEYS[kind]
        keys = sorted(k for k in entry if k != "kind")
        for k in keys:
            if k not in allowed:
                raise InputError(f"kind {kind!r} does not take parameter {k!r}")
        value_lists = []
        for k in keys:
            vals = _as_list(entry[k])
            if not vals or not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
                raise InputError(f"parameter {k!r} of kind {kind!r} must be integers")
            value_lists.append(vals)
        for combo in product(*value_lists):
            specs.append(InstanceSpec(kind, tuple(zip(keys, combo))))
    specs.sort(key=lambda s: (
        s.kind,
        s.get("n", -1), s.get("r", -1), s.get("c", -1),
        s.get("m", -1), s.get("span", -1), s.get("seed", -1),
    ))
    return specs


def build_instance(spec: InstanceSpec) -> tuple[Graph, Drawing | None]:
    """Materialize the analyzed graph (for drawings: their crossing graph)."""
    kind = spec.kind
    try:
        if kind == "disjoint":
            g = build_string_graph(disjoint_segments(spec.get("n", 1)))
        elif kind == "star":
            g = build_string_graph(pairwise_crossing_star(spec.get("n", 2)))
        elif kind == "path":
            g = build_string_graph(interval_path(spec.get("n", 2)))
        elif kind == "grid":
            g = build_string_graph(grid_biclique(spec.get("r", 1), spec.get("c", 1)))
        elif kind == "random-seg":
            n = spec.get("n", 1)
            span = spec.get("span") or 8 * n
            g = build_string_graph(random_segments(n, span, spec.get("seed", 1)))
        elif kind == "convex":
            drawing = convex_drawing(spec.get("n", 3))
            return build_edge_crossing_graph(drawing), drawing
        elif kind == "random-draw":
            n = spec.get("n", 2)
            drawing = random_drawing(n, spec.get("m", 2 * n), spec.get("seed", 1))
            return build_edge_crossing_graph(drawing), drawing
        elif kind == "random-plane":
            n = spec.get("n", 2)
            drawing = random_plane_drawing(n, spec.get("m", 2 * n), spec.get("seed", 1))
            return build_edge_crossing_graph(drawing), drawing
        else:  # pragma: no cover - guarded in expand_instances
            raise InputError(f"unknown kind {kind!r}")
    except ValueError as exc:
        raise InputError(f"cannot build {kind} instance {dict(spec.options)}: {exc}") from None
    return g, None


_SEPARATOR_ALGOS: dict[str, Callable[[Graph], Any]] = {
    "exact": exact_min_separator,
    "spectral": spectral_separator,
    "bfs": bfs_separator,
}


def _parse_analyses(raw: Any) -> list[dict[str, Any]]:
    if not isinstance(raw, list) or not raw:
        raise InputError("config needs a non-empty `analyses` list")
    seen_ops = set()
    parsed = []
    for entry in raw:
        if not isinstance(entry, dict) or "op" not in entry:
            raise InputError(f"analysis entries need an `op`: {entry!r}")
        op = entry["op"]
        if op in seen_ops:
            raise InputError(f"duplicate analysis op {op!r}")
        seen_ops.add(op)
        known = {
            "separate": {"algo"},
            "indep": {"t"},
            "color": {"t"},
            "biclique": {"method"},
            "eh": {"epsilon"},
            "crossings": set(),
            "crossing-pairs": set(),
            "quasiplanar": {"t"},
        }
        if op not in known:
            raise InputError(f"unknown analysis op {op!r}")
        extra = set(entry) - {"op"} - known[op]
        if extra:
            raise InputError(f"analysis {op!r} does not take {sorted(extra)}")
        parsed.append(dict(entry))
    return parsed


def _run_separate(row: dict, g: Graph, algo: str, params: ParamSet) -> None:
    row["sep_algo"] = algo
    if algo == "exact" and g.n > EXACT_SEPARATOR_MAX_N:
        row["sep_size"] = row["sep_valid"] = row["sep_ratio"] = SKIP
    elif algo == "spectral" and g.n < 3:
        row["sep_size"] = row["sep_valid"] = row["sep_ratio"] = SKIP
    elif g.n < 1:
        row["sep_size"] = row["sep_valid"] = row["sep_ratio"] = SKIP
    else:
        result = _SEPARATOR_ALGOS[algo](g)
        if not is_valid_separator(g, result.s):
            raise InvariantError(f"{algo} separator failed re-validation")
        row["sep_size"] = result.size
        row["sep_valid"] = True
        if g.m >= 2:
            plain = separator_size_bound(g.m, ParamSet())  # d = 1: empirical scale
            row["sep_ratio"] = result.size / plain
        else:
            row["sep_ratio"] = SKIP
    row["sep_bound"] = separator_size_bound(g.m, params) if g.m >= 2 else SKIP


def _run_indep(row: dict, g: Graph, t: int, params: ParamSet) -> None:
    row["indep_t"] = t
    chosen = find_independent_set(g, t, params)
    if not is_independent_set(g, chosen):
        raise InvariantError("independent set failed re-validation")
    row["indep_size"] = len(chosen)
    if g.n >= 2:
        target = independence_target(g.n, t, params)
        row["indep_target"] = target
        row["indep_ratio"] = len(chosen) / target
    else:
        row["indep_target"] = row["indep_ratio"] = SKIP


def _run_color(row: dict, g: Graph, t: int, params: ParamSet) -> None:
    row["color_t"] = t
    coloring, bound = color_graph(g, t, params)
    if not is_proper_coloring(g, coloring):
        raise InvariantError("coloring failed re-validation")
    row["colors_used"] = coloring.k
    if g.n >= 2:
        row["color_bound"] = bound
        row["color_ratio"] = coloring.k / bound
    else:
        row["color_bound"] = row["color_ratio"] = SKIP


def _run_biclique(row: dict, g: Graph, method: str, params: ParamSet) -> None:
    row["biclique_method"] = method
    if method == "exact" and g.n > EXACT_BICLIQUE_MAX_N:
        row["biclique_side"] = row["biclique_target"] = row["biclique_ratio"] = SKIP
        return
    result = max_biclique_exact(g) if method == "exact" else greedy_biclique(g)
    if not biclique_is_complete(g, result):
        raise InvariantError("biclique failed re-validation")
    row["biclique_side"] = result.size
    if g.n >= 3 and g.m >= 1:
        target = biclique_target_size(g.n, g.m, params)
        row["biclique_target"] = target
        row["biclique_ratio"] = result.size / target if target > 0 else SKIP
    else:
        row["biclique_target"] = row["biclique_ratio"] = SKIP


def _run_eh(row: dict, g: Graph, epsilon: float, params: ParamSet) -> None:
    row["eh_epsilon"] = epsilon
    if g.n < 3:
        for col in ("eh_t", "eh_kind", "eh_size", "eh_clique_target",
                    "eh_indep_target", "eh_target_met"):
            row[col] = SKIP
        return
    outcome = clique_or_independent(g, epsilon, params)
    row["eh_t"] = outcome.t
    row["eh_kind"] = outcome.kind
    row["eh_size"] = outcome.size
    row["eh_clique_target"] = outcome.clique_target
    row["eh_indep_target"] = outcome.independent_target
    row["eh_target_met"] = outcome.target_met


def _run_drawing_ops(row: dict, drawing: Drawing | None, analyses: dict) -> None:
    if "crossings" in analyses:
        if drawing is None:
            row["crossing_count"] = row["crossing_ratio"] = SKIP
        else:
            count, ratio = crossing_count(drawing)
            row["crossing_count"] = count
            row["crossing_ratio"] = ratio if ratio is not None else SKIP
    if "crossing-pairs" in analyses:
        if drawing is None:
            row["pairs_side"] = SKIP
        else:
            e1, _e2 = crossing_pair_sets(drawing)  # geometric recheck inside
            row["pairs_side"] = len(e1)
    if "quasiplanar" in analyses:
        t = analyses["quasiplanar"].get("t", 3)
        row["qp_t"] = t
        row["quasiplanar"] = SKIP if drawing is None else quasi_planarity(drawing, t)


@dataclass(frozen=True)
class ExperimentResult:
    columns: tuple[str, ...]
    rows: tuple[dict[str, str], ...]
    config: dict

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([row.get(col, "") for col in self.columns])
        return buf.getvalue()

    def meta_json(self) -> str:
        meta = {
            "config": self.config,
            "columns": list(self.columns),
            "version": __version__,
        }
        return json.dumps(meta, indent=2, sort_keys=True) + "\n"


def run_experiment(config: dict) -> ExperimentResult:
    if not isinstance(config, dict):
        raise InputError("config must be a JSON object")
    unknown = set(config) - {"params", "instances", "analyses"}
    if unknown:
        raise InputError(f"unknown config keys {sorted(unknown)}")
    raw_params = config.get("params", {})
    if not isinstance(raw_params, dict):
        raise InputError("`params` must be an object")
    try:
        params = ParamSet(**{k: v for k, v in raw_params.items()})
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad params: {exc}") from None
    specs = expand_instances(config.get("instances"))
    analyses_list = _parse_analyses(config.get("analyses"))
    analyses = {a["op"]: a for a in analyses_list}

    rows = []
    for spec in specs:
        g, drawing = build_instance(spec)
        row: dict[str, Any] = {col: None for col in COLUMNS}
        row["kind"] = spec.kind
        for key, value in spec.options:
            row[{"m": "m_req"}.get(key, key)] = value
        if drawing is not None:
            row["draw_n"] = drawing.n
            row["draw_m"] = drawing.m
        row["g_n"] = g.n
        row["g_m"] = g.m

        if "separate" in analyses:
            algo = analyses["separate"].get("algo", "spectral")
            if algo not in _SEPARATOR_ALGOS:
                raise InputError(f"unknown separator algo {algo!r}")
            _run_separate(row, g, algo, params)
        if "indep" in analyses:
            t = analyses["indep"].get("t", 3)
            if not (isinstance(t, int) and t >= 2):
                raise InputError(f"indep t must be an integer >= 2, got {t!r}")
            _run_indep(row, g, t, params)
        if "color" in analyses:
            t = analyses["color"].get("t", 3)
            if not (isinstance(t, int) and t >= 2):
                raise InputError(f"color t must be an integer >= 2, got {t!r}")
            _run_color(row, g, t, params)
        if "biclique" in analyses:
            method = analyses["biclique"].get("method", "greedy")
            if method not in ("greedy", "exact"):
                raise InputError(f"unknown biclique method {method!r}")
            _run_biclique(row, g, method, params)
        if "eh" in analyses:
            epsilon = analyses["eh"].get("epsilon", 0.5)
            if not (isinstance(epsilon, (int, float)) and 0 < epsilon < 1):
                raise InputError(f"eh epsilon must be in (0, 1), got {epsilon!r}")
            _run_eh(row, g, float(epsilon), params)
        _run_drawing_ops(row, drawing, analyses)

        rows.append({col: format_cell(row[col]) for col in COLUMNS})

    return ExperimentResult(tuple(COLUMNS), tuple(rows), config)


def verify_experiment(config: dict, stored_csv: str) -> tuple[bool, list[str]]:
    """Re-run a config and check the stored report against it.

    Hard failures (return False): the regenerated CSV differs byte-for-byte,
    any certificate fails re-verification (raised as InvariantError during
    the re-run), or a crossing-free drawing row breaks the planar edge bound
    m <= 3n - 6. Reference-bound comparisons are informational lines only —
    the bounds' constants are free parameters, so exceeding them is not an
    error.
    """
    lines: list[str] = []
    result = run_experiment(config)
    ok = True
    if result.to_csv() != stored_csv:
        ok = False
        lines.append("MISMATCH: stored report differs from the regenerated one")
    else:
        lines.append(f"report matches regenerated output ({len(result.rows)} rows)")

    for i, row in enumerate(result.rows):
        tag = f"row {i} ({row['kind']})"
        if row.get("crossing_count") == "0" and row.get("draw_n"):
            n, m = int(row["draw_n"]), int(row["draw_m"])
            if n >= 3 and m > 3 * n - 6:
                ok = False
                lines.append(f"{tag}: INVARIANT crossing-free drawing with m={m} > 3n-6={3 * n - 6}")
        for t_col, used_col, bound_col, label in (
            ("color_t", "colors_used", "color_bound", "colors"),
            ("indep_t", "indep_size", "indep_target", "independent set"),
        ):
            if row.get(t_col) not in ("", SKIP) and row.get(bound_col) not in ("", SKIP):
                t = int(row[t_col])
                g, _ = build_instance(_respec(row))
                if g.n <= 60:
                    if not is_kt_free(g, t):
                        lines.append(f"{tag}: {label} reference bound not applicable "
                                     f"(graph contains a {t}-clique)")
                        continue
                else:
                    lines.append(f"{tag}: K_t check skipped (n > 60)")
                if label == "colors" and float(row[used_col]) > float(row[bound_col]):
                    lines.append(f"{tag}: colors_used {row[used_col]} exceeds the reference "
                                 f"bound {row[bound_col]} (informational)")
    return ok, lines


def _respec(row: dict[str, str]) -> InstanceSpec:
    opts = []
    for key in ("n", "r", "c", "span", "seed"):
        if row.get(key):
            opts.append((key, int(row[key])))
    if row.get("m_req"):
        opts.append(("m", int(row["m_req"])))
    return InstanceSpec(row["kind"], tuple(sorted(opts)))
