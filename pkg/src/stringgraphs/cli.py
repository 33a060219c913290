"""Command-line interface.

Subcommands:

    gen             write a generated curve family or drawing to a file
    build           curve/drawing file -> intersection graph file
    separate        balanced separator of a graph (exact | spectral | bfs)
    indep           large independent set of a K_t-free graph
    color           proper coloring of a K_t-free graph
    eh              clique-or-independent-set extraction
    biclique        balanced complete bipartite subgraph (greedy | exact)
    bound           per-vertex edge-bound certificate for K_{t,t}-free graphs
    crossings       count edge crossings of a drawing
    crossing-pairs  two sets of edges of equal size, all pairs crossing
    quasiplanar     check a drawing for t pairwise-crossing edges
    experiment      run a JSON experiment config, write CSV + metadata
    verify          re-run a config and check a stored CSV report

Every command prints a small deterministic report to stdout (JSON with
sorted keys by default, CSV with --format csv) and exits 0 on success,
1 when a computed certificate fails verification, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any

from . import __version__
from .bounds import (
    ParamSet,
    biclique_target_size,
    independence_target,
    ktt_edge_bound,
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
from .experiments import run_experiment, verify_experiment
from .fileio import (
    format_coloring,
    format_curve_family,
    format_drawing,
    format_graph,
    format_separator,
    format_vertex_sets,
    looks_like_drawing,
    parse_drawing,
    parse_graph,
    read_text,
    write_text,
)
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
    Graph,
    build_edge_crossing_graph,
    build_string_graph,
    is_independent_set,
)
from .separators import (
    EXACT_SEPARATOR_MAX_N,
    bfs_separator,
    exact_min_separator,
    is_valid_separator,
    spectral_separator,
)

GRAPH_GEN_KINDS = ("disjoint", "star", "path", "grid", "random-seg")
DRAWING_GEN_KINDS = ("convex", "random-draw", "random-plane")


def _params(args: argparse.Namespace) -> ParamSet:
    try:
        return ParamSet(d=args.d, b=args.b, C=args.C, base_case_n=args.base_case_n)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _round10(value: float) -> float:
    return float(f"{value:.10g}")


def _jsonable(value: Any) -> Any:
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return _round10(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(report: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_jsonable(report), sort_keys=True))
        return
    cols = list(report)

    def cell(v: Any) -> str:
        if v is None:
            return ""
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return f"{v:.10g}"
        return str(v)

    print(",".join(cols))
    print(",".join(cell(report[c]) for c in cols))


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(read_text(path))
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def _cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    seed = 1 if args.seed is None else args.seed

    def need_n() -> int:
        if args.n is None:
            raise InputError(f"gen --kind {kind} needs --n")
        return args.n

    try:
        if kind == "grid":
            if args.r is None or args.c is None:
                raise InputError("gen --kind grid needs --r and --c")
            payload: Any = grid_biclique(args.r, args.c)
        elif kind == "disjoint":
            payload = disjoint_segments(need_n())
        elif kind == "star":
            payload = pairwise_crossing_star(need_n())
        elif kind == "path":
            payload = interval_path(need_n())
        elif kind == "random-seg":
            n = need_n()
            payload = random_segments(n, args.span if args.span is not None else 8 * n, seed)
        elif kind == "convex":
            payload = convex_drawing(need_n())
        elif kind == "random-draw":
            n = need_n()
            payload = random_drawing(n, args.m if args.m is not None else 2 * n, seed)
        else:  # random-plane
            n = need_n()
            payload = random_plane_drawing(n, args.m if args.m is not None else 2 * n, seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None

    report: dict[str, Any] = {"kind": kind, "out": args.out}
    if kind in DRAWING_GEN_KINDS:
        write_text(args.out, format_drawing(payload))
        report["n"] = payload.n
        report["m"] = payload.m
    else:
        write_text(args.out, format_curve_family(payload))
        report["n"] = len(payload.curves)
    _emit(report, args.format)
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    text = read_text(args.infile)
    if looks_like_drawing(text):
        drawing = parse_drawing(text)
        g = build_edge_crossing_graph(drawing)
        source = "drawing"
    else:
        from .fileio import parse_curve_family

        g = build_string_graph(parse_curve_family(text))
        source = "curves"
    write_text(args.out, format_graph(g))
    _emit({"source": source, "n": g.n, "m": g.m, "out": args.out}, args.format)
    return 0


def _cmd_separate(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    params = _params(args)
    if args.algo == "exact":
        if g.n > EXACT_SEPARATOR_MAX_N:
            raise InputError(
                f"exact separator only handles n <= {EXACT_SEPARATOR_MAX_N}, graph has n={g.n}"
            )
        result = exact_min_separator(g)
    elif args.algo == "spectral":
        if g.n < 3:
            raise InputError(f"spectral separator needs n >= 3, graph has n={g.n}")
        result = spectral_separator(g)
    else:
        if g.n < 1:
            raise InputError("bfs separator needs n >= 1")
        result = bfs_separator(g)
    if not is_valid_separator(g, result.s):
        raise InvariantError(f"{args.algo} separator failed re-validation")
    report: dict[str, Any] = {
        "algo": args.algo,
        "n": g.n,
        "m": g.m,
        "size": result.size,
        "valid": True,
        "bound": separator_size_bound(g.m, params) if g.m >= 2 else None,
        "ratio": result.size / separator_size_bound(g.m, ParamSet()) if g.m >= 2 else None,
        "out": args.out,
    }
    if args.out:
        write_text(args.out, format_separator(result.s, result.v1, result.v2))
    _emit(report, args.format)
    return 0


def _cmd_indep(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    params = _params(args)
    if args.t < 2:
        raise InputError(f"--t must be >= 2, got {args.t}")
    chosen = find_independent_set(g, args.t, params)
    if not is_independent_set(g, chosen):
        raise InvariantError("independent set failed re-validation")
    target = independence_target(g.n, args.t, params) if g.n >= 2 else None
    report = {
        "t": args.t,
        "n": g.n,
        "m": g.m,
        "size": len(chosen),
        "target": target,
        "ratio": len(chosen) / target if target else None,
        "out": args.out,
    }
    if args.out:
        write_text(args.out, format_vertex_sets([("I", chosen)]))
    _emit(report, args.format)
    return 0


def _cmd_color(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    params = _params(args)
    if args.t < 2:
        raise InputError(f"--t must be >= 2, got {args.t}")
    coloring, bound = color_graph(g, args.t, params)
    if not is_proper_coloring(g, coloring):
        raise InvariantError("coloring failed re-validation")
    report = {
        "t": args.t,
        "n": g.n,
        "m": g.m,
        "colors_used": coloring.k,
        "bound": bound,
        "ratio": coloring.k / bound if bound else None,
        "out": args.out,
    }
    if args.out:
        write_text(args.out, format_coloring(coloring.colors))
    _emit(report, args.format)
    return 0


def _cmd_eh(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    params = _params(args)
    if not 0 < args.epsilon < 1:
        raise InputError(f"--epsilon must be in (0, 1), got {args.epsilon}")
    if g.n < 3:
        raise InputError(f"clique-or-independent extraction needs n >= 3, graph has n={g.n}")
    outcome = clique_or_independent(g, args.epsilon, params)
    report = {
        "epsilon": args.epsilon,
        "t": outcome.t,
        "kind": outcome.kind,
        "size": outcome.size,
        "clique_target": outcome.clique_target,
        "independent_target": outcome.independent_target,
        "target_met": outcome.target_met,
        "out": args.out,
    }
    if args.out:
        write_text(
            args.out,
            f"kind: {outcome.kind}\n" + format_vertex_sets([("V", outcome.vertices)]),
        )
    _emit(report, args.format)
    return 0


def _cmd_biclique(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    params = _params(args)
    if args.method == "exact":
        if g.n > EXACT_BICLIQUE_MAX_N:
            raise InputError(
                f"exact biclique only handles n <= {EXACT_BICLIQUE_MAX_N}, graph has n={g.n}"
            )
        result = max_biclique_exact(g)
    else:
        result = greedy_biclique(g)
    if not biclique_is_complete(g, result):
        raise InvariantError("biclique failed re-validation")
    target = biclique_target_size(g.n, g.m, params) if g.n >= 3 and g.m >= 1 else None
    report = {
        "method": args.method,
        "n": g.n,
        "m": g.m,
        "side": result.size,
        "target": target,
        "ratio": result.size / target if target else None,
        "out": args.out,
    }
    if args.out:
        write_text(args.out, format_vertex_sets([("A", result.a), ("B", result.b)]))
    _emit(report, args.format)
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    params = _params(args)
    if args.t < 2:
        raise InputError(f"--t must be >= 2, got {args.t}")
    try:
        cert = ktt_edge_bound(args.t, params)
    except ValueError as exc:
        raise InvariantError(f"certificate construction failed: {exc}") from None
    report = {
        "t": cert.t,
        "d": cert.d,
        "b": cert.b,
        "a": cert.a,
        "log2_x": cert.log2_x,
        "log2_n0": cert.log2_n0,
        "phi_at_n0": cert.phi_at_n0,
        "ratio_at_n0": cert.ratio_at_n0,
        "q_lower": cert.q_lower,
        "q_upper": cert.q_upper,
        "q": cert.q,
        "factors_used": cert.factors_used,
        "bound_per_vertex": cert.bound_per_vertex,
    }
    if args.out:
        # the stored certificate holds only certificate fields, no CLI
        # envelope, so reruns byte-reproduce it wherever it is written
        write_text(args.out, json.dumps(_jsonable(report), indent=2, sort_keys=True) + "\n")
    report = dict(report, out=args.out)
    _emit(report, args.format)
    return 0


def _load_drawing(path: str) -> Any:
    try:
        return parse_drawing(read_text(path))
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def _cmd_crossings(args: argparse.Namespace) -> int:
    drawing = _load_drawing(args.infile)
    count, ratio = crossing_count(drawing)
    _emit(
        {"n": drawing.n, "m": drawing.m, "count": count, "ratio": ratio},
        args.format,
    )
    return 0


def _cmd_crossing_pairs(args: argparse.Namespace) -> int:
    drawing = _load_drawing(args.infile)
    e1, e2 = crossing_pair_sets(drawing)
    report = {"n": drawing.n, "m": drawing.m, "side": len(e1), "out": args.out}
    if args.out:
        write_text(args.out, format_vertex_sets([("E1", e1), ("E2", e2)]))
    _emit(report, args.format)
    return 0


def _cmd_quasiplanar(args: argparse.Namespace) -> int:
    drawing = _load_drawing(args.infile)
    if args.t < 2:
        raise InputError(f"--t must be >= 2, got {args.t}")
    result = quasi_planarity(drawing, args.t)
    _emit(
        {"t": args.t, "n": drawing.n, "m": drawing.m, "quasiplanar": result},
        args.format,
    )
    return 0


def _load_config(path: str) -> dict:
    try:
        config = json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(config, dict):
        raise InputError(f"{path}: config must be a JSON object")
    return config


def _cmd_experiment(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    result = run_experiment(config)
    meta_path = args.out + ".meta.json"
    write_text(args.out, result.to_csv())
    write_text(meta_path, result.meta_json())
    _emit({"rows": len(result.rows), "out": args.out, "meta": meta_path}, args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    stored = read_text(args.infile)
    ok, lines = verify_experiment(config, stored)
    for line in lines:
        print(line)
    print("VERIFY: OK" if ok else "VERIFY: FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=float, default=1.0,
                        help="separator-bound scale parameter (>= 1)")
    common.add_argument("--b", type=float, default=1.0,
                        help="biclique-bound exponent parameter (>= 1)")
    common.add_argument("--C", type=float, default=None,
                        help="decomposition exponent constant (default max(8d, 6b+1))")
    common.add_argument("--base-case-n", dest="base_case_n", type=int, default=18,
                        help="size below which exact search replaces recursion")
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="stdout report format")

    parser = argparse.ArgumentParser(
        prog="stringgraphs",
        description="String-graph separators, decompositions, and crossing analysis.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a curve family or drawing")
    p.add_argument("--kind", required=True, choices=GRAPH_GEN_KINDS + DRAWING_GEN_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, help="grid rows")
    p.add_argument("--c", type=int, help="grid columns")
    p.add_argument("--m", type=int, help="edge count for drawing kinds")
    p.add_argument("--span", type=int, help="coordinate span for random-seg")
    p.add_argument("--seed", type=int, help="RNG seed (default 1)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("build", parents=[common],
                       help="build the intersection graph of a curve or drawing file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("separate", parents=[common], help="balanced 2/3 vertex separator")
    p.add_argument("--algo", choices=("exact", "spectral", "bfs"), default="spectral")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_separate)

    p = sub.add_parser("indep", parents=[common], help="independent set in a K_t-free graph")
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_indep)

    p = sub.add_parser("color", parents=[common], help="proper coloring of a K_t-free graph")
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("eh", parents=[common], help="clique or large independent set")
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_eh)

    p = sub.add_parser("biclique", parents=[common], help="balanced complete bipartite subgraph")
    p.add_argument("--method", choices=("greedy", "exact"), default="greedy")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_biclique)

    p = sub.add_parser("bound", parents=[common],
                       help="edge-bound certificate for K_{t,t}-free string graphs")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("crossings", parents=[common], help="count crossings in a drawing")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_crossings)

    p = sub.add_parser("crossing-pairs", parents=[common],
                       help="equal-size edge sets with all pairs crossing")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_crossing_pairs)

    p = sub.add_parser("quasiplanar", parents=[common],
                       help="check a drawing for t pairwise-crossing edges")
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_quasiplanar)

    p = sub.add_parser("experiment", parents=[common], help="run a JSON experiment config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("verify", parents=[common], help="re-run a config against a stored report")
    p.add_argument("--config", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
