"""Experiment harness: grid expansion, determinism, skip markers, verify."""

import csv
import io
import json

import pytest

from stringgraphs.errors import InputError
from stringgraphs.experiments import (
    COLUMNS,
    InstanceSpec,
    build_instance,
    expand_instances,
    format_cell,
    run_experiment,
    verify_experiment,
)


def rows_of(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


BASIC = {
    "instances": [
        {"kind": "path", "n": [5, 8]},
        {"kind": "random-seg", "n": 10, "seed": [1, 2]},
    ],
    "analyses": [
        {"op": "separate", "algo": "bfs"},
        {"op": "color", "t": 3},
    ],
}


class TestExpansion:
    def test_grid_expansion_sorted(self):
        specs = expand_instances([
            {"kind": "random-seg", "n": [20, 10], "seed": [2, 1]},
            {"kind": "disjoint", "n": 4},
        ])
        assert [s.kind for s in specs] == ["disjoint"] + ["random-seg"] * 4
        assert [(s.get("n"), s.get("seed")) for s in specs[1:]] == [
            (10, 1), (10, 2), (20, 1), (20, 2),
        ]

    def test_unknown_kind(self):
        with pytest.raises(InputError, match="unknown instance kind"):
            expand_instances([{"kind": "torus", "n": 3}])

    def test_wrong_parameter_for_kind(self):
        with pytest.raises(InputError, match="does not take"):
            expand_instances([{"kind": "path", "seed": 3}])

    def test_non_integer_parameter(self):
        with pytest.raises(InputError, match="must be integers"):
            expand_instances([{"kind": "path", "n": "five"}])

    def test_build_failure_is_input_error(self):
        with pytest.raises(InputError, match="cannot build"):
            build_instance(InstanceSpec("star", (("n", 1),)))


class TestFormatCell:
    @pytest.mark.parametrize("value,expected", [
        (None, ""),
        (True, "true"),
        (False, "false"),
        (3, "3"),
        (0.5, "0.5"),
        (1 / 3, "0.3333333333"),
        ("skip", "skip"),
    ])
    def test_values(self, value, expected):
        assert format_cell(value) == expected


class TestRunExperiment:
    def test_deterministic_bytes(self):
        a = run_experiment(BASIC)
        b = run_experiment(BASIC)
        assert a.to_csv() == b.to_csv()
        assert a.meta_json() == b.meta_json()

    def test_row_shape_and_order(self):
        result = run_experiment(BASIC)
        rows = rows_of(result.to_csv())
        assert [r["kind"] for r in rows] == ["path", "path", "random-seg", "random-seg"]
        assert [r["n"] for r in rows] == ["5", "8", "10", "10"]
        assert list(rows[0]) == COLUMNS

    def test_requested_cells_filled_others_empty(self):
        result = run_experiment(BASIC)
        row = rows_of(result.to_csv())[0]
        assert row["sep_algo"] == "bfs" and row["sep_valid"] == "true"
        assert row["colors_used"] != ""
        assert row["indep_t"] == ""  # analysis not requested
        assert row["crossing_count"] == ""  # not a drawing instance

    def test_skip_markers(self):
        config = {
            "instances": [{"kind": "disjoint", "n": 30}],
            "analyses": [{"op": "separate", "algo": "exact"},
                         {"op": "biclique", "method": "exact"}],
        }
        row = rows_of(run_experiment(config).to_csv())[0]
        assert row["sep_size"] == "skip"  # exact cap is n <= 20
        assert row["biclique_side"] == "skip"  # exact cap is n <= 16
        assert row["sep_bound"] == "skip"  # m = 0 < 2

    def test_drawing_instances(self):
        config = {
            "instances": [{"kind": "convex", "n": [5, 6]}],
            "analyses": [{"op": "crossings"}, {"op": "quasiplanar", "t": 3},
                         {"op": "crossing-pairs"}],
        }
        rows = rows_of(run_experiment(config).to_csv())
        assert rows[0]["draw_n"] == "5" and rows[0]["draw_m"] == "10"
        assert rows[0]["crossing_count"] == "5"
        assert rows[0]["quasiplanar"] == "true"  # K5 convex: no 3 pairwise
        assert rows[1]["crossing_count"] == "15"
        assert rows[1]["quasiplanar"] == "false"
        assert int(rows[1]["pairs_side"]) >= 2
        # analyzed graph is the crossing graph
        assert rows[1]["g_n"] == "15"

    def test_graph_analyses_on_crossing_graph(self):
        config = {
            "instances": [{"kind": "convex", "n": 6}],
            "analyses": [{"op": "separate", "algo": "bfs"}],
        }
        row = rows_of(run_experiment(config).to_csv())[0]
        assert row["g_n"] == "15" and row["sep_valid"] == "true"

    def test_eh_analysis(self):
        config = {
            "instances": [{"kind": "random-seg", "n": 30, "seed": 1}],
            "analyses": [{"op": "eh", "epsilon": 0.5}],
        }
        row = rows_of(run_experiment(config).to_csv())[0]
        assert row["eh_kind"] in ("clique", "independent")
        assert row["eh_target_met"] in ("true", "false")

    def test_params_flow_through(self):
        config = {
            "params": {"d": 2.0},
            "instances": [{"kind": "path", "n": 9}],
            "analyses": [{"op": "separate", "algo": "bfs"}],
        }
        row = rows_of(run_experiment(config).to_csv())[0]
        base = rows_of(run_experiment({**config, "params": {}}).to_csv())[0]
        assert float(row["sep_bound"]) == pytest.approx(2 * float(base["sep_bound"]))
        # the empirical ratio column is d-independent by construction
        assert row["sep_ratio"] == base["sep_ratio"]

    def test_meta_contents(self):
        result = run_experiment(BASIC)
        meta = json.loads(result.meta_json())
        assert meta["config"] == BASIC
        assert meta["columns"] == COLUMNS
        assert meta["version"]


class TestConfigValidation:
    @pytest.mark.parametrize("config,message", [
        ({"analyses": [{"op": "color"}]}, "instances"),
        ({"instances": [{"kind": "path", "n": 5}]}, "analyses"),
        ({"instances": [{"kind": "path", "n": 5}],
          "analyses": [{"op": "warp"}]}, "unknown analysis"),
        ({"instances": [{"kind": "path", "n": 5}],
          "analyses": [{"op": "color"}, {"op": "color"}]}, "duplicate"),
        ({"instances": [{"kind": "path", "n": 5}],
          "analyses": [{"op": "color", "algo": "x"}]}, "does not take"),
        ({"instances": [{"kind": "path", "n": 5}],
          "analyses": [{"op": "color", "t": 1}]}, "t must be"),
        ({"instances": [{"kind": "path", "n": 5}],
          "analyses": [{"op": "eh", "epsilon": 2}]}, "epsilon"),
        ({"params": {"d": 0.1}, "instances": [{"kind": "path", "n": 5}],
          "analyses": [{"op": "color"}]}, "bad params"),
        ({"params": 3, "instances": [{"kind": "path", "n": 5}],
          "analyses": [{"op": "color"}]}, "params"),
        ({"bogus": 1, "instances": [{"kind": "path", "n": 5}],
          "analyses": [{"op": "color"}]}, "unknown config keys"),
    ])
    def test_rejected(self, config, message):
        with pytest.raises(InputError, match=message):
            run_experiment(config)


class TestVerify:
    def test_accepts_faithful_report(self):
        result = run_experiment(BASIC)
        ok, lines = verify_experiment(BASIC, result.to_csv())
        assert ok
        assert any("matches" in line for line in lines)

    def test_rejects_tampered_report(self):
        result = run_experiment(BASIC)
        tampered = result.to_csv().replace("true", "false", 1)
        ok, lines = verify_experiment(BASIC, tampered)
        assert not ok
        assert any("MISMATCH" in line for line in lines)

    def test_flags_non_kt_free_rows(self):
        config = {
            "instances": [{"kind": "star", "n": 8}],  # K8: not K3-free
            "analyses": [{"op": "color", "t": 3}],
        }
        result = run_experiment(config)
        ok, lines = verify_experiment(config, result.to_csv())
        assert ok  # informational only
        assert any("not applicable" in line for line in lines)
