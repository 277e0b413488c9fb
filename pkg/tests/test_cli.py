import json

import pytest

from invshadow import make_zoo_system
from invshadow.cli import (
    EXIT_FALSE,
    EXIT_OK,
    EXIT_UNDETERMINED,
    EXIT_USAGE,
    RunConfig,
    load_system,
    parse_system_config,
    run_cli,
    run_phase_sweep,
)
from invshadow.errors import BadParams, ParseError


# --------------------------------------------------------------------------
# config parsing

CIRCLE_CFG = """
metric: {circle_grid: 8}
map: [1, 2, 3, 4, 5, 6, 7, 0]
"""

SWAP_CFG = """
points: [a, b]
metric:
  explicit:
    - [0.5]
map: {a: b, b: a}
"""


def test_parse_circle_grid_round_trip():
    system = parse_system_config(CIRCLE_CFG)
    reference = make_zoo_system("rotation", 8, 1)
    assert system.map_table == reference.map_table
    assert system.space.dist == reference.space.dist


def test_parse_explicit_swap():
    system = parse_system_config(SWAP_CFG)
    reference = make_zoo_system("swap_pair", 0.5)
    assert system.map_table == reference.map_table
    assert system.space.dist == reference.space.dist
    assert system.space.labels == ("a", "b")


def test_parse_unknown_label():
    with pytest.raises(Exception) as exc:
        parse_system_config("""
points: [a, b]
metric:
  explicit:
    - [0.5]
map: {a: b, b: zzz}
""")
    assert "zzz" in str(exc.value)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_system_config("not a mapping")
    with pytest.raises(ParseError):
        parse_system_config("metric: {circle_grid: 4}")  # no map
    with pytest.raises(ParseError):
        parse_system_config("metric: {circle_grid: 0}\nmap: []")
    with pytest.raises(ParseError):
        parse_system_config("metric: {explicit: [[0.5, 0.2]]}\nmap: [0, 1]")
    err = pytest.raises(ParseError, parse_system_config, "a: [1,\nb: }{")
    assert err.value.line is not None


def test_parse_incomplete_map():
    with pytest.raises(ParseError) as exc:
        parse_system_config("""
metric: {circle_grid: 3}
map: {"0": "1"}
""")
    assert "missing images" in str(exc.value)


def test_load_system_zoo_and_file(tmp_path):
    assert load_system("rotation:8,1").name == "rotation(8,1)"
    assert load_system("two_fixed_points:1.0").space.distance(0, 1) == 1.0
    path = tmp_path / "swap.yaml"
    path.write_text(SWAP_CFG)
    assert load_system(str(path)).name == "swap"
    with pytest.raises(BadParams):
        load_system("does_not_exist:1")


# --------------------------------------------------------------------------
# phase sweep

def test_phase_sweep_rotation(rotation8):
    config = RunConfig(rotation8, (0.15, 0.2, 0.3), (0.1, 0.12, 0.13))
    diagram = run_phase_sweep(config)
    for i in range(3):
        assert [c.verdict for c in diagram.rows[i]] == [True, True, False]
    assert diagram.best_delta() == {0.15: 0.12, 0.2: 0.12, 0.3: 0.12}


def test_phase_sweep_doubling(doubling9):
    config = RunConfig(doubling9, (0.15, 0.2, 0.3), (0.1, 0.12, 0.13))
    diagram = run_phase_sweep(config)
    for i in range(3):
        assert [c.verdict for c in diagram.rows[i]] == [True, False, False]


def test_phase_sweep_single_point(identity1):
    config = RunConfig(identity1, (0.1,), (0.05, 0.2))
    diagram = run_phase_sweep(config)
    assert all(c.verdict for row in diagram.rows for c in row)


def test_run_config_validation(rotation8):
    with pytest.raises(BadParams):
        RunConfig(rotation8, (), (0.1,))
    with pytest.raises(BadParams):
        RunConfig(rotation8, (0.2, 0.1), (0.1,))
    with pytest.raises(BadParams):
        RunConfig(rotation8, (0.1,), (-0.1, 0.2))


# --------------------------------------------------------------------------
# CLI surface

def _run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_decide_true_exit0(capsys):
    code, out = _run(capsys, "decide", "--system", "rotation:8,1",
                     "--eps", "0.2", "--delta", "0.12", "--horizon", "full")
    assert code == EXIT_OK
    assert "verdict: true" in out
    assert "witness" in out


def test_decide_false_exit1_with_counterexample(capsys):
    code, out = _run(capsys, "decide", "--system", "rotation:8,1",
                     "--eps", "0.2", "--delta", "0.13", "--horizon", "full")
    assert code == EXIT_FALSE
    assert "counterexample" in out


def test_decide_json_schema(capsys):
    code, out = _run(capsys, "decide", "--system", "rotation:8,1",
                     "--eps", "0.2", "--delta", "0.13", "--format", "json")
    assert code == EXIT_FALSE
    doc = json.loads(out)
    assert set(doc) == {
        "schema_version", "tool_version", "system", "query", "verdict",
        "certificates", "diagnostics",
    }
    assert doc["verdict"]["overall"] is False
    assert doc["certificates"]
    assert doc["system"]["name"] == "rotation(8,1)"


def test_decide_th_and_robust(capsys):
    code, _ = _run(capsys, "decide", "--system", "swap_pair:0.5",
                   "--eps", "0.3", "--delta", "0.4", "--class", "th")
    assert code == EXIT_OK
    code, _ = _run(capsys, "decide", "--system", "swap_pair:0.5",
                   "--eps", "0.3", "--delta", "0.6", "--class", "th")
    assert code == EXIT_FALSE
    code, _ = _run(capsys, "decide", "--system", "rotation:8,1",
                   "--eps", "0.3", "--delta", "0.12", "--robust")
    assert code == EXIT_OK


def test_undetermined_exit3(capsys):
    code, out = _run(capsys, "decide", "--system", "rotation:8,1",
                     "--eps", "0.55", "--delta", "0.13", "--cap", "2")
    assert code == EXIT_UNDETERMINED
    assert "UNDETERMINED" in out


def test_weak_subcommand(capsys):
    code, _ = _run(capsys, "weak", "--system", "rotation:8,1",
                   "--eps", "0.05", "--delta", "0.13")
    assert code == EXIT_OK
    code, _ = _run(capsys, "weak", "--system", "doubling:9",
                   "--eps", "0.15", "--delta", "0.12")
    assert code == EXIT_FALSE


def test_phase_subcommand_json(capsys):
    code, out = _run(capsys, "phase", "--system", "rotation:8,1",
                     "--eps", "0.15", "0.2", "--delta", "0.1", "0.13",
                     "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    cells = doc["verdict"]["cells"]
    assert cells[0][0]["verdict"] is True
    assert cells[0][1]["verdict"] is False


def test_props_subcommand(capsys):
    code, out = _run(capsys, "props", "--system", "doubling:9",
                     "--eta", "0.12", "--horizon", "6",
                     "--eps", "0.3", "--delta", "0.12", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert abs(doc["verdict"]["sensitivity_modulus"] - 4 / 9) < 1e-12


def test_graph_subcommand(capsys):
    code, out = _run(capsys, "graph", "--system", "rotation:8,1",
                     "--delta", "0.2", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["verdict"]["succ"]["0"] == [0, 1, 2]
    assert doc["verdict"]["chain_transitive"] is True


def test_zoo_list(capsys):
    code, out = _run(capsys, "zoo", "list")
    assert code == EXIT_OK
    assert "rotation" in out


def test_report_subcommand(capsys):
    code, out = _run(capsys, "report", "--system", "swap_pair:0.5",
                     "--eps", "0.2", "0.3", "--delta", "0.1", "0.13",
                     "--horizon", "3", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert "phase" in doc["verdict"] and "properties" in doc["verdict"]


def test_usage_errors(capsys):
    # default eps is a grid; decide needs exactly one value
    assert run_cli(["decide", "--system", "rotation:8,1"]) == EXIT_USAGE
    # bad system spec
    code, _ = _run(capsys, "decide", "--system", "bogus:1",
                   "--eps", "0.2", "--delta", "0.1")
    assert code == EXIT_USAGE
    # multiple eps for a single decision
    code, _ = _run(capsys, "decide", "--system", "rotation:8,1",
                   "--eps", "0.1", "0.2", "--delta", "0.1")
    assert code == EXIT_USAGE
    # unknown subcommand exits 2 via argparse
    assert run_cli(["frobnicate"]) == EXIT_USAGE
    # bad horizon
    code, _ = _run(capsys, "decide", "--system", "rotation:8,1",
                   "--eps", "0.2", "--delta", "0.1", "--horizon", "soon")
    assert code == EXIT_USAGE


def test_verify_single_suite(capsys):
    code, out = _run(capsys, "verify", "--suites", "periodic_expansive_remark")
    assert code == EXIT_OK
    assert "PERIODIC_EXPANSIVE_REMARK: PASS" in out


def test_verify_unknown_suite(capsys):
    code, _ = _run(capsys, "verify", "--suites", "nope")
    assert code == EXIT_USAGE


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "verdict.json"
    code, out = _run(capsys, "decide", "--system", "rotation:8,1",
                     "--eps", "0.2", "--delta", "0.12",
                     "--format", "json", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text())["verdict"]["overall"] is True


def test_text_and_json_verdicts_agree(capsys):
    _, text = _run(capsys, "decide", "--system", "rotation:9,1",
                   "--eps", "0.15", "--delta", "0.13")
    _, raw = _run(capsys, "decide", "--system", "rotation:9,1",
                  "--eps", "0.15", "--delta", "0.13", "--format", "json")
    doc = json.loads(raw)
    assert ("verdict: false" in text) == (doc["verdict"]["overall"] is False)
    for cert in doc["certificates"]:
        assert str(cert["y"]) in text
