import json

import pytest

from tendonplan.cli import main, parse_args, run
from tendonplan.errors import UsageError


@pytest.fixture(autouse=True)
def _isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for key in ("TENDONPLAN_SEED", "TENDONPLAN_WEAR_FILE", "TENDONPLAN_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)


def _json_out(capsys, argv):
    assert run(argv) == 0
    return json.loads(capsys.readouterr().out)


def test_parse_plan():
    config = parse_args(["--seed", "4", "plan", "--algo", "ga", "--group", "3", "--lower", "50:3"])
    assert config.command == "plan"
    assert config.seed == 4
    assert config.output == "-"
    assert config.options["algo"] == "ga"
    assert config.options["group"] == 3
    assert config.options["lower"] == (50, 3)
    assert config.options["upper"] == (47, 14)


def test_parse_bench():
    config = parse_args(["bench", "--runs", "100", "--alternatives", "--algos", "astar,ga"])
    assert config.options["runs"] == 100
    assert config.options["alternatives"] is True
    assert config.options["algos"] == ["astar", "ga"]


def test_parse_priorities():
    config = parse_args(["weights", "--priorities", "1,0,0,1"])
    assert config.options["priorities"] == (True, False, False, True)


@pytest.mark.parametrize(
    "argv",
    [
        ["weights", "--group", "16"],
        ["weights", "--group", "1", "--priorities", "1,0,0,0"],
        ["weights", "--priorities", "1,2,0,0"],
        ["plan", "--lower", "50-3"],
        ["plan", "--lower", "50:61"],
        ["plan", "--algo", "dijkstra"],
        ["bench", "--algos", "astar,bfs"],
        ["bench", "--groups", "1,x"],
        ["bench", "--groups", ""],
        ["bench", "--runs", "0"],
        ["bench", "--workers", "0"],
        ["tune", "--trials", "0"],
        ["wear", "apply", "--section", "2", "--path", "30,31"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(UsageError):
        parse_args(argv)
    assert run(argv) == 1
    assert capsys.readouterr().err.startswith("tendonplan")


def test_env_summary(capsys):
    assert _json_out(capsys, ["env"]) == {
        "nodes": 61,
        "edges": 100,
        "sections": 2,
        "composite_states": 3721,
    }


def test_env_dump(capsys):
    assert run(["env", "--dump"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 62
    assert lines[1].startswith("0,")


def test_weights_group(capsys):
    document = _json_out(capsys, ["weights", "--group", "5"])
    assert document["group"] == 5
    assert list(document["weights"].values()) == pytest.approx([0.45, 0.45, 0.05, 0.05], abs=1e-3)
    assert document["cr"] < 0.1


def test_weights_priorities_match_group(capsys):
    by_flags = _json_out(capsys, ["weights", "--priorities", "0,0,0,1"])
    assert by_flags["group"] == 4


def test_weights_default_is_equal(capsys):
    document = _json_out(capsys, ["weights"])
    assert document["group"] == 15
    assert list(document["weights"].values()) == pytest.approx([0.25] * 4)


def test_plan_start_is_goal(capsys):
    document = _json_out(capsys, ["plan", "--lower", "30:30", "--upper", "30:30"])
    assert document["breakdown"]["total"] == 0.0
    assert document["lower"]["path"] == [30]


def test_plan_text(capsys):
    assert run(["plan", "--group", "1", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("algo: astar\nlower: 50-")
    assert "total: " in out


def test_plan_is_byte_identical(capsys):
    argv = ["--seed", "3", "plan", "--algo", "ga", "--group", "8", "--population", "12"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


def test_seed_from_environment(capsys, monkeypatch):
    argv = ["plan", "--algo", "ga", "--group", "2", "--population", "12"]
    assert run(["--seed", "21", *argv]) == 0
    explicit = capsys.readouterr().out
    monkeypatch.setenv("TENDONPLAN_SEED", "21")
    assert run(argv) == 0
    assert capsys.readouterr().out == explicit


def test_plan_to_file(tmp_path, capsys):
    target = tmp_path / "plan.json"
    assert run(["--output", str(target), "plan", "--group", "4"]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["algo"] == "astar"


def test_unwritable_output():
    assert run(["--output", "missing-dir/out.json", "env"]) == 2


def test_wear_apply_and_show(tmp_path, capsys):
    store = str(tmp_path / "robot.json")
    assert run(["--wear-file", store, "wear", "apply", "--section", "0", "--path", "29,30,31"]) == 0
    capsys.readouterr()
    document = _json_out(capsys, ["--wear-file", store, "wear", "show"])
    assert document["motors"]["0"] == 140
    assert len(document["segments"]) == 2

    assert run(["--wear-file", store, "wear", "reset"]) == 0
    capsys.readouterr()
    assert _json_out(capsys, ["--wear-file", store, "wear", "show"])["segments"] == []


def test_wear_apply_rejects_jumps(tmp_path):
    store = str(tmp_path / "robot.json")
    assert run(["--wear-file", store, "wear", "apply", "--section", "0", "--path", "30,32"]) == 1


def test_malformed_wear_file(tmp_path, capsys):
    store = tmp_path / "robot.json"
    store.write_text(
        json.dumps({"motors": {}, "segments": [{"section": 0, "a": 30, "b": 31, "count": -2}]}),
        encoding="utf-8",
    )
    assert run(["--wear-file", str(store), "plan", "--group", "1"]) == 1
    assert "segments[0].count" in capsys.readouterr().err


def test_bench_csv(capsys):
    argv = ["--seed", "0", "bench", "--groups", "1,2", "--runs", "2", "--population", "10"]
    assert run(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "group,algo,mode,runs,mean_time_us,best_pct,equal_pct,distinct_paths"
    assert len(lines) == 1 + 2 * 4


def test_bench_criteria(capsys):
    argv = ["--seed", "0", "bench", "--criteria", "--groups", "1,15", "--algos", "astar"]
    assert run(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "group,algo,lower_path,upper_path,total"
    assert len(lines) == 3


def test_config_file(tmp_path, capsys):
    settings = tmp_path / "settings.yaml"
    settings.write_text("seed: 9\nga:\n  population_size: 12\n", encoding="utf-8")
    assert run(["--config", str(settings), "plan", "--algo", "ga", "--group", "3"]) == 0
    from_file = capsys.readouterr().out
    argv = ["--seed", "9", "plan", "--algo", "ga", "--group", "3", "--population", "12"]
    assert run(argv) == 0
    assert capsys.readouterr().out == from_file


def test_main_reports_bad_config_file(capsys):
    config = parse_args(["--config", "absent.yaml", "env"])
    assert main(config) == 2
    assert "absent.yaml" in capsys.readouterr().err
