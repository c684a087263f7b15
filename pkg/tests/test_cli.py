import json
from pathlib import Path

import pytest

from netmend.main import EXIT_ATTACK_FAILED, EXIT_CONFIG, main
from netmend.services.report import load_series

ARTIFACTS = [
    "graph_original.txt",
    "graph_fragmented.txt",
    "attack_trace.csv",
    "rewire_plan_strategic.csv",
    "rewire_plan_budget.csv",
    "graph_restored_strategic.txt",
    "graph_restored_budget.txt",
    "budget_schedule.csv",
    "metrics.csv",
    "metrics.json",
]

GOLDEN = Path(__file__).parent / "fixtures" / "linked_cycles"


@pytest.fixture(autouse=True)
def no_env_out(monkeypatch):
    monkeypatch.delenv("NETMEND_OUT", raising=False)


def er_args(out, seed: int = 7) -> list[str]:
    return [
        "run", "--gen", "er", "--n", "60", "--p", "0.08", "--q", "4",
        "--seed", str(seed), "--out", str(out),
    ]  # fmt: skip


def metrics_of(tmp_path, capsys, text: str) -> dict:
    path = tmp_path / "graph.txt"
    path.write_text(text)
    assert main(["metrics", str(path)]) == 0
    return json.loads(capsys.readouterr().out)


def test_metrics_of_path(tmp_path, capsys):
    result = metrics_of(tmp_path, capsys, "0 1\n1 2\n")
    assert result == {
        "n": 3,
        "m": 2,
        "L_E": 1.555556,
        "L_E_spectral": 1.555556,
        "S": 1.0,
        "rho": 0.666667,
    }


def test_metrics_of_cycle(tmp_path, capsys):
    result = metrics_of(tmp_path, capsys, "a b\nb c\nc d\nd e\ne a\n")
    assert result["L_E"] == 2.0
    assert result["S"] == 1.0


def test_metrics_of_empty_file_is_an_error(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("")
    assert main(["metrics", str(path)]) == EXIT_CONFIG
    assert "error" in capsys.readouterr().err


def test_metrics_of_invalid_utf8(tmp_path, capsys):
    path = tmp_path / "graph.txt"
    path.write_bytes(b"a b\n\xff\xfe c\n")
    assert main(["metrics", str(path)]) == EXIT_CONFIG
    assert ":2:" in capsys.readouterr().err


def test_metrics_of_missing_file(tmp_path):
    assert main(["metrics", str(tmp_path / "missing.txt")]) == EXIT_CONFIG


def test_run_writes_every_artifact(tmp_path, capsys):
    out = tmp_path / "run"
    assert main(er_args(out)) == 0

    for name in ARTIFACTS:
        assert (out / name).exists(), name

    summary = json.loads(capsys.readouterr().out)
    assert summary["final_robustness"] == {"strategic": 1.0, "budget": 1.0}

    series = load_series(out / "metrics.csv")
    assert series.select("restore", "strategic")[-1].robustness_index == 1.0
    assert series.select("attack")[-1].robustness_index < 1.0


def test_run_is_reproducible(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(er_args(a)) == 0
    assert main(er_args(b)) == 0

    for name in ARTIFACTS:
        assert (a / name).read_bytes() == (b / name).read_bytes(), name


def test_run_without_seed_fails(tmp_path, capsys):
    args = ["run", "--gen", "er", "--n", "20", "--p", "0.2", "--q", "3", "--out", str(tmp_path)]
    assert main(args) == EXIT_CONFIG
    assert "seed" in capsys.readouterr().err


def test_run_with_two_sources_fails(tmp_path):
    dataset = tmp_path / "g.txt"
    dataset.write_text("0 1\n")
    args = [*er_args(tmp_path / "out"), "--dataset", str(dataset)]
    assert main(args) == EXIT_CONFIG


def test_attack_cap_exit_code(tmp_path):
    args = [
        "run", "--gen", "er", "--n", "30", "--p", "1.0", "--q", "5",
        "--max-removals", "0", "--seed", "1", "--out", str(tmp_path),
    ]  # fmt: skip
    assert main(args) == EXIT_ATTACK_FAILED


def test_run_on_dataset(tmp_path):
    dataset = tmp_path / "ring.txt"
    dataset.write_text("".join(f"{k} {(k + 1) % 12}\n" for k in range(12)))
    out = tmp_path / "out"

    args = [
        "run", "--dataset", str(dataset), "--q", "3", "--attack", "targeted",
        "--mechanism", "strategic", "--tiebreak", "deterministic",
        "--seed", "2", "--out", str(out),
    ]  # fmt: skip
    assert main(args) == 0
    assert (out / "rewire_plan_strategic.csv").exists()
    assert not (out / "budget_schedule.csv").exists()


def test_config_file_and_flag_override(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text(
        "# small run\ngen = er\nn = 40\np = 0.1\nq = 3\nseed = 5\nmechanism = budget\n"
    )
    out = tmp_path / "out"

    assert main(["run", "--config", str(config), "--mechanism", "strategic", "--out", str(out)]) == 0
    assert (out / "rewire_plan_strategic.csv").exists()
    assert not (out / "rewire_plan_budget.csv").exists()


def test_env_out_overrides_flag(tmp_path, monkeypatch):
    monkeypatch.setenv("NETMEND_OUT", str(tmp_path / "env"))
    assert main(er_args(tmp_path / "flag")) == 0
    assert (tmp_path / "env" / "metrics.csv").exists()
    assert not (tmp_path / "flag").exists()


def test_repeats_write_one_directory_per_seed(tmp_path):
    out = tmp_path / "out"
    assert main([*er_args(out), "--repeats", "2", "--mechanism", "strategic"]) == 0
    assert (out / "seed_7" / "metrics.csv").exists()
    assert (out / "seed_8" / "metrics.csv").exists()


def test_compare_random_adds_baseline(tmp_path, capsys):
    out = tmp_path / "out"
    assert main([*er_args(out), "--mechanism", "strategic", "--compare-random"]) == 0

    assert (out / "rewire_plan_random.csv").exists()
    assert (out / "graph_restored_random.txt").exists()
    summary = json.loads(capsys.readouterr().out)
    assert summary["final_robustness"] == {"strategic": 1.0, "random": 1.0}

    series = load_series(out / "metrics.json")
    random_rows = series.select("restore", "random")
    strategic_rows = series.select("restore", "strategic")
    assert random_rows[0] == strategic_rows[0].model_copy(update={"mechanism": "random"})
    assert random_rows[-1].robustness_index == 1.0
    assert len(random_rows) == len(strategic_rows)


def test_linked_cycles_match_golden_files(tmp_path):
    out = tmp_path / "out"
    args = [
        "run", "--dataset", str(GOLDEN / "network.txt"),
        "--transactions", str(GOLDEN / "transactions.csv"),
        "--q", "4", "--attack", "targeted", "--mechanism", "strategic",
        "--threshold", "n", "--tiebreak", "deterministic",
        "--seed", "20", "--out", str(out),
    ]  # fmt: skip
    assert main(args) == 0

    for name in ("attack_trace.csv", "rewire_plan_strategic.csv", "metrics.csv"):
        assert (out / name).read_bytes() == (GOLDEN / name).read_bytes(), name
