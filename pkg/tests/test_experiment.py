#!/usr/bin/env python
# -*- coding: utf-8 -*-

import io
import json
import os

import pandas as pd
import pytest

from twophase import DATA_PATH
from twophase.cross_entropy.face import HISTORY_COLUMNS
from twophase.errors import DataError
from twophase.experiment import (
    LOCK_NAME,
    ExperimentConfig,
    RunRecord,
    diff_results,
    execute,
    fetch_dataset,
    list_datasets,
    rerun,
    validate_record,
)
from twophase.experiment.cli import EXIT_DATA, EXIT_OK, EXIT_REPRODUCIBILITY, EXIT_USAGE, main
from twophase.graph import file_digest

SMALL_MC = ["--sims", "300", "--phase1_sims", "20", "--phase2_sims", "5", "-r", "4"]


def write(path, text):
    with io.open(str(path), "w", encoding="utf-8") as f:
        f.write(text)
    return str(path)


def read_json(path):
    with io.open(str(path), "r", encoding="utf-8") as f:
        return json.load(f)


def write_json(path, document):
    with io.open(str(path), "w", encoding="utf-8") as f:
        json.dump(document, f)


def test_oracle_command(tmp_path):
    out = str(tmp_path)

    assert main(["oracle", "example1", "--f", "--s1", "A", "--d", "1", "--k2", "1", "-o", out]) == EXIT_OK
    results = read_json(tmp_path / "oracle_record.json")["results"]
    assert results["value"] == pytest.approx(3.8)
    assert {"already": ["A"], "recent": ["B"], "s2": ["C"]} in results["second_phase"]

    assert main(["oracle", "example1", "--sigma", "--seeds", "B", "-o", out]) == EXIT_OK
    assert read_json(tmp_path / "oracle_record.json")["results"]["value"] == pytest.approx(2.7)


def test_oracle_nu_needs_decay(tmp_path):
    assert main(["oracle", "example1", "--nu", "--seeds", "A", "-o", str(tmp_path)]) == EXIT_DATA


def test_select_command(tmp_path):
    args = ["select", "example1", "-a", "gdd", "-k", "1", "-o", str(tmp_path)] + SMALL_MC

    assert main(args) == EXIT_OK
    record = read_json(tmp_path / "select_record.json")
    assert record["results"]["seeds"] == ["B"]
    assert record["results"]["master_seed"] == 4
    assert record["graph_digest"] == file_digest("example1")
    assert os.path.isfile(str(tmp_path / "select_progression.csv"))


def test_fixed_plan_without_second_phase_matches_select(tmp_path):
    select_dir, twophase_dir = tmp_path / "select", tmp_path / "twophase"
    main(["select", "example1", "-k", "1", "-o", str(select_dir)] + SMALL_MC)
    args = ["twophase", "example1", "--k1", "1", "--k2", "0", "--d", "0", "-o", str(twophase_dir)]

    assert main(args + SMALL_MC) == EXIT_OK
    selected = read_json(select_dir / "select_record.json")["results"]
    planned = read_json(twophase_dir / "twophase_record.json")["results"]
    assert planned["plan"]["s1"] == ["B"]
    assert planned["spread"] == selected["spread"]


def test_exhaustive_optimization_writes_grid(tmp_path):
    args = ["twophase", "example1", "-k", "2", "--optimize", "exhaustive", "--d", "2"]

    assert main(args + ["-o", str(tmp_path)] + SMALL_MC) == EXIT_OK
    results = read_json(tmp_path / "twophase_record.json")["results"]
    assert results["plan"]["k1"] + results["plan"]["k2"] == 2
    assert (results["grid_best"]["best_k1"], results["grid_best"]["best_d"]) == (
        results["plan"]["k1"],
        results["plan"]["d"],
    )
    assert os.path.isfile(str(tmp_path / "twophase_grid.csv"))


def test_rerun_reproduces(tmp_path):
    params = {
        "graph": {"source": "example1"},
        "algorithm": "greedy",
        "k": 2,
        "monte_carlo": {"single_phase_sims": 200, "master_seed": 9},
    }
    execute("select", params, str(tmp_path))
    record_path = str(tmp_path / "select_record.json")

    record, results = rerun(record_path)
    assert record.results == results
    assert main(["rerun", record_path]) == EXIT_OK


def test_rerun_detects_changed_results(tmp_path):
    main(["oracle", "example1", "--sigma", "--seeds", "A", "-o", str(tmp_path)])
    record_path = tmp_path / "oracle_record.json"
    document = read_json(record_path)
    document["results"]["value"] += 1.0
    write_json(record_path, document)

    assert main(["rerun", str(record_path)]) == EXIT_REPRODUCIBILITY


def test_rerun_detects_changed_graph(tmp_path):
    graph_path = write(tmp_path / "graph.txt", "A B 0.5\nB C 0.8\nB D 0.9\n")
    main(["oracle", graph_path, "--sigma", "--seeds", "A", "-o", str(tmp_path)])
    write(graph_path, "A B 0.6\nB C 0.8\nB D 0.9\n")

    assert main(["rerun", str(tmp_path / "oracle_record.json")]) == EXIT_REPRODUCIBILITY


def test_transform_command(tmp_path):
    edges = write(tmp_path / "edges.txt", "1 2\n1 3\n1 4\n3 4\n")
    first, second = str(tmp_path / "tv1.txt"), str(tmp_path / "tv2.txt")

    assert main(["transform", edges, "--model", "wc", "--output", first, "-o", str(tmp_path)]) == EXIT_OK
    results = read_json(tmp_path / "transform_record.json")["results"]
    assert (results["nodes"], results["edges"]) == (4, 8)

    for output in (first, second):
        args = ["transform", edges, "--model", "tv", "--seed", "3", "--output", output]
        assert main(args + ["-o", str(tmp_path)]) == EXIT_OK
    assert file_digest(first) == file_digest(second)


def test_transform_rejects_weighted_input(tmp_path):
    edges = write(tmp_path / "weighted.txt", "a b 0.5\n")
    output = str(tmp_path / "out.txt")

    assert main(["transform", edges, "--model", "wc", "--output", output, "-o", str(tmp_path)]) == EXIT_DATA


def test_usage_errors():
    with pytest.raises(SystemExit) as error:
        main(["select"])
    assert error.value.code == EXIT_USAGE

    with pytest.raises(SystemExit) as error:
        main(["twophase", "example1", "--k1", "1"])
    assert error.value.code == EXIT_USAGE


def test_locked_output_dir(tmp_path):
    write(tmp_path / LOCK_NAME, "1")

    assert main(["oracle", "example1", "--sigma", "--seeds", "B", "-o", str(tmp_path)]) == EXIT_DATA
    assert not os.path.isfile(str(tmp_path / "oracle_record.json"))


def test_run_command(tmp_path):
    config = read_json(os.path.join(DATA_PATH, "example-experiment.json"))
    config["monte_carlo"].update({"single_phase_sims": 200, "phase1_sims": 20, "phase2_sims": 5})
    config["output_dir"] = str(tmp_path / "runs")
    path = str(tmp_path / "experiment.json")
    write_json(path, config)

    assert main(["run", "--config", path, "-r", "2"]) == EXIT_OK
    record = read_json(tmp_path / "runs" / "run_record.json")
    assert record["config"]["monte_carlo"]["master_seed"] == 2
    assert record["results"]["plan"]["k1"] == 1
    assert record["results"]["plan"]["d"] == 3


def test_validate_record():
    record = RunRecord("oracle", {}, {"value": 1.0}, 0.5)
    validate_record(record.as_dict())

    bad = record.as_dict()
    bad["command"] = "plot"
    with pytest.raises(DataError):
        validate_record(bad)

    bad = record.as_dict()
    bad["results"]["spread"] = -1.0
    with pytest.raises(DataError):
        validate_record(bad)


def test_diff_results():
    stored = {"spread": 2.5, "seeds": ["A", "B"], "plan": {"k1": 1}}

    assert diff_results(stored, {"spread": 2.5, "seeds": ["A", "B"], "plan": {"k1": 1.0}}) == []
    diffs = diff_results(stored, {"spread": 2.6, "seeds": ["A", "C"], "plan": {}})
    assert len(diffs) == 3
    assert any(line.startswith("plan.k1") for line in diffs)


def test_experiment_config():
    config = ExperimentConfig.from_dict(
        {
            "graph": {"source": "example1"},
            "algorithm": "gdd",
            "budget": 2,
            "split": "optimize",
            "delay": "auto",
            "decay": {"kind": "exponential", "delta": 0.5},
        }
    )

    assert config.k1 is None
    assert config.as_dict()["decay"]["delta"] == 0.5
    with pytest.raises(ValueError):
        ExperimentConfig({"source": "example1"}, "gdd", 2, {"k1": 3}, 1)
    with pytest.raises(ValueError):
        ExperimentConfig({"source": "example1"}, "gdd", 2, "optimize", 1, optimizer="random")
    with pytest.raises(DataError):
        ExperimentConfig({"source": "missing.txt"}, "gdd", 2, "optimize", 1)
    with pytest.raises(DataError):
        ExperimentConfig.from_dict({"graph": {"source": "example1"}, "colour": "red"})


def test_list_datasets(tmp_path):
    frame = list_datasets(str(tmp_path))

    assert {"lm", "nethept"} <= set(frame["name"])
    assert not frame["present"].any()


def test_fetch_dataset(tmp_path):
    source = write(tmp_path / "source.txt", "a b\nb c\n")
    url = (tmp_path / "source.txt").as_uri()
    data_dir = str(tmp_path / "datasets")

    with pytest.raises(DataError):
        fetch_dataset("unknown", data_dir, url)
    with pytest.raises(DataError):
        fetch_dataset("lm", data_dir)
    with pytest.raises(DataError):
        fetch_dataset("lm", data_dir, url, sha256="0" * 64)
    assert not os.path.isfile(os.path.join(data_dir, "lesmis.txt"))

    path, digest = fetch_dataset("lm", data_dir, url, sha256=file_digest(source))
    assert digest == file_digest(source)
    assert os.path.isfile(path)


def test_select_face_writes_history(tmp_path):
    args = ["select", "example1", "-a", "face", "-k", "1", "-o", str(tmp_path)]
    ce = ["--ce_n_min", "10", "--ce_n_elite", "2", "--ce_max_iterations", "3"]

    assert main(args + ce + SMALL_MC) == EXIT_OK
    history = pd.read_csv(str(tmp_path / "select_face_history.csv"))
    assert list(history.columns) == HISTORY_COLUMNS
    record = read_json(tmp_path / "select_record.json")
    assert record["config"]["ce"] == {"n_min": 10, "n_elite": 2, "max_iterations": 3}


def test_heuristic_select_writes_no_history(tmp_path):
    main(["select", "example1", "-a", "gdd", "-k", "1", "-o", str(tmp_path)] + SMALL_MC)

    assert not os.path.isfile(str(tmp_path / "select_face_history.csv"))


def test_farsighted_settings_are_recorded(tmp_path):
    args = ["twophase", "example1", "--k1", "1", "--k2", "1", "--d", "1", "-a", "greedy"]
    args += ["--mode", "farsighted"]
    args += ["--farsighted_phase1_sims", "8", "--farsighted_phase2_sims", "2"]

    assert main(args + ["-o", str(tmp_path)] + SMALL_MC) == EXIT_OK
    config = read_json(tmp_path / "twophase_record.json")["config"]
    assert config["farsighted"] == {"phase1_sims": 8, "phase2_sims": 2}
    assert config["ce"] is None


def test_experiment_config_farsighted_override():
    config = ExperimentConfig(
        {"source": "example1"},
        "greedy",
        2,
        "optimize",
        1,
        monte_carlo={"phase1_sims": 100, "master_seed": 7},
        mode="farsighted",
        farsighted={"phase1_sims": 10},
        ce={"n_min": 12},
    )

    assert config.farsighted_config.phase1_sims == 10
    assert config.farsighted_config.master_seed == 7
    assert config.monte_carlo.phase1_sims == 100
    assert config.ce.n_min == 12
    assert ExperimentConfig.from_dict(config.as_dict()).as_dict() == config.as_dict()
    plain = ExperimentConfig({"source": "example1"}, "gdd", 2, "optimize", 1)
    assert plain.farsighted_config is None
    with pytest.raises(ValueError):
        ExperimentConfig(
            {"source": "example1"}, "gdd", 2, "optimize", 1, farsighted={"master_seed": 3}
        )


def test_face_joint_without_delay(tmp_path):
    args = ["twophase", "example1", "-k", "2", "--optimize", "face-joint", "--d", "0"]
    ce = ["--ce_n_min", "10", "--ce_n_elite", "2", "--ce_max_iterations", "2"]

    assert main(args + ce + ["-o", str(tmp_path)] + SMALL_MC) == EXIT_OK
    plan = read_json(tmp_path / "twophase_record.json")["results"]["plan"]
    assert (plan["k1"], plan["k2"], plan["d"]) == (2, 0, 0)
    assert os.path.isfile(str(tmp_path / "twophase_face_history.csv"))
