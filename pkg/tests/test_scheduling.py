#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pandas as pd
import pytest

import twophase.scheduling.search as search_module
from twophase.cross_entropy import CeConfig, face_joint_optimize
from twophase.cross_entropy.face import HISTORY_COLUMNS
from twophase.diffusion import DecayFunction, MonteCarloConfig, estimate_spread
from twophase.errors import CapacityError
from twophase.graph import instance_family
from twophase.scheduling import (
    GRID_COLUMNS,
    PREFIX_COLUMNS,
    PlanEvaluator,
    SearchConfig,
    estimate_D,
    exhaustive_grid,
    face_joint_schedule,
    golden_section_k1,
    prefix_split,
    rmax_split,
    sequential_d_search,
)
from twophase.selection import FunctionObjective


def by_size(values):
    return FunctionObjective(lambda nodes: values[len(nodes)])


def test_search_config():
    config = SearchConfig(45, 4)

    assert config.k1_grid_step == 2
    assert config.k1_grid()[:3] == [0, 2, 4]
    assert config.k1_grid()[-1] == 45
    assert config.objective_mode == "sigma"
    assert SearchConfig(4, 2, DecayFunction.exponential(0.5)).objective_mode == "nu"
    assert SearchConfig(4, 2, DecayFunction.exponential(1.0)).effective_decay is None
    assert SearchConfig(4, 2, DecayFunction.exponential(0.5), objective_mode="sigma").effective_decay is None
    with pytest.raises(ValueError):
        SearchConfig(4, 2, objective_mode="nu")
    with pytest.raises(ValueError):
        SearchConfig(4, 2, patience=0)


def test_plan_evaluator():
    calls = []

    def value(k1, d):
        calls.append((k1, d))
        return float(k1 + d)

    evaluate = PlanEvaluator(value, 4)
    assert evaluate(4, 3).mean == 4.0
    assert evaluate(4, 0).mean == 4.0
    assert evaluate(1, 2).stderr == 0.0
    assert calls == [(4, 0), (1, 2)]
    assert evaluate.evaluations == 2
    assert list(evaluate.history().columns) == GRID_COLUMNS
    with pytest.raises(ValueError):
        evaluate(5, 0)
    with pytest.raises(TypeError):
        PlanEvaluator(lambda k1, d: "high", 4)(1, 1)


def test_golden_section_on_unimodal_split():
    config = SearchConfig(10, 2)
    k1, d, value, history = golden_section_k1(
        None, config, lambda k1, d: -((k1 - 3) ** 2), return_history=True
    )

    assert (k1, d) == (3, 2)
    assert value.mean == 0.0
    assert len(history) < 11


def test_delay_search_stops_after_patience():
    config = SearchConfig(10, 6, DecayFunction.exponential(0.5), patience=2)
    evaluate = PlanEvaluator(lambda k1, d: -((d - 1) ** 2), 10)
    d, value = sequential_d_search(None, 2, config, evaluate)

    assert d == 1
    assert value.mean == 0.0
    assert list(evaluate.history()["d"]) == [0, 1, 2, 3]


def test_delay_search_without_decay_waits():
    config = SearchConfig(10, 6)

    assert sequential_d_search(None, 2, config, lambda k1, d: float(d))[0] == 6
    assert sequential_d_search(None, 10, config, lambda k1, d: float(d))[0] == 0


def test_grid_ties():
    flat = exhaustive_grid(None, SearchConfig(4, 2), lambda k1, d: 1.0)

    assert flat.best == (0, 2)
    assert len(flat.entries) == 4 * 3 + 1
    assert list(flat.entries.columns) == GRID_COLUMNS

    decayed = exhaustive_grid(
        None, SearchConfig(4, 2, DecayFunction.exponential(0.5)), lambda k1, d: 1.0
    )
    assert decayed.best == (0, 0)


def test_grid_evaluation_budget():
    with pytest.raises(CapacityError):
        exhaustive_grid(None, SearchConfig(4, 2, eval_budget=5), lambda k1, d: 1.0)


def test_grid_result_output(tmp_path):
    result = exhaustive_grid(None, SearchConfig(2, 1), lambda k1, d: float(k1))
    path = str(tmp_path / "grid.csv")
    result.to_csv(path)

    assert result.as_dict() == {
        "best_k1": 2,
        "best_d": 0,
        "spread": 2.0,
        "stderr": 0.0,
        "cells": 5,
    }
    assert list(pd.read_csv(path).columns) == GRID_COLUMNS


def test_oracle_schedules_agree(example1):
    config = SearchConfig(2, 3)
    grid = exhaustive_grid(example1, config, "oracle")
    k1, d, value = golden_section_k1(example1, config, "oracle")

    assert grid.best == (1, 3)
    assert (k1, d) == grid.best
    assert value.mean == pytest.approx(3.84)
    assert grid.value.mean == pytest.approx(3.84)
    assert grid.entries["mean"].max() == pytest.approx(3.84)


def test_oracle_delay_search(example1):
    d, value = sequential_d_search(example1, 1, SearchConfig(2, 3), "oracle")

    assert d == 3
    assert value.mean == pytest.approx(3.84)

    decayed = SearchConfig(2, 3, DecayFunction.exponential(0.5))
    d, _ = sequential_d_search(example1, 1, decayed, "oracle")
    assert 0 <= d <= 3


def test_pipeline_grid_cell(example1):
    mc = MonteCarloConfig(single_phase_sims=500, phase1_sims=30, phase2_sims=5, master_seed=3)
    grid = exhaustive_grid(example1, SearchConfig(2, 1), "gdd", mc)
    last = grid.entries.iloc[-1]

    assert (last["k1"], last["d"]) == (2, 0)
    assert last["mean"] == estimate_spread(example1, [0, 1], mc).mean


def test_pipeline_needs_monte_carlo_config(example1):
    with pytest.raises(ValueError):
        exhaustive_grid(example1, SearchConfig(2, 1), "gdd")


def test_estimate_horizon(chain):
    config = MonteCarloConfig(phase1_sims=10, master_seed=0)

    assert estimate_D(chain(6), 1, config) == 7
    assert estimate_D(chain(6), 1, config, margin=0) == 5
    assert estimate_D(chain(6, p=0.0), 1, config) == 2


def test_prefix_split(example1):
    k1, seeds, prefixes = prefix_split(
        example1, 3, by_size([0.0, 5.0, 7.0, 6.0]), return_prefixes=True
    )

    assert k1 == 2
    assert len(seeds) == 2
    assert seeds.value.mean == 7.0
    assert list(prefixes.columns) == PREFIX_COLUMNS
    assert list(prefixes["k1"]) == [0, 1, 2, 3]


def test_prefix_split_prefers_smaller_prefix(example1):
    k1, _ = prefix_split(example1, 3, by_size([0.0, 5.0, 5.0, 5.0]))

    assert k1 == 1


def test_rmax_split(example1):
    k1, seeds = rmax_split(example1, 3, by_size([0.0, 5.0, 7.0, 6.0]), samples=40, seed=1)

    assert k1 == len(seeds) == 2


def test_face_joint_schedule(example1):
    k1, d, seeds, history = face_joint_schedule(
        example1,
        SearchConfig(2, 3),
        "oracle",
        ce_config=CeConfig(n_min=40, n_elite=4),
        seed=5,
        return_history=True,
    )

    assert 1 <= k1 <= 2
    assert 0 <= d <= 3
    assert len(seeds) == k1
    assert list(history.columns) == HISTORY_COLUMNS


def test_face_joint_schedule_needs_monte_carlo_config(example1):
    with pytest.raises(ValueError):
        face_joint_schedule(example1, SearchConfig(2, 3), "gdd")


def test_face_joint_schedule_without_delay_is_single_phase(example1):
    for seed in range(4):
        k1, d, seeds = face_joint_schedule(
            example1,
            SearchConfig(2, 0),
            "oracle",
            ce_config=CeConfig(n_min=20, n_elite=4),
            seed=seed,
        )

        assert (k1, d) == (2, 0)
        assert len(seeds) == 2


def test_face_joint_optimize_without_delay(example1):
    plans = []

    def plan_value(s1, d, k2):
        plans.append((len(s1), d, k2))
        return float(len(s1))

    k1, d, _ = face_joint_optimize(example1, 2, 0, plan_value, CeConfig(n_min=10, n_elite=2))

    assert (k1, d) == (2, 0)
    assert set(plans) == {(2, 0, 0)}


class RecordingObjective(object):
    created = []

    def __init__(self, graph, d, k2, config, decay=None, second_selector="gdd"):
        RecordingObjective.created.append((config, second_selector))

    def plan_value(self, s1, d, k2):
        return 1.0


def test_face_joint_schedule_passes_second_phase_settings(example1, monkeypatch):
    monkeypatch.setattr(search_module, "TwoPhaseObjective", RecordingObjective)
    RecordingObjective.created = []
    mc = MonteCarloConfig(single_phase_sims=100, phase1_sims=20, phase2_sims=5)
    scoring = mc.replace(phase1_sims=8, phase2_sims=2)

    face_joint_schedule(
        example1,
        SearchConfig(2, 2),
        "gdd",
        mc,
        CeConfig(n_min=10, n_elite=2, max_iterations=2),
        second_selector="greedy",
        farsighted_config=scoring,
    )
    assert RecordingObjective.created == [(scoring, "greedy")]

    RecordingObjective.created = []
    face_joint_schedule(
        example1, SearchConfig(2, 2), "gdd", mc, CeConfig(n_min=10, n_elite=2, max_iterations=2)
    )
    assert RecordingObjective.created == [(mc, "gdd")]
    with pytest.raises(ValueError):
        face_joint_schedule(example1, SearchConfig(2, 2), "gdd", mc, second_selector="best")


def test_golden_section_matches_grid_on_random_graphs():
    for graph in instance_family(10, max_nodes=5, max_edges=7, seed=8):
        config = SearchConfig(2, 2)
        grid = exhaustive_grid(graph, config, "oracle")
        k1, d, value = golden_section_k1(graph, config, "oracle")

        assert (k1, d) == grid.best
        assert value.mean == pytest.approx(grid.value.mean)
