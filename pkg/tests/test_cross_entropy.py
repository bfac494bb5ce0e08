#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np
import pytest

from twophase.cross_entropy import (
    CeConfig,
    CeDistribution,
    face_joint_optimize,
    face_select,
    init_uniform,
    init_weighted,
    redistribute,
)
from twophase.cross_entropy.face import HISTORY_COLUMNS
from twophase.graph import instance_family
from twophase.oracle import ExactOracle
from twophase.selection import ExactSpreadObjective


def test_redistribute_clamps_and_keeps_total():
    probs = redistribute([3.0, 1.0, 0.0, 0.0], 2)

    assert probs == pytest.approx([1.0, 1.0, 0.0, 0.0])
    assert probs.sum() == pytest.approx(2.0)


def test_redistribute_spreads_surplus():
    probs = redistribute([8.0, 1.0, 1.0, 2.0], 3)

    assert probs.max() <= 1.0
    assert probs.sum() == pytest.approx(3.0)
    assert probs[0] == 1.0
    assert probs[1] == pytest.approx(probs[2])
    assert probs[3] == pytest.approx(2 * probs[1])


def test_redistribute_zero_weights():
    assert redistribute([0.0, 0.0, 0.0, 0.0], 2) == pytest.approx([0.5] * 4)
    with pytest.raises(ValueError):
        redistribute([1.0, -1.0], 1)
    with pytest.raises(ValueError):
        redistribute([1.0, 1.0], 3)


def test_initial_distributions(example1):
    assert init_uniform(4, 1).node_probs == pytest.approx([0.25] * 4)

    weighted = init_weighted(example1, 2).node_probs
    assert weighted.sum() == pytest.approx(2.0)
    assert np.argmax(weighted) == 1


def test_sample_set_has_exact_size():
    distribution = CeDistribution([0.9, 0.9, 0.9, 0.1, 0.0])
    rng = np.random.default_rng(0)
    for size in range(6):
        assert len(distribution.sample_set(size, rng)) == size
    assert list(CeDistribution([1.0, 0.0, 1.0]).sample_set(2, rng)) == [0, 2]


def test_smoothing_and_degeneracy():
    old = CeDistribution([0.5, 0.5])
    new = old.smoothed(CeDistribution([1.0, 0.0]), 0.6)

    assert new.node_probs == pytest.approx([0.8, 0.2])
    assert not new.is_degenerate()
    assert CeDistribution([0.995, 0.0]).is_degenerate(0.01)


def test_config_resolved():
    config = CeConfig().resolved(10)

    assert (config.n_min, config.n_max, config.n_elite) == (10, 200, 3)
    with pytest.raises(ValueError):
        CeConfig(alpha=0.0)
    with pytest.raises(ValueError):
        CeConfig(n_min=5, n_elite=6).resolved(10)
    with pytest.raises(ValueError):
        CeConfig(init="random")


def test_face_finds_exact_optimum():
    found = 0
    graphs = list(instance_family(10, max_nodes=8, max_edges=10, seed=7, min_nodes=6))
    for i, graph in enumerate(graphs):
        objective = ExactSpreadObjective(graph)
        _, optimum = objective.oracle.best_sigma(2)
        seeds = face_select(graph, 2, objective, CeConfig(n_min=20), seed=i)
        if seeds.value.mean >= optimum.value - 1e-9:
            found += 1

    assert found >= 9


def test_face_history(example1):
    seeds, history = face_select(
        example1, 1, ExactSpreadObjective(example1), seed=2, return_history=True
    )

    assert list(history.columns) == HISTORY_COLUMNS
    assert list(history["iter"]) == list(range(1, len(history) + 1))
    assert history["best"].is_monotonic_increasing
    assert history["best"].iloc[-1] == pytest.approx(seeds.value.mean)


def test_face_preselected(example1):
    seeds = face_select(
        example1, 1, ExactSpreadObjective(example1), CeConfig(n_min=20), preselected=[1]
    )

    assert 1 not in seeds
    assert seeds.nodes == (0,)


def test_joint_optimization_reaches_exact_optimum(example1):
    oracle = ExactOracle(example1)
    budget, max_delay = 2, 3
    optimum = oracle.best_sigma(budget)[1].value
    for d in range(1, max_delay + 1):
        optimum = max(optimum, oracle.best_f(1, d, 1)[1].value)

    def plan_value(s1, d, k2):
        return oracle.f(s1, d, k2).value

    config = CeConfig(n_min=80, n_elite=4)
    found = 0
    for seed in range(10):
        k1, d, seeds = face_joint_optimize(
            example1, budget, max_delay, plan_value, config, seed=seed
        )
        assert len(seeds) == k1
        assert 0 <= d <= max_delay
        if d == 0:
            assert k1 == budget
        if float(seeds.value) >= optimum - 1e-9:
            found += 1

    assert found >= 9
