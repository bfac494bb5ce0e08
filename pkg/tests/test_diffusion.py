#!/usr/bin/env python
# -*- coding: utf-8 -*-

import numpy as np
import pandas as pd
import pytest

from twophase import streams
from twophase.diffusion import (
    DecayFunction,
    MonteCarloConfig,
    Observation,
    SpreadEstimate,
    checked_decay,
    dump_trace,
    estimate_spread,
    estimate_temporal_spread,
    observe,
    observe_at,
    residual_graph,
    rollout,
    simulate_ic,
    spread_progression,
    to_residual_ids,
)
from twophase.graph import InfluenceGraph
from twophase.oracle import exact_nu, exact_sigma


def test_certain_chain(chain):
    trace = simulate_ic(chain(5), [0], np.random.default_rng(0))

    assert list(trace.activation_time) == [0, 1, 2, 3, 4]
    assert trace.final_active_count == 5
    assert trace.last_step == 4
    assert list(trace.new_activations()) == [1, 1, 1, 1, 1]


def test_blocked_edges():
    graph = InfluenceGraph(3, [(0, 1, 0.0), (1, 2, 1.0)])
    trace = simulate_ic(graph, [0], np.random.default_rng(0))

    assert list(trace.activation_time) == [0, -1, -1]
    assert trace.value() == 1.0


def test_stop_at(chain):
    trace = simulate_ic(chain(5), [0], np.random.default_rng(0), stop_at=2)

    assert list(trace.activation_time) == [0, 1, 2, -1, -1]
    assert trace.stop_at == 2


def test_observe_at(chain):
    trace, observation = observe(chain(6), [0], 2, np.random.default_rng(0))

    assert observation.already == (0, 1)
    assert observation.recent == (2,)
    assert observation.active == (0, 1, 2)
    assert observation == Observation(2, [1, 0], [2])
    with pytest.raises(ValueError):
        observe_at(trace, 3)


def test_observation_sets_disjoint():
    with pytest.raises(ValueError):
        Observation(1, [0, 1], [1])


def test_decayed_value(chain):
    trace = simulate_ic(chain(3), [0], np.random.default_rng(0))

    assert trace.value(DecayFunction.exponential(0.5)) == pytest.approx(1.75)
    assert trace.value(DecayFunction.exponential(0.5), offset=1) == pytest.approx(0.875)
    assert trace.value(DecayFunction.constant_one()) == 3.0


def test_decay_function():
    assert DecayFunction.exponential(1.0).is_constant
    assert checked_decay(DecayFunction.exponential(1.0)) is None
    assert list(DecayFunction.exponential(0.5).weights(3, offset=1)) == [0.5, 0.25, 0.125]
    with pytest.raises(ValueError):
        DecayFunction.exponential(1.5)
    with pytest.raises(ValueError):
        DecayFunction("linear", 0.5)


def test_residual_graph(example1):
    residual, kept = residual_graph(example1, [0])

    assert residual.labels == ("B", "C", "D")
    assert to_residual_ids(kept, [1, 3]) == [0, 2]
    with pytest.raises(ValueError):
        to_residual_ids(kept, [0])


def test_dump_trace(tmp_path, example1):
    trace = simulate_ic(example1, [1], streams.stream(7, streams.SINGLE_PHASE, 0))
    path = str(tmp_path / "trace.csv")
    dump_trace(trace, path, example1.labels)
    frame = pd.read_csv(path)

    assert list(frame.columns) == ["node_id", "label", "activation_time"]
    assert list(frame["label"]) == ["A", "B", "C", "D"]
    assert frame["activation_time"][1] == 0
    assert frame["activation_time"][0] == -1


def test_spread_close_to_exact(example1):
    config = MonteCarloConfig(single_phase_sims=4000, master_seed=3)
    for seeds in ([0], [1], [0, 1]):
        estimate = estimate_spread(example1, seeds, config)
        assert abs(estimate.mean - exact_sigma(example1, seeds).value) < max(4 * estimate.stderr, 0.05)


def test_temporal_spread_close_to_exact(example1):
    config = MonteCarloConfig(single_phase_sims=4000, master_seed=3)
    decay = DecayFunction.exponential(0.5)
    estimate = estimate_temporal_spread(example1, [0], decay, config)

    assert exact_nu(example1, [0], decay).value == pytest.approx(1.4625)
    assert abs(estimate.mean - 1.4625) < max(4 * estimate.stderr, 0.05)


def test_nu_equals_sigma_without_decay(example1):
    config = MonteCarloConfig(single_phase_sims=500, master_seed=9)
    sigma = estimate_spread(example1, [0], config)
    nu = estimate_temporal_spread(example1, [0], DecayFunction.exponential(1.0), config)

    assert sigma == nu


def test_same_seed_same_values(example1):
    config = MonteCarloConfig(single_phase_sims=300, master_seed=21)
    first, _ = rollout(example1, [0], config, 300)
    second, _ = rollout(example1, [0], config, 300)

    assert np.array_equal(first, second)


def test_worker_count_does_not_change_values(example1):
    config = MonteCarloConfig(single_phase_sims=300, master_seed=21)
    serial, serial_progression = rollout(example1, [0], config, 300)
    parallel, parallel_progression = rollout(example1, [0], config.replace(workers=2), 300)

    assert np.array_equal(serial, parallel)
    assert np.array_equal(serial_progression.sums()[0], parallel_progression.sums()[0])


def test_progression_sums_to_spread(example1):
    config = MonteCarloConfig(single_phase_sims=1000, master_seed=5)
    estimate, frame = spread_progression(example1, [0], config)

    assert list(frame.columns) == ["t", "new_activations_mean", "stderr"]
    assert frame["new_activations_mean"].sum() == pytest.approx(estimate.mean)
    assert frame["new_activations_mean"][0] == 1.0


def test_empty_seed_set(example1):
    config = MonteCarloConfig(single_phase_sims=50, master_seed=5)

    assert estimate_spread(example1, [], config).mean == 0.0


def test_spread_estimate():
    estimate = SpreadEstimate.from_values([1.0, 2.0, 3.0])

    assert estimate.mean == 2.0
    assert estimate.stderr == pytest.approx(np.sqrt(1.0 / 3.0))
    assert estimate.samples == 3
    assert SpreadEstimate.exact(2.5).stderr == 0.0
    with pytest.raises(ValueError):
        SpreadEstimate(-1.0)


def test_monte_carlo_config():
    config = MonteCarloConfig()

    assert config.master_seed >= 0
    assert config.replace(phase2_sims=7).phase2_sims == 7
    assert config.replace(phase2_sims=7).master_seed == config.master_seed
    with pytest.raises(ValueError):
        MonteCarloConfig(single_phase_sims=0)


def test_spread_agrees_with_exact_on_random_graphs(family):
    config = MonteCarloConfig(single_phase_sims=3000, master_seed=17)
    for graph in family:
        for v in range(graph.n):
            estimate = estimate_spread(graph, [v], config)
            exact = exact_sigma(graph, [v]).value
            assert abs(estimate.mean - exact) <= max(4 * estimate.stderr, 0.05)
