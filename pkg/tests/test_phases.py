#!/usr/bin/env python
# -*- coding: utf-8 -*-

import itertools

import numpy as np
import pytest

from twophase.diffusion import DecayFunction, MonteCarloConfig, estimate_spread, rollout
from twophase.oracle import ExactOracle
from twophase.phases import (
    AGREEMENT_COLUMNS,
    TwoPhaseObjective,
    TwoPhasePlan,
    eval_g,
    eval_h,
    first_phase_objective,
    proxy_agreement,
    rank_agreement,
    run_two_phase,
    two_phase_rollout,
)
from twophase.selection import SpreadObjective

A, B, C, D = 0, 1, 2, 3


def close(estimate, expected):
    return abs(estimate.mean - expected) <= max(4 * estimate.stderr, 0.02)


def test_plan_validation():
    plan = TwoPhasePlan(2, 1, 3, s1=[3, 1])

    assert plan.k == 3
    assert plan.s1 == (1, 3)
    assert plan.as_dict()["second_selector"] == "gdd"
    with pytest.raises(ValueError):
        TwoPhasePlan(1, 1, 1, s1=[0, 1])
    with pytest.raises(ValueError):
        TwoPhasePlan(1, 1, 1, mode="lazy")
    with pytest.raises(ValueError):
        TwoPhasePlan(1, 1, -1)
    with pytest.raises(ValueError):
        TwoPhasePlan(1, 1, 1, selector="pagerank")
    with pytest.raises(TypeError):
        TwoPhasePlan(1, 1, 1, mode=None)


def test_no_second_budget_is_single_phase(example1, mc):
    result = run_two_phase(example1, TwoPhasePlan(1, 0, 0), mc)

    assert result.plan.s1 == (B,)
    assert result.spread == estimate_spread(example1, [B], mc)


def test_empty_first_phase_is_delayed_single_phase(example1, mc):
    values, progression, realized = two_phase_rollout(example1, (), 2, 1, mc, examples=2)
    expected, _ = rollout(example1, [B], mc, mc.single_phase_sims, offset=2)
    frame = progression.to_frame()

    assert np.array_equal(values, expected)
    assert realized == [(B,)]
    assert list(frame["new_activations_mean"][:3]) == [0.0, 0.0, 1.0]


def test_myopic_gdd_plan(example1, mc):
    result = run_two_phase(example1, TwoPhasePlan(1, 1, 3), mc, examples=3)

    assert result.plan.s1 == (B,)
    assert close(result.spread, 3.7)
    assert result.realized_s2_examples == [(A,), (A,), (A,)]
    assert result.progression["new_activations_mean"].sum() == pytest.approx(result.spread.mean)


def test_h_matches_exact_value(example1, mc):
    assert close(eval_h(example1, [A], 1, 1, mc), 3.8)
    assert close(eval_h(example1, [C], 1, 1, mc), 2.9)


def test_decayed_h_matches_exact_value(example1, mc):
    decay = DecayFunction.exponential(0.5)
    expected = ExactOracle(example1).f([A], 1, 1, decay).value

    assert close(eval_h(example1, [A], 1, 1, mc, decay), expected)


def test_unit_decay_changes_nothing(example1, mc):
    plain, _, _ = two_phase_rollout(example1, [A], 1, 1, mc)
    decayed, _, _ = two_phase_rollout(example1, [A], 1, 1, mc, DecayFunction.exponential(1.0))

    assert np.array_equal(plain, decayed)


def test_worker_count_does_not_change_values(example1):
    config = MonteCarloConfig(phase1_sims=40, phase2_sims=5, master_seed=8)
    serial, serial_progression, serial_realized = two_phase_rollout(
        example1, [A], 1, 1, config, examples=40
    )
    parallel, parallel_progression, parallel_realized = two_phase_rollout(
        example1, [A], 1, 1, config.replace(workers=3), examples=40
    )

    assert np.array_equal(serial, parallel)
    assert np.array_equal(serial_progression.sums()[0], parallel_progression.sums()[0])
    assert serial_realized == parallel_realized


def test_realized_second_phase(example1, mc):
    _, _, realized = two_phase_rollout(example1, [A], 1, 1, mc, examples=4)

    assert len(realized) == 4
    assert all(x in [(B,), (C,)] for x in realized)


def test_small_residual_warns(example1):
    config = MonteCarloConfig(phase1_sims=20, phase2_sims=2, master_seed=1)

    with pytest.warns(UserWarning):
        two_phase_rollout(example1, [B], 1, 3, config)


def test_budget_above_node_count(example1, mc):
    with pytest.raises(ValueError):
        run_two_phase(example1, TwoPhasePlan(3, 2, 1), mc)


def test_first_phase_objective(example1, mc):
    assert first_phase_objective(example1, TwoPhasePlan(1, 1, 1), mc) is None

    myopic = first_phase_objective(example1, TwoPhasePlan(1, 1, 1, selector="greedy"), mc)
    assert isinstance(myopic, SpreadObjective)

    farsighted = first_phase_objective(
        example1, TwoPhasePlan(1, 1, 2, mode="farsighted", selector="greedy"), mc
    )
    assert isinstance(farsighted, TwoPhaseObjective)
    assert (farsighted.d, farsighted.k2) == (2, 1)


def test_farsighted_greedy_plan(example1):
    config = MonteCarloConfig(phase1_sims=200, phase2_sims=10, master_seed=2)
    plan = TwoPhasePlan(1, 1, 1, mode="farsighted", selector="greedy")

    assert run_two_phase(example1, plan, config).plan.s1 == (A,)


def test_objective_with_total_budget(example1, mc):
    objective = TwoPhaseObjective(example1, 1, 1, mc, total_budget=2)

    assert objective.evaluate([A, B]) == estimate_spread(example1, [A, B], mc)


def test_result_as_dict(example1, mc):
    summary = run_two_phase(example1, TwoPhasePlan(1, 1, 3), mc, examples=1).as_dict(example1)

    assert summary["plan"]["s1"] == ["B"]
    assert summary["realized_s2_examples"] == [["A"]]
    assert summary["samples"] == mc.phase1_sims * mc.phase2_sims


def test_rank_agreement():
    assert rank_agreement([1.0, 2.0, 3.0], [2.0, 4.0, 9.0]) == pytest.approx(1.0)
    assert rank_agreement([1.0, 2.0, 3.0], [3.0, 2.0, 1.0]) == pytest.approx(-1.0)
    assert rank_agreement([1.0, 1.0], [5.0, 5.0]) == 1.0
    assert rank_agreement([1.0, 1.0], [1.0, 2.0]) == 0.0


def test_proxy_agreement(example1):
    config = MonteCarloConfig(phase1_sims=100, phase2_sims=20, master_seed=6)
    frame, rho, same_best = proxy_agreement(
        example1, [[A], [B], [C], [D]], 1, 1, config, selection_sims=100
    )

    assert list(frame.columns) == AGREEMENT_COLUMNS
    assert len(frame) == 4
    assert rho >= 0.7
    assert same_best


def test_greedy_second_phase_matches_exact_value(example1):
    config = MonteCarloConfig(phase1_sims=100, phase2_sims=10, master_seed=5)
    estimate = eval_g(example1, [A], 1, 1, config, selection_sims=200)

    assert abs(estimate.mean - 3.8) <= max(4 * estimate.stderr, 0.1)


def test_farsighted_objective_uses_reduced_counts(example1, mc):
    plan = TwoPhasePlan(1, 1, 2, mode="farsighted", selector="greedy")
    reduced = mc.replace(phase1_sims=20, phase2_sims=4)

    objective = first_phase_objective(example1, plan, mc, farsighted_config=reduced)
    assert objective.config is reduced
    assert objective.evaluate([A]).samples == 20 * 4
    assert first_phase_objective(example1, plan, mc).config is mc


def test_proxy_agreement_on_random_graphs(family):
    config = MonteCarloConfig(phase1_sims=40, phase2_sims=10, master_seed=8)
    rhos = []
    for graph in family[:4]:
        nodes = range(graph.n)
        candidates = [[v] for v in nodes] + [list(x) for x in itertools.combinations(nodes, 2)]
        _, rho, _ = proxy_agreement(graph, candidates, 1, 1, config, selection_sims=40)
        rhos.append(rho)

    assert sum(rho >= 0.9 for rho in rhos) >= len(rhos) - 1
    assert np.mean(rhos) >= 0.85
