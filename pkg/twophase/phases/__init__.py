#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Two-Phase Diffusion

    Spend k1 seeds at step 0, observe the cascade at step d and spend the
    remaining k2 seeds on the residual graph, with the recently activated
    nodes acting as free second-phase seeds.

    License: GNU Affero General Public License v3.0
"""

import pprint
import time

from twophase.diffusion import MonteCarloConfig, SpreadEstimate
from twophase.errors import type_error
from twophase.phases.plan import MODES, TwoPhasePlan, TwoPhaseResult
from twophase.phases.evaluation import (
    TwoPhaseObjective,
    eval_g,
    eval_h,
    two_phase_rollout,
)
from twophase.phases.agreement import AGREEMENT_COLUMNS, proxy_agreement, rank_agreement
from twophase.selection import HEURISTICS, SpreadObjective, select_seeds


def first_phase_objective(graph, plan, config, decay=None, farsighted_config=None):
    """
    The objective the first-phase selector maximizes: sigma when myopic, h
    (or g with a greedy second phase) when farsighted. None for the degree
    heuristics, which take no objective.

    Parameters
    ----------
    graph : InfluenceGraph
    plan : TwoPhasePlan
    config : MonteCarloConfig
    decay : DecayFunction
        only used by the farsighted objective.
    farsighted_config : MonteCarloConfig
        replicate counts of the farsighted objective; defaults to config.

    """

    if plan.selector in HEURISTICS:
        return None
    if plan.mode == "myopic":
        return SpreadObjective(graph, config)

    return TwoPhaseObjective(
        graph,
        plan.d,
        plan.k2,
        config if farsighted_config is None else farsighted_config,
        decay,
        plan.second_selector,
    )


def run_two_phase(
    graph,
    plan,
    config,
    decay=None,
    farsighted_config=None,
    ce_config=None,
    examples=5,
    verbose=False,
):
    """
    Runs a two-phase plan end to end.

    Parameters
    ----------
    graph : InfluenceGraph
    plan : TwoPhasePlan
        when plan.s1 is None the first phase is selected by plan.selector.
    config : MonteCarloConfig
    decay : DecayFunction
        nu-valued result when given.
    farsighted_config : MonteCarloConfig
        reduced replicate counts for the farsighted first-phase objective.
    ce_config : CeConfig
        FACE settings of either phase.
    examples : int
        number of realized second-phase sets to keep.
    verbose : bool
        Verbosity.

    Returns
    -------
    result : TwoPhaseResult
        holds a copy of the plan with s1 filled in.

    """

    if not isinstance(plan, TwoPhasePlan):
        raise type_error("plan", TwoPhasePlan, type(plan))
    if not isinstance(config, MonteCarloConfig):
        raise type_error("config", MonteCarloConfig, type(config))
    if plan.k > graph.n:
        raise ValueError(
            "Plan budget k1 + k2 = {} exceeds the {} nodes of the graph.".format(plan.k, graph.n)
        )

    start_time = time.time()
    s1 = plan.s1
    if s1 is None:
        objective = first_phase_objective(graph, plan, config, decay, farsighted_config)
        s1 = select_seeds(
            graph,
            plan.selector,
            plan.k1,
            objective,
            seed=config.master_seed,
            ce_config=ce_config,
        ).nodes
    selection_time = time.time() - start_time

    executed = TwoPhasePlan(
        plan.k1, plan.k2, plan.d, s1, plan.mode, plan.selector, plan.second_selector
    )
    values, progression, realized = two_phase_rollout(
        graph,
        s1,
        plan.d,
        plan.k2,
        config,
        decay,
        plan.second_selector,
        examples=examples,
    )
    result = TwoPhaseResult(
        executed, SpreadEstimate.from_values(values), progression.to_frame(), realized
    )

    if verbose:
        results = result.as_dict(graph)
        results["selection time"] = "{:.4f} s".format(selection_time)
        results["total time"] = "{:.4f} s".format(time.time() - start_time)
        print("\n")
        print("Two-Phase Diffusion complete!")
        pprint.pprint(results)
        print("\n")

    return result
