#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Two-phase evaluation

    Nested Monte-Carlo estimates of the two-phase objective. Each outer
    replicate i runs the first phase from S1 up to step d on stream
    (seed, FIRST_PHASE, i), observes the already and recently activated
    nodes, deletes the already activated ones and picks the second-phase
    set on the residual graph with the recently activated nodes preselected.
    Each inner replicate j then continues the cascade from recent + S2 on
    stream (seed, SECOND_PHASE, i, j).

    -   h picks the second phase with GDD.
    -   g picks it greedily, with Monte-Carlo sigma on the residual graph.

    License: GNU Affero General Public License v3.0
"""

import warnings
from multiprocessing import Pool

import numpy as np

from twophase import streams
from twophase.diffusion import (
    MonteCarloConfig,
    Progression,
    SpreadEstimate,
    checked_decay,
    observe_at,
    residual_graph,
    rollout,
    simulate_ic,
    to_residual_ids,
)
from twophase.errors import type_error
from twophase.selection import HEURISTICS, Objective, SpreadObjective, select_seeds
from twophase.utils import checked_int, node_tuple


def _second_phase(graph, recent, budget, selector, config, selection_sims):
    """Picks `budget` seeds on `graph` with `recent` preselected."""

    objective = None
    if selector not in HEURISTICS:
        objective = SpreadObjective(graph, config, sims=selection_sims)

    seeds = select_seeds(
        graph, selector, budget, objective, preselected=recent, seed=config.master_seed
    )
    return seeds.nodes


def _first_phase_value(trace, d, decay):
    """Value and per-step counts of the nodes activated before step d."""

    times = trace.activation_time
    times = times[(times >= 0) & (times < d)]
    counts = np.bincount(times, minlength=d).astype(np.int64)
    if decay is None:
        return float(len(times)), counts

    return float(np.sum(decay(times))), counts


def _outer_chunk(args):
    """Runs outer replicates [start, stop) with all of their inner replicates."""

    graph, s1, d, k2, config, selector, selection_sims, decay, start, stop, keep = args
    inner = config.phase2_sims
    serial = config.replace(workers=1)
    values = np.empty((stop - start) * inner, dtype=np.float64)
    progression = Progression(graph.n + d)
    examples = []
    shortfalls = 0

    for i in range(start, stop):
        trace = simulate_ic(
            graph, s1, streams.stream(config.master_seed, streams.FIRST_PHASE, i), stop_at=d
        )
        observation = observe_at(trace, d)
        residual, kept = residual_graph(graph, observation.already)
        recent = to_residual_ids(kept, observation.recent)

        budget = min(k2, residual.n - len(recent))
        if budget < k2:
            shortfalls += 1
        s2 = _second_phase(residual, recent, budget, selector, serial, selection_sims)
        if i < keep:
            examples.append(tuple(sorted(int(kept[v]) for v in s2)))

        first_value, first_counts = _first_phase_value(trace, d, decay)
        seeds = tuple(recent) + tuple(s2)
        for j in range(inner):
            follow = simulate_ic(
                residual, seeds, streams.stream(config.master_seed, streams.SECOND_PHASE, i, j)
            )
            values[(i - start) * inner + j] = first_value + follow.value(decay, d)
            progression.add(first_counts)
            progression.add(follow.new_activations(), d)
            progression.close_replicate()

    return values, progression, examples, shortfalls


def two_phase_rollout(
    graph,
    s1,
    d,
    k2,
    config,
    decay=None,
    second_selector="gdd",
    selection_sims=None,
    examples=0,
):
    """
    Simulates the two-phase process of a first-phase set.

    Parameters
    ----------
    graph : InfluenceGraph
    s1 : iterable
        the first-phase set.
    d : int
        the delay.
    k2 : int
        the second-phase budget.
    config : MonteCarloConfig
        phase1_sims outer and phase2_sims inner replicates.
    decay : DecayFunction
        nu-valued outcomes when given; second-phase activations t2 steps
        after the observation are weighted by decay(d + t2).
    second_selector : str
        the second-phase algorithm.
    selection_sims : int
        replicates per objective evaluation of an objective-driven second
        phase; defaults to config.phase2_sims.
    examples : int
        number of realized second-phase sets to return.

    Returns
    -------
    values : ndarray
        one outcome per (outer, inner) replicate, outer index major.
    progression : Progression
    realized : list
        second-phase sets of the first outer replicates, in original ids.

    Notes
    -----
    With k2 = 0 this is a single-phase run of s1 on the single-phase streams.
    With an empty s1 the observation is empty whatever happens, so the
    second-phase set is chosen once on the full graph and run on the
    single-phase streams from step d.

    """

    if not isinstance(config, MonteCarloConfig):
        raise type_error("config", MonteCarloConfig, type(config))
    s1 = node_tuple(s1)
    graph.check_nodes(s1)
    d = checked_int("d", d, low=0)
    k2 = checked_int("k2", k2, low=0)
    weighting = checked_decay(decay)
    selection_sims = (
        config.phase2_sims
        if selection_sims is None
        else checked_int("selection_sims", selection_sims, low=1)
    )
    examples = checked_int("examples", examples, low=0)

    if k2 == 0:
        values, progression = rollout(graph, s1, config, config.single_phase_sims, weighting)
        return values, progression, [() for _ in range(min(examples, 1))]

    if not s1:
        budget = min(k2, graph.n)
        if budget < k2:
            warnings.warn(
                "Only {} nodes for a second-phase budget of {}; all of them are seeded.".format(
                    budget, k2
                )
            )
        s2 = _second_phase(graph, (), budget, second_selector, config, selection_sims)
        values, progression = rollout(
            graph, s2, config, config.single_phase_sims, weighting, offset=d
        )
        return values, progression, [tuple(sorted(s2)) for _ in range(min(examples, 1))]

    outer = config.phase1_sims
    workers = min(config.workers, outer)
    bounds = np.linspace(0, outer, workers + 1).astype(int)
    chunks = [
        (
            graph,
            s1,
            d,
            k2,
            config,
            second_selector,
            selection_sims,
            weighting,
            bounds[i],
            bounds[i + 1],
            examples,
        )
        for i in range(workers)
    ]
    if workers == 1:
        results = [_outer_chunk(chunks[0])]
    else:
        with Pool(workers) as pool:
            results = pool.map(_outer_chunk, chunks)

    progression = Progression(graph.n + d)
    realized = []
    shortfalls = 0
    for _, chunk_progression, chunk_examples, chunk_shortfalls in results:
        progression.merge(chunk_progression)
        realized.extend(chunk_examples)
        shortfalls += chunk_shortfalls
    if shortfalls:
        warnings.warn(
            "The residual graph had fewer than {} inactive nodes in {} of {} observations; "
            "all remaining nodes were seeded.".format(k2, shortfalls, outer)
        )

    return np.concatenate([x[0] for x in results]), progression, realized


def eval_h(graph, s1, d, k2, config, decay=None):
    """
    h(S1): the two-phase value with a GDD second phase.

    Parameters
    ----------
    graph : InfluenceGraph
    s1 : iterable
    d : int
    k2 : int
    config : MonteCarloConfig
    decay : DecayFunction

    Returns
    -------
    estimate : SpreadEstimate

    """

    values, _, _ = two_phase_rollout(graph, s1, d, k2, config, decay, "gdd")
    return SpreadEstimate.from_values(values)


def eval_g(graph, s1, d, k2, config, decay=None, selection_sims=None):
    """
    g(S1): the two-phase value with a greedy second phase on Monte-Carlo
    sigma. Each second-phase pick costs n * selection_sims cascades per
    outer replicate, so this is meant for small graphs.
    """

    values, _, _ = two_phase_rollout(
        graph, s1, d, k2, config, decay, "greedy", selection_sims=selection_sims
    )
    return SpreadEstimate.from_values(values)


class TwoPhaseObjective(Objective):
    """
    The two-phase value of first-phase sets, as a selection objective.

    Parameters
    ----------
    graph : InfluenceGraph
    d : int
        the delay.
    k2 : int
        the second-phase budget.
    config : MonteCarloConfig
        may use fewer replicates than the final evaluation.
    decay : DecayFunction
    second_selector : str
        'gdd' for h, 'greedy' for g.
    total_budget : int
        when given, a set S is evaluated with k2 = total_budget - |S|.
    selection_sims : int
        replicates per evaluation of an objective-driven second phase.

    """

    def __init__(
        self,
        graph,
        d,
        k2,
        config,
        decay=None,
        second_selector="gdd",
        total_budget=None,
        selection_sims=None,
    ):
        super(TwoPhaseObjective, self).__init__()
        if not isinstance(config, MonteCarloConfig):
            raise type_error("config", MonteCarloConfig, type(config))
        self.__graph = graph
        self.__d = checked_int("d", d, low=0)
        self.__k2 = checked_int("k2", k2, low=0)
        self.__config = config
        self.__decay = decay
        self.__second_selector = second_selector
        self.__total_budget = (
            None
            if total_budget is None
            else checked_int("total_budget", total_budget, low=0, high=graph.n)
        )
        self.__selection_sims = selection_sims

    @property
    def d(self):
        return self.__d

    @property
    def k2(self):
        return self.__k2

    @property
    def config(self):
        return self.__config

    def plan_value(self, s1, d, k2):
        """Two-phase value of an arbitrary (S1, d, k2); not memoized."""

        values, _, _ = two_phase_rollout(
            self.__graph,
            s1,
            d,
            k2,
            self.__config,
            self.__decay,
            self.__second_selector,
            self.__selection_sims,
        )
        return SpreadEstimate.from_values(values)

    def _evaluate(self, nodes):
        k2 = self.__k2
        if self.__total_budget is not None:
            k2 = max(0, self.__total_budget - len(nodes))
        return self.plan_value(nodes, self.__d, k2)

    def reseeded(self, seed):
        return TwoPhaseObjective(
            self.__graph,
            self.__d,
            self.__k2,
            self.__config.replace(master_seed=seed),
            self.__decay,
            self.__second_selector,
            self.__total_budget,
            self.__selection_sims,
        )
