#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    FACE

    Fully adaptive cross-entropy optimization over seed sets. Every iteration
    draws between n_min and n_max sets of exactly the required size from the
    current product distribution, takes the n_elite best as elites, moves the
    distribution towards the elites in proportion to their objective values
    and smooths it with the previous one. The best set ever drawn is
    returned.

    In joint mode every sample also draws its delay d from {0..D} and, for
    d > 0, its first-phase budget k1 from {1..k}; d = 0 is the single-phase
    plan k1 = k.

    License: GNU Affero General Public License v3.0
"""

import math
import pprint

import numpy as np
import pandas as pd

from twophase import streams
from twophase.cross_entropy.config import CeConfig
from twophase.cross_entropy.distribution import CeDistribution, init_uniform, init_weighted
from twophase.errors import type_error
from twophase.search import pairwise_comparison
from twophase.selection.objectives import with_preselected
from twophase.selection.seed_set import SeedSet
from twophase.utils import checked_int, node_tuple

HISTORY_COLUMNS = ["iter", "draws", "elite_threshold", "best"]


class CeSample(object):
    """
    Defines one evaluated sample.

    Parameters
    ----------
    k1 : int
        the sampled budget.
    d : int
        the sampled delay, None outside joint mode.
    nodes : tuple
        the sampled node ids.
    value : float
        the objective value.
    indices : ndarray
        positions of the nodes in the candidate list.

    """

    def __init__(self, k1, d, nodes, value, indices):
        if len(nodes) != k1:
            raise ValueError("A sample of budget {} holds {} nodes.".format(k1, len(nodes)))
        self.k1 = k1
        self.d = d
        self.nodes = tuple(nodes)
        self.value = float(value)
        self.indices = indices

    def __repr__(self):
        return "CeSample(k1={}, d={}, nodes={}, value={:.6g})".format(
            self.k1, self.d, list(self.nodes), self.value
        )


def _check_config(config, n):
    if config is None:
        config = CeConfig()
    if not isinstance(config, CeConfig):
        raise type_error("config", CeConfig, type(config))
    return config.resolved(n)


def _target(elites, distribution):
    """The elite-weighted distribution the current one is moved towards."""

    weights = np.array([x.value for x in elites], dtype=np.float64)
    if weights.sum() <= 0.0:
        weights = np.ones(len(elites))
    weights = weights / weights.sum()

    node_probs = np.zeros(len(distribution.node_probs))
    for weight, sample in zip(weights, elites):
        node_probs[sample.indices] += weight

    k1_probs = d_probs = None
    if distribution.joint:
        k1_probs = np.zeros(len(distribution.k1_probs))
        d_probs = np.zeros(len(distribution.d_probs))
        for weight, sample in zip(weights, elites):
            k1_probs[sample.k1 - 1] += weight
            d_probs[sample.d] += weight

    return CeDistribution(np.clip(node_probs, 0.0, 1.0), k1_probs, d_probs)


def _optimize(distribution, draw, better, config, verbose=False):
    """
    Runs the FACE iterations.

    Returns
    -------
    best : CeSample
        the best sample ever drawn.
    distribution : CeDistribution
        the final distribution.
    history : DataFrame
        one row per iteration: (iter, draws, elite_threshold, best).

    """

    def ranked(samples):
        # stable: equal values keep draw order
        return sorted(samples, key=lambda x: -x.value)

    best = None
    previous = None
    rows = []
    for iteration in range(1, config.max_iterations + 1):
        samples = [draw(distribution) for _ in range(config.n_min)]
        order = ranked(samples)
        threshold = order[config.n_elite - 1].value
        if config.adaptive_draws and previous is not None:
            while threshold <= previous and len(samples) < config.n_max:
                extra = min(len(samples), config.n_max - len(samples))
                samples.extend(draw(distribution) for _ in range(extra))
                order = ranked(samples)
                threshold = order[config.n_elite - 1].value

        for sample in samples:
            if best is None or better(best, sample):
                best = sample

        target = _target(order[: config.n_elite], distribution)
        distribution = distribution.smoothed(target, config.alpha)
        rows.append([iteration, len(samples), threshold, best.value])
        if verbose:
            print("FACE iteration {}: {}".format(iteration, dict(zip(HISTORY_COLUMNS, rows[-1]))))

        reliable = previous is not None and abs(threshold - previous) <= (
            config.reliability_tol * abs(previous)
        )
        if reliable or distribution.is_degenerate(config.degenerate_tol):
            break
        previous = threshold

    return best, distribution, pd.DataFrame(rows, columns=HISTORY_COLUMNS)


def face_select(
    graph,
    budget,
    objective,
    config=None,
    seed=0,
    preselected=(),
    return_history=False,
    verbose=False,
):
    """
    Selects a seed set of size `budget` with FACE.

    Parameters
    ----------
    graph : InfluenceGraph
    budget : int
        the set size gamma.
    objective : Objective
        evaluated on preselected + S.
    config : CeConfig
        defaults to CeConfig().
    seed : int
        master seed of the sampling stream.
    preselected : iterable
        nodes seeded for free, never sampled.
    return_history : bool
        also return the iteration log as a DataFrame.
    verbose : bool
        Verbosity.

    Returns
    -------
    seeds : SeedSet
        the best set ever drawn, in ascending id order.

    """

    preselected = node_tuple(preselected)
    graph.check_nodes(preselected)
    candidates = [v for v in range(graph.n) if v not in preselected]
    budget = checked_int("budget", budget, low=0, high=len(candidates))
    config = _check_config(config, len(candidates))
    objective = with_preselected(objective, preselected)
    rng = streams.stream(seed, streams.CROSS_ENTROPY)

    if config.init == "weighted":
        distribution = init_weighted(graph, budget, candidates, preselected)
    else:
        distribution = init_uniform(len(candidates), budget)

    def draw(distribution):
        indices = distribution.sample_set(budget, rng)
        nodes = tuple(candidates[i] for i in indices)
        return CeSample(budget, None, nodes, objective.value(nodes), indices)

    best, _, history = _optimize(
        distribution, draw, lambda old, new: new.value > old.value, config, verbose
    )
    seeds = SeedSet(best.nodes, budget, objective.evaluate(best.nodes))

    if verbose:
        print("\n")
        print("FACE complete!")
        pprint.pprint({"seeds": graph.labels_of(seeds.nodes), "value": best.value})
        print("\n")

    if return_history:
        return seeds, history
    return seeds


def face_joint_optimize(
    graph,
    total_budget,
    max_delay,
    plan_value,
    config=None,
    seed=0,
    return_history=False,
    verbose=False,
):
    """
    Optimizes the split k1, the delay d and the first-phase set jointly.

    Parameters
    ----------
    graph : InfluenceGraph
    total_budget : int
        the total budget k.
    max_delay : int
        the largest delay D. With D = 0 the only plan is the single-phase
        one, k1 = k and d = 0.
    plan_value : callable
        plan_value(s1, d, k2) returns the two-phase value as a float or a
        SpreadEstimate.
    config : CeConfig
        defaults to CeConfig().
    seed : int
        master seed of the sampling stream.
    return_history : bool
        also return the iteration log as a DataFrame.
    verbose : bool
        Verbosity.

    Returns
    -------
    k1 : int
    d : int
    seeds : SeedSet
        the first-phase set of the best plan; its value is the plan's value.

    """

    k = checked_int("total_budget", total_budget, low=1, high=graph.n)
    max_delay = checked_int("max_delay", max_delay, low=0)
    if not callable(plan_value):
        raise type_error("plan_value", type(len), type(plan_value))
    config = _check_config(config, graph.n)
    rng = streams.stream(seed, streams.CROSS_ENTROPY, 1)

    mean_k1 = int(math.ceil((k + 1) / 2.0))
    if config.init == "weighted":
        node_probs = init_weighted(graph, mean_k1).node_probs
    else:
        node_probs = np.full(graph.n, (k + 1) / (2.0 * graph.n))
    distribution = CeDistribution(
        node_probs,
        np.full(k, 1.0 / k),
        np.full(max_delay + 1, 1.0 / (max_delay + 1)),
    )
    values = {}

    def draw(distribution):
        d = distribution.sample_d(rng)
        k1 = k if d == 0 else distribution.sample_k1(rng)
        indices = distribution.sample_set(k1, rng)
        nodes = tuple(int(i) for i in indices)
        key = (nodes, d)
        if key not in values:
            values[key] = plan_value(nodes, d, k - k1)
        return CeSample(k1, d, nodes, float(values[key]), indices)

    def better(old, new):
        return pairwise_comparison(
            (old.value, -old.d, -old.k1), (new.value, -new.d, -new.k1), find_min=False
        )

    best, _, history = _optimize(distribution, draw, better, config, verbose)
    seeds = SeedSet(best.nodes, best.k1, values[(best.nodes, best.d)])

    if verbose:
        print("\n")
        print("FACE joint optimization complete!")
        pprint.pprint(
            {"k1": best.k1, "d": best.d, "s1": graph.labels_of(seeds.nodes), "value": best.value}
        )
        print("\n")

    if return_history:
        return best.k1, best.d, seeds, history
    return best.k1, best.d, seeds
