#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    SPIC

    Shapley-value based selection with probability-aware discounting. The
    Shapley value of a node is its marginal contribution to the objective,
    averaged over orderings of the candidate nodes; it is computed exactly
    over all orderings when there are few enough of them and estimated from
    sampled orderings otherwise.

    License: GNU Affero General Public License v3.0
"""

import itertools
import math

import numpy as np

from twophase import streams
from twophase.selection.objectives import with_preselected
from twophase.selection.seed_set import SeedSet
from twophase.utils import checked_int, node_tuple


def _marginals(objective, order):
    """Marginal contribution of every node of an ordering at its position."""

    contributions = {}
    prefix = ()
    previous = objective.value(prefix)
    for v in order:
        prefix = prefix + (v,)
        current = objective.value(prefix)
        contributions[v] = current - previous
        previous = current

    return contributions


def shapley_values(graph, objective, permutations=None, seed=0, preselected=()):
    """
    Shapley values of the nodes for an objective.

    Parameters
    ----------
    graph : InfluenceGraph
    objective : Objective
        evaluated on preselected + S.
    permutations : int
        number of sampled orderings; defaults to 5n. When the candidates have
        at most this many orderings, all of them are used.
    seed : int
        master seed; ordering i and its evaluations draw from (seed, i).
    preselected : iterable
        nodes seeded for free; their value is 0.

    Returns
    -------
    values : ndarray
        per-node Shapley value.

    """

    preselected = node_tuple(preselected)
    graph.check_nodes(preselected)
    candidates = [v for v in range(graph.n) if v not in preselected]
    permutations = (
        max(1, 5 * graph.n)
        if permutations is None
        else checked_int("permutations", permutations, low=1)
    )
    objective = with_preselected(objective, preselected)

    totals = np.zeros(graph.n, dtype=np.float64)
    if not candidates:
        return totals

    if math.factorial(len(candidates)) <= permutations:
        orders = list(itertools.permutations(candidates))
        for order in orders:
            for v, gain in _marginals(objective, order).items():
                totals[v] += gain
        return totals / len(orders)

    for i in range(permutations):
        rng = streams.stream(seed, streams.SHAPLEY, i)
        order = [candidates[x] for x in rng.permutation(len(candidates))]
        evaluator = objective.reseeded(int(rng.integers(2 ** 63)))
        for v, gain in _marginals(evaluator, order).items():
            totals[v] += gain

    return totals / permutations


def select_spic(
    graph,
    k,
    objective,
    permutations=None,
    seed=0,
    preselected=(),
    values=None,
    return_values=False,
):
    """
    Shapley-value based influential characters.

    Picks the unselected node of highest current value, lowest id first. On
    picking y with current value phi_y, every out-neighbor x of y is scaled
    by (1 - p_yx) and every in-neighbor z loses p_zy * phi_y, floored at 0.

    Parameters
    ----------
    graph : InfluenceGraph
    k : int
        the budget.
    objective : Objective
    permutations : int
        orderings for the Shapley estimate; defaults to 5n.
    seed : int
        master seed of the Shapley estimate.
    preselected : iterable
        nodes seeded for free, never picked.
    values : ndarray
        precomputed Shapley values; skips the estimate.
    return_values : bool
        also return the Shapley values.

    Returns
    -------
    seeds : SeedSet

    """

    preselected = node_tuple(preselected)
    graph.check_nodes(preselected)
    k = checked_int("k", k, low=0, high=graph.n - len(preselected))
    if values is None:
        values = shapley_values(graph, objective, permutations, seed, preselected)
    current = np.array(values, dtype=np.float64)

    selected = np.zeros(graph.n, dtype=bool)
    selected[list(preselected)] = True
    picks = []
    for _ in range(k):
        y = int(np.argmax(np.where(selected, -np.inf, current)))
        phi = current[y]
        picks.append(y)
        selected[y] = True

        targets, probs = graph.out_edges(y)
        current[targets] *= 1.0 - probs
        sources, probs = graph.in_edges(y)
        current[sources] = np.maximum(current[sources] - probs * phi, 0.0)

    seeds = SeedSet(picks, k, with_preselected(objective, preselected).evaluate(picks))
    if return_values:
        return seeds, np.asarray(values, dtype=np.float64)
    return seeds
