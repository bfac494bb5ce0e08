#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Greedy and RMax

    Objective-driven seed selection on top of the local search framework.
    The state of a SeedProblem is the tuple of picked nodes in pick order.

    -   Greedy is a 'greedy' local search: every round expands the current
        set by each candidate in ascending id order and moves to the best
        one, so ties go to the lowest id. Evaluations are not lazy.
    -   RMax samples random sets and keeps the best one.

    License: GNU Affero General Public License v3.0
"""

import numpy as np

from twophase import streams
from twophase.errors import type_error
from twophase.search import LocalSearch, Problem
from twophase.selection.objectives import Objective, with_preselected
from twophase.selection.seed_set import SeedSet
from twophase.utils import checked_int, node_tuple


class SeedProblem(Problem):
    """
    Defines the seed selection problem.

    Parameters
    ----------
    objective : Objective
        the set function to maximize.
    candidates : iterable
        node ids that may be picked.
    budget : int
        the largest set size.
    split_budget : bool
        whether random restarts draw their size uniformly from 1..budget.

    """

    def __init__(self, objective, candidates, budget, split_budget=False):
        super(SeedProblem, self).__init__((), maximality=True, lexi=False)
        if not isinstance(objective, Objective):
            raise type_error("objective", Objective, type(objective))
        self.__objective = objective
        self.__candidates = node_tuple(candidates)
        self.__budget = checked_int("budget", budget, low=0, high=len(self.__candidates))
        self.__split_budget = split_budget

    @property
    def objective(self):
        return self.__objective

    @property
    def candidates(self):
        return self.__candidates

    @property
    def budget(self):
        return self.__budget

    def get_successors(self, state):
        if len(state) >= self.__budget:
            return []
        return [state + (v,) for v in self.__candidates if v not in state]

    def get_value(self, state):
        return self.__objective.value(state)

    def get_random_restart(self, rng):
        size = self.__budget
        if self.__split_budget and self.__budget > 0:
            size = int(rng.integers(1, self.__budget + 1))
        picks = rng.choice(len(self.__candidates), size=size, replace=False)

        return tuple(self.__candidates[i] for i in np.sort(picks))


def _candidates(graph, preselected):
    preselected = node_tuple(preselected)
    graph.check_nodes(preselected)
    return [v for v in range(graph.n) if v not in preselected], preselected


def select_greedy(graph, k, objective, preselected=(), return_search=False):
    """
    Greedy hill climbing: k rounds, each adding the candidate of largest
    objective value.

    Parameters
    ----------
    graph : InfluenceGraph
    k : int
        the budget.
    objective : Objective
        evaluated on preselected + S.
    preselected : iterable
        nodes seeded for free.
    return_search : bool
        also return the LocalSearch, whose trajectory holds every prefix and
        its value.

    Returns
    -------
    seeds : SeedSet

    """

    candidates, preselected = _candidates(graph, preselected)
    k = checked_int("k", k, low=0, high=len(candidates))
    objective = with_preselected(objective, preselected)

    search = LocalSearch(SeedProblem(objective, candidates, k))
    state = search.simple(variant="greedy", steps=k)
    seeds = SeedSet(state, k, objective.evaluate(state))

    if return_search:
        return seeds, search
    return seeds


def select_rmax(
    graph, k, objective, samples=None, seed=0, preselected=(), split_budget=False
):
    """
    Random maximization: the best of `samples` uniformly random k-sets.

    Parameters
    ----------
    graph : InfluenceGraph
    k : int
        the budget.
    objective : Objective
        evaluated on preselected + S.
    samples : int
        number of sampled sets; defaults to 5n.
    seed : int
        master seed of the sampling stream.
    preselected : iterable
        nodes seeded for free.
    split_budget : bool
        draw the size of each sample uniformly from 1..k.

    Returns
    -------
    seeds : SeedSet

    """

    candidates, preselected = _candidates(graph, preselected)
    k = checked_int("k", k, low=0, high=len(candidates))
    samples = max(1, 5 * graph.n) if samples is None else checked_int("samples", samples, low=1)
    objective = with_preselected(objective, preselected)

    if k == len(candidates) and not split_budget:
        state = tuple(candidates)
    else:
        problem = SeedProblem(objective, candidates, k, split_budget=split_budget)
        state = LocalSearch(problem).sample(samples, streams.stream(seed, streams.RMAX))

    return SeedSet(state, k, objective.evaluate(state))
