#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Budget split by selection

    Choosing k1 while the first-phase set is built, for selectors that do not
    optimize the split themselves. The objective scores a set S1 as
    F(S1, d, k - |S1|), so every prefix of a greedy run and every RMax sample
    is a complete plan.

    License: GNU Affero General Public License v3.0
"""

import pandas as pd

from twophase.search.utils import multiple_comparison
from twophase.selection import SeedSet, select_greedy, select_rmax, with_preselected

PREFIX_COLUMNS = ["k1", "s1", "value"]


def prefix_split(graph, k, objective, preselected=(), return_prefixes=False):
    """
    Greedy first phase of size k keeping the best prefix.

    Parameters
    ----------
    graph : InfluenceGraph
    k : int
        the total budget.
    objective : Objective
        F(S1, d, k - |S1|), such as a TwoPhaseObjective with total_budget k.
    preselected : iterable
    return_prefixes : bool
        also return every prefix with its value as a DataFrame.

    Returns
    -------
    k1 : int
        size of the best prefix, smallest first among equal values.
    seeds : SeedSet
        the best prefix.

    """

    _, search = select_greedy(graph, k, objective, preselected, return_search=True)
    prefixes = search.trajectory
    best = multiple_comparison([(value,) for _, value in prefixes], find_min=False)
    state, value = prefixes[best]
    seeds = SeedSet(state, k, with_preselected(objective, preselected).evaluate(state))

    if return_prefixes:
        frame = pd.DataFrame(
            [[len(s), list(s), v] for s, v in prefixes], columns=PREFIX_COLUMNS
        )
        return len(state), seeds, frame
    return len(state), seeds


def rmax_split(graph, k, objective, samples=None, seed=0, preselected=()):
    """
    RMax whose samples draw their size uniformly from 1..k.

    Returns
    -------
    k1 : int
    seeds : SeedSet

    """

    seeds = select_rmax(
        graph, k, objective, samples, seed, preselected, split_budget=True
    )
    return len(seeds), seeds
