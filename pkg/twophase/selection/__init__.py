#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Seed Selection

    Single-phase seed selection: the degree heuristics SD, WD and GDD, and the
    objective-driven greedy, RMax, SPIC and FACE selectors. Every selector
    accepts nodes that are already seeded (`preselected`) and returns an
    ordered SeedSet.

    License: GNU Affero General Public License v3.0
"""

import pprint
import time

from twophase.errors import value_error
from twophase.selection.seed_set import SeedSet
from twophase.selection.objectives import (
    ExactSpreadObjective,
    FunctionObjective,
    Objective,
    PreselectedObjective,
    SpreadObjective,
    with_preselected,
)
from twophase.selection.degree import GddState, select_gdd, select_sd, select_wd
from twophase.selection.greedy import SeedProblem, select_greedy, select_rmax
from twophase.selection.shapley import select_spic, shapley_values

ALGORITHMS = ("sd", "wd", "gdd", "greedy", "rmax", "spic", "face")
HEURISTICS = ("sd", "wd", "gdd")


def select_seeds(
    graph,
    algorithm,
    k,
    objective=None,
    preselected=(),
    seed=0,
    samples=None,
    ce_config=None,
    return_history=False,
    verbose=False,
):
    """
    Selects k seeds with the named algorithm.

    Parameters
    ----------
    graph : InfluenceGraph
    algorithm : str
        one of 'sd', 'wd', 'gdd', 'greedy', 'rmax', 'spic', 'face'.
    k : int
        the budget.
    objective : Objective
        required by the objective-driven algorithms.
    preselected : iterable
        nodes already seeded.
    seed : int
        master seed of the randomized algorithms.
    samples : int
        RMax sample count or SPIC permutation count; defaults to 5n.
    ce_config : CeConfig
        FACE settings.
    return_history : bool
        also return the FACE iteration log, None for the other algorithms.
    verbose : bool
        Verbosity.

    Returns
    -------
    seeds : SeedSet
    history : pandas.DataFrame
        only with return_history.

    """

    algorithm = algorithm.lower()
    if algorithm not in ALGORITHMS:
        raise value_error("algorithm", "one of {}".format(ALGORITHMS), algorithm)
    if algorithm not in HEURISTICS and objective is None:
        raise ValueError("Algorithm '{}' needs an objective.".format(algorithm))

    start_time = time.time()
    history = None
    if algorithm == "sd":
        seeds = select_sd(graph, k, preselected)
    elif algorithm == "wd":
        seeds = select_wd(graph, k, preselected)
    elif algorithm == "gdd":
        seeds = select_gdd(graph, k, preselected)
    elif algorithm == "greedy":
        seeds = select_greedy(graph, k, objective, preselected)
    elif algorithm == "rmax":
        seeds = select_rmax(graph, k, objective, samples, seed, preselected)
    elif algorithm == "spic":
        seeds = select_spic(graph, k, objective, samples, seed, preselected)
    else:
        from twophase.cross_entropy import face_select

        seeds, history = face_select(
            graph,
            k,
            objective,
            ce_config,
            seed=seed,
            preselected=preselected,
            return_history=True,
        )

    if verbose:
        results = {
            "algorithm": algorithm,
            "seeds": graph.labels_of(seeds.nodes),
            "value": repr(seeds.value),
            "selection time": "{:.4f} s".format(time.time() - start_time),
        }
        print("\n")
        print("Seed Selection complete!")
        pprint.pprint(results)
        print("\n")

    if return_history:
        return seeds, history
    return seeds
