#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Schedule search

    Choosing the budget split k1 and the delay d of a two-phase plan:

    -   exhaustive_grid evaluates every (k1, d) of the grid.
    -   sequential_d_search walks d = 0, 1, 2, ... for a fixed k1 and stops
        after `patience` non-improving delays; without decay the value is
        non-decreasing in d, so it goes straight to d = D.
    -   golden_section_k1 brackets k1 by golden-section search, taking the
        best delay of each probed k1 from sequential_d_search. The value is
        unimodal in k1 and in d separately, not jointly, so there is no
        two-dimensional search.

    Two values closer than tie_stderr pooled standard errors are tied.
    Ties go to the smaller k1, then to the smaller d under decay and to the
    larger d without it.

    License: GNU Affero General Public License v3.0
"""

import math
import pprint

import pandas as pd

from twophase.cross_entropy import face_joint_optimize
from twophase.errors import CapacityError, type_error
from twophase.oracle import ExactOracle
from twophase.phases import TwoPhaseObjective
from twophase.phases.plan import checked_algorithm
from twophase.scheduling.config import GRID_COLUMNS, GridResult, SearchConfig
from twophase.scheduling.evaluators import make_evaluator
from twophase.utils import checked_int

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
TIE_TOLERANCE = 1e-12


def _check_config(config):
    if not isinstance(config, SearchConfig):
        raise type_error("config", SearchConfig, type(config))
    return config


def _improves(reference, candidate, tie_stderr):
    """True if candidate beats reference by more than the tie band."""

    band = tie_stderr * math.sqrt(reference.stderr ** 2 + candidate.stderr ** 2)
    return candidate.mean > reference.mean + band + TIE_TOLERANCE


def _tied(reference, candidate, tie_stderr):
    return not _improves(reference, candidate, tie_stderr) and not _improves(
        candidate, reference, tie_stderr
    )


def exhaustive_grid(graph, config, selector, mc_config=None, verbose=False, **options):
    """
    Evaluates the two-phase value on the whole (k1, d) grid.

    Parameters
    ----------
    graph : InfluenceGraph
    config : SearchConfig
    selector : str, callable or PlanEvaluator
        see make_evaluator.
    mc_config : MonteCarloConfig
        replicate counts of the Monte-Carlo pipeline.
    verbose : bool
        Verbosity.
    options : dict
        passed on to make_evaluator.

    Returns
    -------
    result : GridResult

    Notes
    -----
    k1 = k is only evaluated at d = 0. k1 = 0 with d > 0 seeds everything at
    step d and is kept for completeness of the grid.

    """

    config = _check_config(config)
    evaluate = make_evaluator(graph, config, selector, mc_config, **options)
    cells = [
        (k1, d)
        for k1 in config.k1_grid()
        for d in ([0] if k1 == config.k_total else range(config.d_max + 1))
    ]
    if config.eval_budget is not None and len(cells) > config.eval_budget:
        raise CapacityError(
            "The grid has {} cells, above the evaluation budget of {}.".format(
                len(cells), config.eval_budget
            )
        )

    prefer_late = config.effective_decay is None
    rows = []
    best = best_value = None
    for k1, d in cells:
        value = evaluate(k1, d)
        rows.append([k1, d, value.mean, value.stderr])
        if best is None or _improves(best_value, value, config.tie_stderr):
            best, best_value = (k1, d), value
        elif prefer_late and k1 == best[0] and _tied(best_value, value, config.tie_stderr):
            best, best_value = (k1, d), value

    result = GridResult(pd.DataFrame(rows, columns=GRID_COLUMNS), best, best_value)

    if verbose:
        print("\n")
        print("Exhaustive Grid complete!")
        pprint.pprint(result.as_dict())
        print("\n")

    return result


def sequential_d_search(graph, k1, config, selector, mc_config=None, **options):
    """
    Best delay for a fixed first-phase budget.

    Parameters
    ----------
    graph : InfluenceGraph
    k1 : int
        the first-phase budget, 0 <= k1 <= k.
    config : SearchConfig
    selector : str, callable or PlanEvaluator
    mc_config : MonteCarloConfig

    Returns
    -------
    d : int
    value : SpreadEstimate

    """

    config = _check_config(config)
    k1 = checked_int("k1", k1, low=0, high=config.k_total)
    evaluate = make_evaluator(graph, config, selector, mc_config, **options)

    if k1 == config.k_total:
        return 0, evaluate(k1, 0)
    if config.effective_decay is None:
        return config.d_max, evaluate(k1, config.d_max)

    best_d, best_value = 0, evaluate(k1, 0)
    misses = 0
    for d in range(1, config.d_max + 1):
        value = evaluate(k1, d)
        if _improves(best_value, value, config.tie_stderr):
            best_d, best_value = d, value
            misses = 0
        else:
            misses += 1
            if misses >= config.patience:
                break

    return best_d, best_value


def golden_section_k1(
    graph, config, selector, mc_config=None, return_history=False, verbose=False, **options
):
    """
    Golden-section search over k1 with a sequential delay search per probe.

    The probes are indices of config.k1_grid(), rounded to the nearest
    integer and kept strictly inside the bracket; the bracket shrinks until
    it holds at most three grid points, which are all evaluated.

    Parameters
    ----------
    graph : InfluenceGraph
    config : SearchConfig
    selector : str, callable or PlanEvaluator
    mc_config : MonteCarloConfig
    return_history : bool
        also return the evaluated plans as a DataFrame (k1, d, mean, stderr).
    verbose : bool
        Verbosity.

    Returns
    -------
    k1 : int
    d : int
    value : SpreadEstimate

    """

    config = _check_config(config)
    evaluate = make_evaluator(graph, config, selector, mc_config, **options)
    grid = config.k1_grid()
    probes = {}

    def probe(index):
        if index not in probes:
            probes[index] = sequential_d_search(graph, grid[index], config, evaluate)
        return probes[index][1]

    def nearest(x):
        return int(math.floor(x + 0.5))

    low, high = 0, len(grid) - 1
    while high - low > 2:
        left = min(max(nearest(high - INV_PHI * (high - low)), low + 1), high - 2)
        right = min(max(nearest(low + INV_PHI * (high - low)), left + 1), high - 1)
        if _improves(probe(left), probe(right), config.tie_stderr):
            low = left
        else:
            high = right

    for index in range(low, high + 1):
        probe(index)

    best = None
    for index in sorted(probes):
        if best is None or _improves(probes[best][1], probes[index][1], config.tie_stderr):
            best = index
    d, value = probes[best]
    k1 = grid[best]

    if verbose:
        print("\n")
        print("Golden Section Search complete!")
        pprint.pprint(
            {
                "k1": k1,
                "d": d,
                "spread": value.mean,
                "stderr": value.stderr,
                "probed k1": [grid[i] for i in sorted(probes)],
                "evaluations": evaluate.evaluations,
            }
        )
        print("\n")

    if return_history:
        return k1, d, value, evaluate.history()
    return k1, d, value


def face_joint_schedule(
    graph,
    config,
    selector="gdd",
    mc_config=None,
    ce_config=None,
    seed=0,
    oracle=None,
    second_selector="gdd",
    farsighted_config=None,
    return_history=False,
    verbose=False,
):
    """
    Optimizes k1, d and the first-phase set together with joint FACE.

    Parameters
    ----------
    graph : InfluenceGraph
    config : SearchConfig
        k_total, d_max and the decay are used.
    selector : str
        'oracle' scores plans with the exact f; any other value with h on
        the Monte-Carlo pipeline.
    mc_config : MonteCarloConfig
    ce_config : CeConfig
    seed : int
        master seed of the FACE sampling stream.
    oracle : ExactOracle
        reused in oracle mode when given.
    second_selector : str
        second-phase selector of the scored plans, 'gdd' for h.
    farsighted_config : MonteCarloConfig
        replicate counts for scoring plans; defaults to mc_config.
    return_history : bool
        also return the FACE iteration log.
    verbose : bool
        Verbosity.

    Returns
    -------
    k1 : int
    d : int
    seeds : SeedSet
        the first-phase set; its value is the plan's value.

    """

    config = _check_config(config)
    decay = config.effective_decay
    if selector == "oracle":
        oracle = ExactOracle(graph) if oracle is None else oracle

        def plan_value(s1, d, k2):
            return oracle.f(s1, d, k2, decay).value

    else:
        if mc_config is None:
            raise ValueError("The Monte-Carlo pipeline needs a MonteCarloConfig.")
        second_selector = checked_algorithm("second_selector", second_selector)
        scoring = mc_config if farsighted_config is None else farsighted_config
        plan_value = TwoPhaseObjective(
            graph, 0, 0, scoring, decay, second_selector
        ).plan_value

    return face_joint_optimize(
        graph,
        config.k_total,
        config.d_max,
        plan_value,
        ce_config,
        seed=seed,
        return_history=return_history,
        verbose=verbose,
    )
