#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Plan evaluators

    The schedule searches see the two-phase value only through a
    PlanEvaluator v(k1, d). It can wrap the Monte-Carlo pipeline, the exact
    oracle or any injected function, memoizes every (k1, d) it is asked for
    and logs the evaluations in order.

    License: GNU Affero General Public License v3.0
"""

import pandas as pd

from twophase.diffusion import MonteCarloConfig, SpreadEstimate
from twophase.errors import type_error
from twophase.oracle import ExactOracle
from twophase.phases import TwoPhasePlan, run_two_phase
from twophase.scheduling.config import GRID_COLUMNS, PlanValue, SearchConfig
from twophase.utils import checked_int, is_real

class PlanEvaluator(object):
    """
    Defines a memoized plan value v(k1, d).

    Parameters
    ----------
    function : callable
        function(k1, d) returning a SpreadEstimate or a float.
    k_total : int
        the total budget; k1 = k_total is always evaluated at d = 0.

    Attributes
    ----------
    evaluations : int
        number of distinct plans evaluated.

    """

    def __init__(self, function, k_total):
        if not callable(function):
            raise type_error("function", type(len), type(function))
        self.__function = function
        self.__k_total = checked_int("k_total", k_total, low=0)
        self.__memo = {}
        self.__log = []

    @property
    def k_total(self):
        return self.__k_total

    @property
    def evaluations(self):
        return len(self.__memo)

    def key(self, k1, d):
        k1 = checked_int("k1", k1, low=0, high=self.__k_total)
        d = checked_int("d", d, low=0)
        return (k1, 0 if k1 == self.__k_total else d)

    def __call__(self, k1, d):
        key = self.key(k1, d)
        if key not in self.__memo:
            value = self.__function(*key)
            if not isinstance(value, SpreadEstimate):
                if not is_real(value):
                    raise type_error("plan value", float, type(value))
                value = PlanValue(float(value), 0.0)
            self.__memo[key] = value
            self.__log.append(key)
        return self.__memo[key]

    def history(self):
        """Evaluated plans in evaluation order, as (k1, d, mean, stderr)."""

        rows = [
            [k1, d, self.__memo[(k1, d)].mean, self.__memo[(k1, d)].stderr]
            for k1, d in self.__log
        ]
        return pd.DataFrame(rows, columns=GRID_COLUMNS)


def pipeline_evaluator(
    graph,
    config,
    mc_config,
    selector="gdd",
    mode="myopic",
    second_selector="gdd",
    farsighted_config=None,
    ce_config=None,
):
    """
    v(k1, d) = the two-phase pipeline's spread of plan (k1, k - k1, d) with
    the first phase chosen by `selector`.
    """

    if not isinstance(config, SearchConfig):
        raise type_error("config", SearchConfig, type(config))
    if not isinstance(mc_config, MonteCarloConfig):
        raise type_error("mc_config", MonteCarloConfig, type(mc_config))
    k = config.k_total

    def evaluate(k1, d):
        plan = TwoPhasePlan(k1, k - k1, d, None, mode, selector, second_selector)
        return run_two_phase(
            graph,
            plan,
            mc_config,
            config.effective_decay,
            farsighted_config=farsighted_config,
            ce_config=ce_config,
            examples=0,
        ).spread

    return PlanEvaluator(evaluate, k)


def oracle_evaluator(graph, config, oracle=None):
    """v(k1, d) = max over |S1| = k1 of the exact f(S1, d, k - k1)."""

    if not isinstance(config, SearchConfig):
        raise type_error("config", SearchConfig, type(config))
    oracle = ExactOracle(graph) if oracle is None else oracle
    k = config.k_total
    decay = config.effective_decay

    def evaluate(k1, d):
        _, value = oracle.best_f(k1, d, k - k1, decay)
        return SpreadEstimate.exact(value.value)

    return PlanEvaluator(evaluate, k)


def make_evaluator(graph, config, selector, mc_config=None, **options):
    """
    Builds the evaluator of a search.

    Parameters
    ----------
    graph : InfluenceGraph
    config : SearchConfig
    selector : str, callable or PlanEvaluator
        a selector id runs the Monte-Carlo pipeline, 'oracle' the exact
        oracle, and a callable v(k1, d) is used as is.
    mc_config : MonteCarloConfig
        needed by the pipeline.
    options : dict
        passed on to pipeline_evaluator.

    """

    if isinstance(selector, PlanEvaluator):
        if selector.k_total != config.k_total:
            raise ValueError(
                "Evaluator budget {} differs from the search budget {}.".format(
                    selector.k_total, config.k_total
                )
            )
        return selector
    if callable(selector):
        return PlanEvaluator(selector, config.k_total)
    if selector == "oracle":
        return oracle_evaluator(graph, config, options.get("oracle"))
    if mc_config is None:
        raise ValueError("The Monte-Carlo pipeline needs a MonteCarloConfig.")

    return pipeline_evaluator(graph, config, mc_config, selector, **options)
