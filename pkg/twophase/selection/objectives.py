#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Objectives

    Set functions the objective-driven selectors maximize. An objective maps
    a node set to a SpreadEstimate and memoizes its answers, so repeated
    evaluation of a set returns the same value. The memo keeps the most
    recently used sets, at most memo_size of them; an evicted set is
    evaluated again on its next use. Monte-Carlo objectives draw
    every evaluation from the same streams, which makes comparisons between
    candidate sets use common random numbers.

    License: GNU Affero General Public License v3.0
"""

from functools import lru_cache

from twophase.diffusion.estimators import MonteCarloConfig, SpreadEstimate, rollout
from twophase.diffusion.estimators import checked_decay
from twophase.errors import type_error
from twophase.oracle.exact import ExactOracle
from twophase.utils import checked_int, is_real, node_tuple

DEFAULT_MEMO_SIZE = 100000


class Objective(object):
    """
    Defines a memoized set function.

    Parameters
    ----------
    memo_size : int
        most sets kept in the memo; None keeps every set.

    Attributes
    ----------
    evaluations : int
        number of times the underlying function ran.
    memoized : int
        number of sets currently in the memo.

    """

    def __init__(self, memo_size=DEFAULT_MEMO_SIZE):
        if memo_size is not None:
            memo_size = checked_int("memo_size", memo_size, low=1)
        self.__memo = lru_cache(maxsize=memo_size)(self._evaluate)

    @property
    def evaluations(self):
        return self.__memo.cache_info().misses

    @property
    def memoized(self):
        return self.__memo.cache_info().currsize

    def evaluate(self, nodes):
        """Returns the SpreadEstimate of a node set."""

        return self.__memo(node_tuple(nodes))

    def clear_memo(self):
        """Empties the memo and restarts the evaluation count."""

        self.__memo.cache_clear()

    def value(self, nodes):
        return self.evaluate(nodes).mean

    def __call__(self, nodes):
        return self.evaluate(nodes)

    def _evaluate(self, nodes):
        raise NotImplementedError()

    def reseeded(self, seed):
        """Returns the objective drawing from another master seed."""

        return self


class SpreadObjective(Objective):
    """
    Monte-Carlo sigma, or nu under a decay function.

    Parameters
    ----------
    graph : InfluenceGraph
    config : MonteCarloConfig
    sims : int
        replicates per evaluation; defaults to config.single_phase_sims.
    decay : DecayFunction
        nu instead of sigma when given.

    """

    def __init__(self, graph, config, sims=None, decay=None):
        super(SpreadObjective, self).__init__()
        if not isinstance(config, MonteCarloConfig):
            raise type_error("config", MonteCarloConfig, type(config))
        self.__graph = graph
        self.__config = config
        self.__sims = config.single_phase_sims if sims is None else checked_int("sims", sims, low=1)
        self.__decay = decay
        self.__weighting = checked_decay(decay)

    @property
    def graph(self):
        return self.__graph

    @property
    def config(self):
        return self.__config

    @property
    def sims(self):
        return self.__sims

    @property
    def decay(self):
        return self.__decay

    def _evaluate(self, nodes):
        values, _ = rollout(self.__graph, nodes, self.__config, self.__sims, self.__weighting)
        return SpreadEstimate.from_values(values)

    def reseeded(self, seed):
        return SpreadObjective(
            self.__graph, self.__config.replace(master_seed=seed), self.__sims, self.__decay
        )


class ExactSpreadObjective(Objective):
    """
    Exact sigma, or nu under a decay function, on an oracle-sized graph.

    Parameters
    ----------
    graph : InfluenceGraph
    decay : DecayFunction
    oracle : ExactOracle
        reused when given.

    """

    def __init__(self, graph, decay=None, oracle=None):
        super(ExactSpreadObjective, self).__init__()
        self.__oracle = ExactOracle(graph) if oracle is None else oracle
        self.__decay = checked_decay(decay)

    @property
    def oracle(self):
        return self.__oracle

    def _evaluate(self, nodes):
        if self.__decay is None:
            return SpreadEstimate.exact(self.__oracle.sigma(nodes).value)
        return SpreadEstimate.exact(self.__oracle.nu(nodes, self.__decay).value)


class FunctionObjective(Objective):
    """
    Wraps a callable taking a sorted node tuple and returning a non-negative
    float or a SpreadEstimate.
    """

    def __init__(self, function, memo_size=DEFAULT_MEMO_SIZE):
        super(FunctionObjective, self).__init__(memo_size)
        if not callable(function):
            raise type_error("function", type(len), type(function))
        self.__function = function

    def _evaluate(self, nodes):
        value = self.__function(nodes)
        if isinstance(value, SpreadEstimate):
            return value
        if not is_real(value):
            raise type_error("objective value", float, type(value))
        return SpreadEstimate.exact(value)


class PreselectedObjective(Objective):
    """Evaluates F(preselected + S) with another objective F."""

    def __init__(self, objective, preselected):
        super(PreselectedObjective, self).__init__()
        if not isinstance(objective, Objective):
            raise type_error("objective", Objective, type(objective))
        self.__objective = objective
        self.__preselected = node_tuple(preselected)

    @property
    def preselected(self):
        return self.__preselected

    def _evaluate(self, nodes):
        return self.__objective.evaluate(nodes + self.__preselected)

    def reseeded(self, seed):
        return PreselectedObjective(self.__objective.reseeded(seed), self.__preselected)


def with_preselected(objective, preselected):
    """Returns the objective itself when nothing is preselected."""

    preselected = node_tuple(preselected)
    if not preselected:
        return objective
    return PreselectedObjective(objective, preselected)
