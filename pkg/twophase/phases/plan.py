#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    TwoPhasePlan and TwoPhaseResult class definitions

    License: GNU Affero General Public License v3.0
"""

import pandas as pd

from twophase.diffusion.estimators import SpreadEstimate
from twophase.errors import type_error, value_error
from twophase.selection import ALGORITHMS
from twophase.selection.seed_set import SeedSet
from twophase.utils import checked_int, node_tuple

MODES = ("myopic", "farsighted")


class TwoPhasePlan(object):
    """
    Defines a two-phase plan: k1 seeds at step 0, an observation at step d
    and k2 further seeds on the residual graph.

    Parameters
    ----------
    k1 : int
        first-phase budget.
    k2 : int
        second-phase budget.
    d : int
        the delay, in time steps.
    s1 : iterable
        a fixed first-phase set of at most k1 nodes; chosen by `selector`
        when None.
    mode : str
        'myopic' (first phase maximizes sigma) or 'farsighted' (first phase
        maximizes h).
    selector : str
        first-phase algorithm.
    second_selector : str
        second-phase algorithm, 'gdd' by default.

    """

    def __init__(
        self, k1, k2, d, s1=None, mode="myopic", selector="gdd", second_selector="gdd"
    ):
        self.__k1 = checked_int("k1", k1, low=0)
        self.k2 = k2
        self.d = d
        self.s1 = s1
        self.mode = mode
        self.selector = selector
        self.second_selector = second_selector

    @property
    def k1(self):
        return self.__k1

    @k1.setter
    def k1(self, k1):
        k1 = checked_int("k1", k1, low=0)
        if self.__s1 is not None and len(self.__s1) > k1:
            raise value_error("k1", ">= |s1| = {}".format(len(self.__s1)), k1)
        self.__k1 = k1

    @property
    def k2(self):
        return self.__k2

    @k2.setter
    def k2(self, k2):
        self.__k2 = checked_int("k2", k2, low=0)

    @property
    def k(self):
        return self.__k1 + self.__k2

    @property
    def d(self):
        return self.__d

    @d.setter
    def d(self, d):
        self.__d = checked_int("d", d, low=0)

    @property
    def s1(self):
        return self.__s1

    @s1.setter
    def s1(self, s1):
        if s1 is None:
            self.__s1 = None
            return
        if isinstance(s1, SeedSet):
            s1 = s1.nodes
        s1 = node_tuple(s1)
        if len(s1) > self.__k1:
            raise value_error("s1", "at most k1 = {} nodes".format(self.__k1), list(s1))
        self.__s1 = s1

    @property
    def mode(self):
        return self.__mode

    @mode.setter
    def mode(self, mode):
        if not isinstance(mode, str):
            raise type_error("mode", str, type(mode))
        if mode not in MODES:
            raise value_error("mode", "one of {}".format(MODES), mode)
        self.__mode = mode

    @property
    def selector(self):
        return self.__selector

    @selector.setter
    def selector(self, selector):
        self.__selector = checked_algorithm("selector", selector)

    @property
    def second_selector(self):
        return self.__second_selector

    @second_selector.setter
    def second_selector(self, selector):
        self.__second_selector = checked_algorithm("second_selector", selector)

    def as_dict(self):
        return {
            "k1": self.__k1,
            "k2": self.__k2,
            "d": self.__d,
            "s1": None if self.__s1 is None else list(self.__s1),
            "mode": self.__mode,
            "selector": self.__selector,
            "second_selector": self.__second_selector,
        }

    def __repr__(self):
        return "TwoPhasePlan(k1={}, k2={}, d={}, mode={!r}, selector={!r})".format(
            self.__k1, self.__k2, self.__d, self.__mode, self.__selector
        )


def checked_algorithm(var_name, algorithm):
    if not isinstance(algorithm, str):
        raise type_error(var_name, str, type(algorithm))
    algorithm = algorithm.lower()
    if algorithm not in ALGORITHMS:
        raise value_error(var_name, "one of {}".format(ALGORITHMS), algorithm)
    return algorithm


class TwoPhaseResult(object):
    """
    Defines the outcome of a two-phase run.

    Parameters
    ----------
    plan : TwoPhasePlan
        the executed plan, with s1 filled in.
    spread : SpreadEstimate
        sigma-valued, or nu-valued under a decay function.
    progression : DataFrame
        expected new activations per time step (t, new_activations_mean,
        stderr); sums to spread.mean in sigma mode.
    realized_s2_examples : list
        second-phase sets (original node ids) of the first outer replicates.

    """

    def __init__(self, plan, spread, progression, realized_s2_examples=()):
        if not isinstance(plan, TwoPhasePlan):
            raise type_error("plan", TwoPhasePlan, type(plan))
        if not isinstance(spread, SpreadEstimate):
            raise type_error("spread", SpreadEstimate, type(spread))
        if not isinstance(progression, pd.DataFrame):
            raise type_error("progression", pd.DataFrame, type(progression))
        self.__plan = plan
        self.__spread = spread
        self.__progression = progression
        self.__realized_s2_examples = [tuple(x) for x in realized_s2_examples]

    @property
    def plan(self):
        return self.__plan

    @property
    def spread(self):
        return self.__spread

    @property
    def progression(self):
        return self.__progression

    @property
    def realized_s2_examples(self):
        return self.__realized_s2_examples

    def as_dict(self, graph=None):
        """JSON summary; node ids become labels when a graph is given."""

        plan = self.__plan.as_dict()
        examples = [list(x) for x in self.__realized_s2_examples]
        if graph is not None:
            if plan["s1"] is not None:
                plan["s1"] = graph.labels_of(plan["s1"])
            examples = [graph.labels_of(x) for x in examples]

        return {
            "plan": plan,
            "spread": self.__spread.mean,
            "stderr": self.__spread.stderr,
            "samples": self.__spread.samples,
            "realized_s2_examples": examples,
        }

    def __repr__(self):
        return "TwoPhaseResult(plan={!r}, spread={!r})".format(self.__plan, self.__spread)
