#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    LocalSearch class definition

    License: GNU Affero General Public License v3.0
"""

import time

from twophase.errors import type_error, value_error
from twophase.search.node import Node
from twophase.search.problem import Problem
from twophase.search.utils import multiple_comparison, pairwise_comparison
from twophase.utils import checked_float, checked_int

VARIANTS = ("steepest", "greedy", "stochastic")


class LocalSearch(object):
    """
    Defines a local search.

    Parameters
    ----------
    problem : Problem
        the problem definition.
    timeout : float
        the maximum amount of time, in seconds, a search is allowed to go on;
        None for no limit.

    Attributes
    ----------
    problem : Problem
        the problem definition.
    lexi : bool
        whether the objective is to be compared lexicographically.
    maximality : bool
        whether the objective is to maximize the objective function or not.
    timeout : float
        the time limit in seconds, or None.
    trajectory : list
        (state, value) of every node the last search moved to or sampled.
    iterations : int
        number of expansions or samples of the last search.

    """

    def __init__(self, problem, timeout=None):
        self.problem = problem
        self.timeout = timeout
        self.__trajectory = []
        self.__iterations = 0

    @property
    def problem(self):
        return self.__problem

    @problem.setter
    def problem(self, problem):
        if isinstance(problem, Problem):
            self.__problem = problem
        else:
            raise type_error("problem", Problem, type(problem))

    @property
    def lexi(self):
        return self.__problem.lexi

    @property
    def maximality(self):
        return self.__problem.maximality

    @property
    def timeout(self):
        return self.__timeout

    @timeout.setter
    def timeout(self, timeout):
        if timeout is None:
            self.__timeout = None
        else:
            self.__timeout = checked_float("timeout", timeout, low=0.0)

    @property
    def trajectory(self):
        return self.__trajectory

    @property
    def iterations(self):
        return self.__iterations

    def _better(self, reference, query):
        """True if query is strictly better than reference."""

        if self.lexi:
            return pairwise_comparison(reference, query, not self.maximality)
        if self.maximality:
            return query > reference
        return query < reference

    def _best(self, nodes):
        """Index of the best node; the earliest wins ties."""

        values = [x.value if self.lexi else (x.value,) for x in nodes]
        return multiple_comparison(values, not self.maximality)

    def simple(self, variant="steepest", steps=None, rng=None):
        """From the initial state, keep generating successive successor states.
        There are three implemented variants:

        1) 'steepest': move to the best successor while it is strictly better
        than the current state.

        2) 'greedy': move to the best successor whether or not it improves, until
        a state has no successors or `steps` moves were made. Building a seed
        set one node at a time is this variant.

        3) 'stochastic': move to a successor drawn by rng from those that are
        strictly better."""

        if variant not in VARIANTS:
            raise value_error("variant", "one of {}".format(VARIANTS), variant)
        if variant == "stochastic" and rng is None:
            raise ValueError("The stochastic variant needs a random generator.")
        if steps is not None:
            steps = checked_int("steps", steps, low=0)

        start_time = time.time()
        current = Node(self.problem, self.problem.init_state)
        self.__iterations = 0
        while steps is None or self.__iterations < steps:
            if self.timeout is not None and time.time() - start_time > self.timeout:
                break

            successors = current.expand()
            self.__iterations += 1
            if not successors:
                break

            if variant == "greedy":
                current = successors[self._best(successors)]
                continue

            better = [x for x in successors if self._better(current.value, x.value)]
            if not better:
                break
            if variant == "steepest":
                current = better[self._best(better)]
            else:
                current = better[int(rng.integers(len(better)))]

        self.__trajectory = current.path()
        return current.state

    def sample(self, count, rng):
        """Draws `count` random states from the problem and returns the best;
        the earliest sample wins ties."""

        count = checked_int("count", count, low=1)
        self.__trajectory = []
        best = None
        for i in range(count):
            node = Node(self.problem, self.problem.get_random_restart(rng))
            self.__trajectory.append((node.state, node.value))
            if best is None or self._better(best.value, node.value):
                best = node
        self.__iterations = count

        return best.state
