#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Problem class definition

    What a local search needs to know about the sets it explores: where to
    start, how to move, how to score a set and how to draw a random one.
    Seed selectors subclass it with seed tuples as states.

    License: GNU Affero General Public License v3.0
"""

from twophase.errors import type_error


class Problem(object):
    """
    Defines a search problem.

    Parameters
    ----------
    init_state : Any
        the state a search starts from.
    maximality : bool
        True if higher values are better.
    lexi : bool
        True if values are tuples compared element by element.

    """

    def __init__(self, init_state, maximality=True, lexi=False):
        for name, flag in (("maximality", maximality), ("lexi", lexi)):
            if not isinstance(flag, bool):
                raise type_error(name, bool, type(flag))
        self.__init_state = init_state
        self.__maximality = maximality
        self.__lexi = lexi

    @property
    def init_state(self):
        return self.__init_state

    @property
    def maximality(self):
        return self.__maximality

    @property
    def lexi(self):
        return self.__lexi

    def get_successors(self, state):
        """Successor states, listed in tie-breaking order."""

        raise NotImplementedError()

    def get_value(self, state):
        raise NotImplementedError()

    def get_random_restart(self, rng):
        """A random state drawn from rng."""

        raise NotImplementedError()
