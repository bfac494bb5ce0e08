#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Node class definition

    License: GNU Affero General Public License v3.0
"""

from twophase.errors import type_error
from twophase.search.problem import Problem


class Node(object):
    """
    A search state together with its value, which is computed once.

    Parameters
    ----------
    problem : Problem
        the problem the state belongs to.
    state : Any
        the state, for seed selection a sorted tuple of node ids.
    parent : Node
        the node the search moved from; None for the initial state.

    Attributes
    ----------
    depth : int
        moves made since the initial state. A seed set built one node at a
        time has depth equal to the number of nodes added.

    """

    def __init__(self, problem, state, parent=None):
        if not isinstance(problem, Problem):
            raise type_error("problem", Problem, type(problem))
        if parent is not None and not isinstance(parent, Node):
            raise type_error("parent", Node, type(parent))
        self.__problem = problem
        self.__state = state
        self.__parent = parent
        self.__depth = 0 if parent is None else parent.depth + 1
        self.__value = problem.get_value(state)
        self.__successors = None

    @property
    def problem(self):
        return self.__problem

    @property
    def state(self):
        return self.__state

    @property
    def parent(self):
        return self.__parent

    @property
    def depth(self):
        return self.__depth

    @property
    def value(self):
        return self.__value

    @property
    def successors(self):
        return self.__successors

    def expand(self):
        """Evaluates the successor states once and returns them as nodes."""

        if self.__successors is None:
            self.__successors = [
                Node(self.__problem, x, self) for x in self.__problem.get_successors(self.__state)
            ]
        return self.__successors

    def path(self):
        """(state, value) pairs from the initial state down to this node."""

        steps = []
        node = self
        while node is not None:
            steps.append((node.state, node.value))
            node = node.parent
        return steps[::-1]

    def __repr__(self):
        return "Node(state={!r}, value={!r}, depth={})".format(
            self.__state, self.__value, self.__depth
        )
