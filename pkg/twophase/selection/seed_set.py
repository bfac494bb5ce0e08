#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    SeedSet class definition

    License: GNU Affero General Public License v3.0
"""

from twophase.errors import value_error
from twophase.utils import checked_int


class SeedSet(object):
    """
    Defines an ordered seed set under a budget.

    Parameters
    ----------
    nodes : iterable
        node ids in selection order.
    budget : int
        the budget k.
    value : SpreadEstimate or ExactValue
        the objective value of the set, if known.

    Attributes
    ----------
    nodes : tuple
        node ids in selection order.
    budget : int
    value : SpreadEstimate or ExactValue

    """

    def __init__(self, nodes, budget, value=None):
        nodes = tuple(int(x) for x in nodes)
        if len(set(nodes)) != len(nodes):
            raise value_error("nodes", "distinct node ids", list(nodes))
        self.__budget = checked_int("budget", budget, low=0)
        if len(nodes) > self.__budget:
            raise value_error("nodes", "at most {} nodes".format(budget), list(nodes))
        self.__nodes = nodes
        self.value = value

    @property
    def nodes(self):
        return self.__nodes

    @property
    def budget(self):
        return self.__budget

    @property
    def value(self):
        return self.__value

    @value.setter
    def value(self, value):
        self.__value = value

    def sorted(self):
        return tuple(sorted(self.__nodes))

    def __len__(self):
        return len(self.__nodes)

    def __iter__(self):
        return iter(self.__nodes)

    def __contains__(self, node):
        return node in self.__nodes

    def __eq__(self, other):
        if not isinstance(other, SeedSet):
            return NotImplemented
        return self.nodes == other.nodes and self.budget == other.budget

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "SeedSet({}, budget={})".format(list(self.__nodes), self.__budget)
