#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Degree heuristics

    Single degree (SD), weighted degree (WD) and generalized degree discount
    (GDD) seed selection. Every heuristic picks the best-scoring unselected
    node, lowest id first among equal scores, and then discounts the scores
    of the picked node's neighbors.

    GDD scores node v by

        w_v = prod_{x selected, (x, v) in E} (1 - p_xv)
              * (1 + sum_{y unselected, (v, y) in E} p_vy)

    the probability that v is not yet influenced by the selected nodes times
    the expected number of nodes it activates directly, itself included.

    License: GNU Affero General Public License v3.0
"""

import numpy as np

from twophase.selection.seed_set import SeedSet
from twophase.utils import checked_int, node_tuple


def _budget(graph, k, preselected):
    preselected = node_tuple(preselected)
    graph.check_nodes(preselected)
    k = checked_int("k", k, low=0, high=graph.n - len(preselected))

    return k, preselected


def _argmax(scores, selected):
    """Lowest id among the unselected nodes of highest score."""

    masked = np.where(selected, -np.inf, scores)
    return int(np.argmax(masked))


def _discount_selection(graph, k, preselected, weighted):
    """Shared loop of SD and WD: picked nodes leave the graph with their edges."""

    k, preselected = _budget(graph, k, preselected)
    selected = np.zeros(graph.n, dtype=bool)
    scores = np.zeros(graph.n, dtype=np.float64)
    for v in range(graph.n):
        targets, probs = graph.out_edges(v)
        scores[v] = probs.sum() if weighted else len(targets)

    def remove(u):
        selected[u] = True
        sources, probs = graph.in_edges(u)
        for z, p in zip(sources, probs):
            scores[z] -= p if weighted else 1.0

    for u in preselected:
        remove(u)

    picks = []
    for _ in range(k):
        u = _argmax(scores, selected)
        picks.append(u)
        remove(u)

    return SeedSet(picks, k)


def select_sd(graph, k, preselected=()):
    """
    Single degree: repeatedly picks the node with the most outgoing edges in
    the residual graph, then removes it and its incident edges.

    Parameters
    ----------
    graph : InfluenceGraph
    k : int
        the budget, at most the number of nodes not preselected.
    preselected : iterable
        nodes treated as already picked.

    Returns
    -------
    seeds : SeedSet

    """

    return _discount_selection(graph, k, preselected, weighted=False)


def select_wd(graph, k, preselected=()):
    """Weighted degree: as select_sd with the sum of out-probabilities as score."""

    return _discount_selection(graph, k, preselected, weighted=True)


class GddState(object):
    """
    Defines the incremental state of the GDD heuristic.

    Parameters
    ----------
    graph : InfluenceGraph
    preselected : iterable
        nodes selected before the heuristic starts.

    Attributes
    ----------
    weights : ndarray
        w_v of every node; selected nodes keep their last value.
    survival : ndarray
        prod (1 - p_xv) over selected in-neighbors x.
    direct : ndarray
        sum of p_vy over unselected out-neighbors y.
    selected : ndarray
        boolean mask of the selected nodes.
    operations : int
        number of edges touched so far.

    """

    def __init__(self, graph, preselected=()):
        self.__graph = graph
        self.__selected = np.zeros(graph.n, dtype=bool)
        self.__survival = np.ones(graph.n, dtype=np.float64)
        self.__direct = np.zeros(graph.n, dtype=np.float64)
        for v in range(graph.n):
            self.__direct[v] = graph.out_edges(v)[1].sum()
        self.__operations = graph.m

        preselected = node_tuple(preselected)
        graph.check_nodes(preselected)
        for u in preselected:
            self.select(u)

    @property
    def weights(self):
        return self.__survival * (1.0 + self.__direct)

    @property
    def survival(self):
        return self.__survival

    @property
    def direct(self):
        return self.__direct

    @property
    def selected(self):
        return self.__selected

    @property
    def operations(self):
        return self.__operations

    def weight(self, node):
        return float(self.__survival[node] * (1.0 + self.__direct[node]))

    def best(self):
        """Lowest id among the unselected nodes of highest weight."""

        return _argmax(self.weights, self.__selected)

    def select(self, u):
        """Marks u selected and applies its discounts."""

        self.__selected[u] = True
        targets, probs = self.__graph.out_edges(u)
        for v, p in zip(targets, probs):
            self.__survival[v] *= 1.0 - p
        sources, probs = self.__graph.in_edges(u)
        for z, p in zip(sources, probs):
            self.__direct[z] -= p
        self.__operations += len(targets) + len(sources)


def select_gdd(graph, k, preselected=()):
    """
    Generalized degree discount.

    Parameters
    ----------
    graph : InfluenceGraph
    k : int
        the budget, at most the number of nodes not preselected.
    preselected : iterable
        nodes already seeded, such as the recently activated nodes of an
        observation; their discounts apply from the start.

    Returns
    -------
    seeds : SeedSet

    """

    k, preselected = _budget(graph, k, preselected)
    state = GddState(graph, preselected)
    picks = []
    for _ in range(k):
        u = state.best()
        picks.append(u)
        state.select(u)

    return SeedSet(picks, k)
