#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    ExactOracle class definition

    Brute-force ground truth on small graphs. Every quantity is an expectation
    over the enumerated live graphs X, weighted by p(X):

    -   sigma(S) = sum_X p(X) |reach_X(S)|
    -   nu(S) = sum_X p(X) sum_j Gamma(dist_X(S, j))
    -   f(S1, d, k2): the observation Y at step d is read off the BFS layers of
        S1 in X (already = distance < d, recent = distance d); live graphs are
        grouped by Y and, for each Y, the second-phase set is the best
        k2-subset of the inactive nodes for the conditional spread of
        recent + S2 on X minus already.

    Terms are summed with math.fsum; values are exact to double rounding.

    License: GNU Affero General Public License v3.0
"""

import itertools
import math

from scipy.special import comb

from twophase.diffusion.cascade import Observation
from twophase.errors import CapacityError, type_error
from twophase.graph.influence_graph import InfluenceGraph
from twophase.oracle.live_graphs import (
    DEFAULT_EDGE_CAP,
    bfs_layers,
    bits_of,
    live_adjacency,
    live_graph_probabilities,
    nodes_of,
    popcount,
    reachable,
)
from twophase.utils import checked_int, node_tuple

DEFAULT_SUBSET_CAP = 10 ** 6
ADJACENCY_CACHE_LIMIT = 1 << 16
TIE_TOLERANCE = 1e-12


class ExactValue(object):
    """
    Defines an exact expectation.

    Parameters
    ----------
    value : float
    second_phase : dict
        for f, the optimal second-phase set of every observation.

    """

    def __init__(self, value, second_phase=None):
        self.__value = float(value)
        self.__second_phase = second_phase or {}

    @property
    def value(self):
        return self.__value

    @property
    def second_phase(self):
        return self.__second_phase

    def __float__(self):
        return self.__value

    def __repr__(self):
        return "ExactValue({!r})".format(self.__value)


class ExactOracle(object):
    """
    Defines an exact evaluator bound to one graph.

    Parameters
    ----------
    graph : InfluenceGraph
        at most edge_cap edges.
    edge_cap : int
        the largest edge count accepted.
    subset_cap : int
        the largest number of candidate second-phase sets per observation.

    """

    def __init__(self, graph, edge_cap=DEFAULT_EDGE_CAP, subset_cap=DEFAULT_SUBSET_CAP):
        if not isinstance(graph, InfluenceGraph):
            raise type_error("graph", InfluenceGraph, type(graph))
        self.__graph = graph
        self.__edge_cap = checked_int("edge_cap", edge_cap, low=0)
        self.__subset_cap = checked_int("subset_cap", subset_cap, low=1)

        probs = live_graph_probabilities(graph, self.__edge_cap)
        # descending probability, then ascending mask
        self.__masks = sorted(
            (mask for mask in range(len(probs)) if probs[mask] > 0.0),
            key=lambda mask: (-probs[mask], mask),
        )
        self.__probs = probs
        self.__edges = list(graph.edges())
        self.__adjacency = None
        if len(probs) <= ADJACENCY_CACHE_LIMIT:
            self.__adjacency = [
                live_adjacency(self.__edges, graph.n, mask) for mask in self.__masks
            ]

    @property
    def graph(self):
        return self.__graph

    @property
    def edge_cap(self):
        return self.__edge_cap

    @property
    def subset_cap(self):
        return self.__subset_cap

    def live_graphs(self):
        """Yields (p(X), out-neighbor bitsets of X) for every X with p(X) > 0."""

        for i, mask in enumerate(self.__masks):
            if self.__adjacency is not None:
                yield float(self.__probs[mask]), self.__adjacency[i]
            else:
                yield float(self.__probs[mask]), live_adjacency(
                    self.__edges, self.__graph.n, mask
                )

    def __gamma(self, decay, horizon):
        if decay is None or decay.is_constant:
            return None
        return [float(x) for x in decay.weights(horizon + 1)]

    def __bits(self, nodes):
        nodes = node_tuple(nodes)
        self.__graph.check_nodes(nodes)
        return bits_of(nodes)

    def sigma(self, seeds):
        """Exact expected spread of a seed set."""

        start = self.__bits(seeds)
        return ExactValue(
            math.fsum(p * popcount(reachable(adj, start)) for p, adj in self.live_graphs())
        )

    def nu(self, seeds, decay):
        """Exact decay-weighted value of a seed set."""

        start = self.__bits(seeds)
        gamma = self.__gamma(decay, self.__graph.n)
        if gamma is None:
            return self.sigma(seeds)

        terms = []
        for p, adj in self.live_graphs():
            layers = bfs_layers(adj, start)
            terms.append(p * sum(gamma[t] * popcount(x) for t, x in enumerate(layers)))

        return ExactValue(math.fsum(terms))

    def observations(self, s1, d):
        """Returns the distribution of the observation at step d as a dict."""

        start = self.__bits(s1)
        d = checked_int("d", d, low=0)
        distribution = {}
        for p, adj in self.live_graphs():
            already, recent, _ = _observe(adj, start, d, None)
            key = Observation(d, nodes_of(already), nodes_of(recent))
            distribution[key] = distribution.get(key, 0.0) + p

        return distribution

    def f(self, s1, d, k2, decay=None):
        """
        Exact two-phase objective f(S1) for delay d and second-phase budget k2.

        Under a decay function, activations of the first phase at step t are
        worth Gamma(t) and those t2 steps into the second phase Gamma(d + t2).

        Returns
        -------
        value : ExactValue
            second_phase maps each observation to its optimal set, the
            lexicographically smallest among equally good ones.

        """

        start = self.__bits(s1)
        d = checked_int("d", d, low=0)
        k2 = checked_int("k2", k2, low=0, high=self.__graph.n)
        gamma = self.__gamma(decay, self.__graph.n + d)

        groups = {}
        order = []
        for p, adj in self.live_graphs():
            already, recent, first = _observe(adj, start, d, gamma)
            key = (already, recent)
            if key not in groups:
                groups[key] = []
                order.append(key)
            groups[key].append((p, adj, first))

        everyone = (1 << self.__graph.n) - 1
        terms = []
        witnesses = {}
        for key in order:
            already, recent = key
            members = groups[key]
            candidates = nodes_of(everyone & ~(already | recent))
            size = min(k2, len(candidates))
            subsets = comb(len(candidates), size, exact=True)
            if subsets > self.__subset_cap:
                raise CapacityError(
                    "{} candidate second-phase sets exceed the cap of {}.".format(
                        subsets, self.__subset_cap
                    )
                )

            best, best_set = None, ()
            for s2 in itertools.combinations(candidates, size):
                seeds = recent | bits_of(s2)
                value = math.fsum(
                    p * _continuation(adj, seeds, already, d, gamma)
                    for p, adj, _ in members
                )
                if best is None or value > best + TIE_TOLERANCE:
                    best, best_set = value, s2

            terms.extend(p * first for p, _, first in members)
            terms.append(best)
            witnesses[Observation(d, nodes_of(already), nodes_of(recent))] = best_set

        return ExactValue(math.fsum(terms), witnesses)

    def best_sigma(self, k):
        """Returns (seeds, ExactValue) maximizing sigma over |S| = k."""

        return self.__best(k, self.sigma)

    def best_nu(self, k, decay):
        return self.__best(k, lambda seeds: self.nu(seeds, decay))

    def best_f(self, k1, d, k2, decay=None):
        """Returns (S1, ExactValue) maximizing f over |S1| = k1."""

        return self.__best(k1, lambda s1: self.f(s1, d, k2, decay))

    def __best(self, k, evaluate):
        k = checked_int("k", k, low=0, high=self.__graph.n)
        best, best_set = None, ()
        for seeds in itertools.combinations(range(self.__graph.n), k):
            value = evaluate(seeds)
            if best is None or value.value > best.value + TIE_TOLERANCE:
                best, best_set = value, seeds

        return best_set, best


def _observe(adjacency, start, d, gamma):
    """Returns (already, recent, first-phase value) of s1 in a live graph."""

    layers = bfs_layers(adjacency, start, limit=d)
    already = 0
    for layer in layers[:d]:
        already |= layer
    recent = layers[d] if len(layers) > d else 0
    if gamma is None:
        first = popcount(already)
    else:
        first = sum(gamma[t] * popcount(x) for t, x in enumerate(layers[:d]))

    return already, recent, first


def _continuation(adjacency, seeds, already, d, gamma):
    """Value of the second phase seeded at step d on the graph minus already."""

    if gamma is None:
        return popcount(reachable(adjacency, seeds, blocked=already))
    layers = bfs_layers(adjacency, seeds, blocked=already)

    return sum(gamma[d + t] * popcount(x) for t, x in enumerate(layers))


def exact_sigma(graph, seeds, edge_cap=DEFAULT_EDGE_CAP):
    """Exact sigma(S) by live-graph enumeration."""

    return ExactOracle(graph, edge_cap=edge_cap).sigma(seeds)


def exact_nu(graph, seeds, decay, edge_cap=DEFAULT_EDGE_CAP):
    """Exact nu(S) by live-graph enumeration."""

    return ExactOracle(graph, edge_cap=edge_cap).nu(seeds, decay)


def exact_f(
    graph,
    s1,
    d,
    k2,
    decay=None,
    edge_cap=DEFAULT_EDGE_CAP,
    subset_cap=DEFAULT_SUBSET_CAP,
):
    """Exact two-phase objective f(S1) for delay d and budget k2."""

    return ExactOracle(graph, edge_cap=edge_cap, subset_cap=subset_cap).f(
        s1, d, k2, decay
    )
