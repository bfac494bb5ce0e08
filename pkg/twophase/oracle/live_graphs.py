#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Live graphs

    Enumeration of the 2^m live graphs of an influence graph. A live graph is
    an edge mask whose bit e stands for the e-th edge of graph.edges(); its
    probability is the product of p over kept edges and (1 - p) over dropped
    ones.

    Node sets are Python int bitsets throughout this package's oracle: bit v
    set means node v is in the set.

    License: GNU Affero General Public License v3.0
"""

import numpy as np

from twophase.errors import CapacityError

DEFAULT_EDGE_CAP = 24


class LiveGraph(object):
    """
    Defines a live graph.

    Parameters
    ----------
    edge_mask : int
        bit e set iff edge e of the parent graph is live.
    probability : float
        p(X).

    """

    def __init__(self, edge_mask, probability):
        self.__edge_mask = int(edge_mask)
        self.__probability = float(probability)

    @property
    def edge_mask(self):
        return self.__edge_mask

    @property
    def probability(self):
        return self.__probability

    def has_edge(self, index):
        return bool(self.__edge_mask >> index & 1)

    def __repr__(self):
        return "LiveGraph(mask={:#x}, p={:.6g})".format(self.__edge_mask, self.__probability)


def check_edge_cap(graph, edge_cap=DEFAULT_EDGE_CAP):
    if graph.m > edge_cap:
        raise CapacityError(
            "The graph has {} edges; enumerating its 2^{} live graphs exceeds "
            "the cap of {} edges.".format(graph.m, graph.m, edge_cap)
        )


def live_graph_probabilities(graph, edge_cap=DEFAULT_EDGE_CAP):
    """
    Returns p(X) for every mask X = 0 .. 2^m - 1 as an array.

    Built by doubling: after edge e, entry i + 2^e is entry i times p_e and
    entry i is scaled by (1 - p_e).
    """

    check_edge_cap(graph, edge_cap)
    probs = np.ones(1, dtype=np.float64)
    for _, _, p in graph.edges():
        probs = np.concatenate([probs * (1.0 - p), probs * p])

    return probs


def enumerate_live_graphs(graph, edge_cap=DEFAULT_EDGE_CAP):
    """
    Enumerates every live graph of a graph.

    Parameters
    ----------
    graph : InfluenceGraph
    edge_cap : int
        the largest edge count accepted.

    Returns
    -------
    live_graphs : list
        all 2^m LiveGraph objects in mask order.

    """

    probs = live_graph_probabilities(graph, edge_cap)
    return [LiveGraph(mask, p) for mask, p in enumerate(probs)]


def live_adjacency(edges, n, mask):
    """Out-neighbor bitsets of every node in the live graph given by mask."""

    adjacency = [0] * n
    for index, (u, v, _) in enumerate(edges):
        if mask >> index & 1:
            adjacency[u] |= 1 << v

    return tuple(adjacency)


def bits_of(nodes):
    bits = 0
    for node in nodes:
        bits |= 1 << int(node)
    return bits


def nodes_of(bits):
    """Ascending node ids of a bitset."""

    nodes = []
    while bits:
        low = bits & -bits
        nodes.append(low.bit_length() - 1)
        bits ^= low
    return tuple(nodes)


def popcount(bits):
    return bin(bits).count("1")


def bfs_layers(adjacency, start, blocked=0, limit=None):
    """
    Breadth-first layers from start, never entering blocked nodes.

    Returns
    -------
    layers : list
        layers[t] is the bitset of nodes at distance exactly t; at most
        limit + 1 layers when limit is given. Trailing empty layers are not
        included, except that a non-empty start always yields layers[0].
    """

    seen = start & ~blocked
    frontier = seen
    layers = [frontier] if frontier else []
    while frontier and (limit is None or len(layers) <= limit):
        reached = 0
        pending = frontier
        while pending:
            low = pending & -pending
            reached |= adjacency[low.bit_length() - 1]
            pending ^= low
        frontier = reached & ~seen & ~blocked
        if frontier:
            seen |= frontier
            layers.append(frontier)

    return layers


def reachable(adjacency, start, blocked=0):
    """Bitset of the nodes reachable from start without entering blocked."""

    seen = start & ~blocked
    frontier = seen
    while frontier:
        reached = 0
        while frontier:
            low = frontier & -frontier
            reached |= adjacency[low.bit_length() - 1]
            frontier ^= low
        frontier = reached & ~seen & ~blocked
        seen |= frontier

    return seen
