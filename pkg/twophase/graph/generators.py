#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Graph generators

    Conversion from networkx graphs and the seeded family of small random
    instances on which the exact oracle, the estimators and the optimizers are
    cross-checked.

    License: GNU Affero General Public License v3.0
"""

import networkx as nx

from twophase import streams
from twophase.errors import value_error
from twophase.graph.influence_graph import InfluenceGraph


def from_networkx(nx_graph, weight="p", default=None):
    """
    Converts a networkx graph whose edges carry a probability attribute.

    Undirected graphs produce both orientations of every edge.

    Parameters
    ----------
    nx_graph : networkx.Graph or networkx.DiGraph
    weight : str
        name of the edge attribute holding the probability.
    default : float
        probability for edges without the attribute (required if any lacks it).

    Returns
    -------
    graph : InfluenceGraph
        labels are str() of the networkx nodes, ids in networkx node order.

    """

    index = {node: i for i, node in enumerate(nx_graph.nodes())}
    edges = []
    for u, v, data in nx_graph.edges(data=True):
        if u == v:
            continue
        p = data.get(weight, default)
        if p is None:
            raise value_error("edge attribute '{}'".format(weight), "a probability", p)
        edges.append((index[u], index[v], p))
        if not nx_graph.is_directed():
            edges.append((index[v], index[u], p))

    return InfluenceGraph(len(index), edges, labels=[str(x) for x in index])


def random_instance(n, m, seed, low=0.0, high=1.0):
    """
    Returns a random directed graph with n nodes, m edges and uniform probabilities.

    Parameters
    ----------
    n : int
        number of nodes.
    m : int
        number of directed edges (at most n(n-1)).
    seed : int
        instance seed; equal seeds give identical graphs.
    low, high : float
        range of the uniformly drawn edge probabilities.

    Returns
    -------
    graph : InfluenceGraph

    """

    if m > n * (n - 1):
        raise value_error("m", "m <= n(n-1) = {}".format(n * (n - 1)), m)

    rng = streams.stream(seed, streams.INSTANCE)
    topology = nx.gnm_random_graph(n, m, seed=int(rng.integers(2 ** 31)), directed=True)
    edges = sorted(topology.edges())
    probs = rng.uniform(low, high, size=len(edges))

    return InfluenceGraph(n, [(u, v, p) for (u, v), p in zip(edges, probs)])


def instance_family(count, max_nodes=8, max_edges=12, seed=0, min_nodes=3):
    """
    Yields `count` seeded random instances with at most max_nodes nodes and
    max_edges edges, probabilities uniform in [0, 1].
    """

    rng = streams.stream(seed, streams.INSTANCE, count)
    for i in range(count):
        n = int(rng.integers(min_nodes, max_nodes + 1))
        m = int(rng.integers(1, min(max_edges, n * (n - 1)) + 1))
        yield random_instance(n, m, seed=seed * 100003 + i)
