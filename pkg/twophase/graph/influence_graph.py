#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    InfluenceGraph class definition

    A directed graph G = (N, E, P) whose edges carry influence probabilities.
    Nodes are dense integer ids 0..n-1; the original labels are kept in a
    remap table. Instances are immutable after construction and may be shared
    freely between simulations.

    License: GNU Affero General Public License v3.0
"""

import numpy as np

from twophase.errors import DataError, length_error, type_error, value_error
from twophase.utils import is_integer


class InfluenceGraph(object):
    """
    Defines a weighted, directed influence graph.

    Parameters
    ----------
    n : int
        number of nodes.
    edges : iterable
        (source, target, probability) triples over dense ids.
    labels : list
        original label of every node (defaults to the ids as strings).
    origin : array_like
        id of every node in the graph this one was derived from, if any.

    Attributes
    ----------
    n : int
        number of nodes.
    m : int
        number of directed edges.
    labels : tuple
        original labels, indexed by node id.
    origin : ndarray
        ids of the nodes in the root graph (identity for loaded graphs).
    max_degree : int
        largest in-degree plus out-degree over all nodes.

    """

    def __init__(self, n, edges, labels=None, origin=None):
        if not is_integer(n):
            raise type_error("n", int, type(n))
        if n < 0:
            raise value_error("n", "n >= 0", n)
        self.__n = int(n)

        if labels is None:
            labels = [str(i) for i in range(self.__n)]
        if len(labels) != self.__n:
            raise length_error("labels", self.__n, len(labels))
        self.__labels = tuple(labels)
        self.__index = {label: i for i, label in enumerate(self.__labels)}
        if len(self.__index) != self.__n:
            raise DataError("Node labels must be unique.")

        if origin is None:
            origin = np.arange(self.__n, dtype=np.int64)
        self.__origin = np.asarray(origin, dtype=np.int64)
        self.__origin.setflags(write=False)

        out_lists = [[] for _ in range(self.__n)]
        in_lists = [[] for _ in range(self.__n)]
        seen = set()
        for u, v, p in edges:
            u, v, p = int(u), int(v), float(p)
            if not (0 <= u < self.__n and 0 <= v < self.__n):
                raise DataError("Edge ({}, {}) references a missing node.".format(u, v))
            if u == v:
                raise DataError("Self-loop on node {} is not allowed.".format(u))
            if (u, v) in seen:
                raise DataError("Duplicate directed edge ({}, {}).".format(u, v))
            if not 0.0 <= p <= 1.0:
                raise DataError(
                    "Probability {} of edge ({}, {}) is outside [0, 1].".format(p, u, v)
                )
            seen.add((u, v))
            out_lists[u].append((v, p))
            in_lists[v].append((u, p))

        self.__m = len(seen)
        self.__out_targets, self.__out_probs = _freeze(out_lists)
        self.__in_sources, self.__in_probs = _freeze(in_lists)

    @property
    def n(self):
        return self.__n

    @property
    def m(self):
        return self.__m

    @property
    def labels(self):
        return self.__labels

    @property
    def origin(self):
        return self.__origin

    @property
    def max_degree(self):
        if self.__n == 0:
            return 0
        return max(
            len(self.__out_targets[i]) + len(self.__in_sources[i])
            for i in range(self.__n)
        )

    def out_edges(self, node):
        """Returns (targets, probabilities) of the out-edges, sorted by target."""

        return self.__out_targets[node], self.__out_probs[node]

    def in_edges(self, node):
        """Returns (sources, probabilities) of the in-edges, sorted by source."""

        return self.__in_sources[node], self.__in_probs[node]

    def out_degree(self, node):
        return len(self.__out_targets[node])

    def in_degree(self, node):
        return len(self.__in_sources[node])

    def edges(self):
        """Yields every (source, target, probability), sorted by (source, target)."""

        for u in range(self.__n):
            for v, p in zip(self.__out_targets[u], self.__out_probs[u]):
                yield int(u), int(v), float(p)

    def transposed_edges(self):
        """Yields every (source, target, probability) by walking the in-edges."""

        for v in range(self.__n):
            for u, p in zip(self.__in_sources[v], self.__in_probs[v]):
                yield int(u), int(v), float(p)

    def probability(self, source, target):
        """Returns p_uv, or 0.0 when there is no such edge."""

        targets, probs = self.out_edges(source)
        index = np.searchsorted(targets, target)
        if index < len(targets) and targets[index] == target:
            return float(probs[index])
        return 0.0

    def label(self, node):
        return self.__labels[node]

    def node(self, label):
        """Returns the id of a node given its original label."""

        try:
            return self.__index[str(label)]
        except KeyError:
            raise DataError("Unknown node label '{}'.".format(label))

    def nodes_from_labels(self, labels):
        return [self.node(x) for x in labels]

    def labels_of(self, nodes):
        return [self.__labels[x] for x in nodes]

    def check_nodes(self, nodes):
        """Raises a ValueError if any node id is out of range."""

        for node in nodes:
            if not is_integer(node) or not 0 <= node < self.__n:
                raise value_error("node id", "0 <= id < {}".format(self.__n), node)

    def without(self, removed):
        """
        Returns the graph with the given nodes and their incident edges removed.

        Parameters
        ----------
        removed : iterable
            node ids to delete.

        Returns
        -------
        graph : InfluenceGraph
            the remaining nodes re-indexed 0..n'-1 in ascending id order; the
            origin table maps them back to the root graph.
        kept : ndarray
            ids in this graph of the remaining nodes (kept[new_id] = old_id).

        """

        removed = set(int(x) for x in removed)
        self.check_nodes(removed)
        kept = np.array([i for i in range(self.__n) if i not in removed], dtype=np.int64)
        new_id = -np.ones(self.__n, dtype=np.int64)
        new_id[kept] = np.arange(len(kept))

        edges = [
            (new_id[u], new_id[v], p)
            for u, v, p in self.edges()
            if new_id[u] >= 0 and new_id[v] >= 0
        ]
        graph = InfluenceGraph(
            len(kept),
            edges,
            labels=[self.__labels[i] for i in kept],
            origin=self.__origin[kept],
        )

        return graph, kept

    def __eq__(self, other):
        if not isinstance(other, InfluenceGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.labels == other.labels
            and list(self.edges()) == list(other.edges())
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "InfluenceGraph(n={}, m={})".format(self.n, self.m)


def _freeze(adjacency):
    """Converts per-node (neighbor, probability) lists to sorted arrays."""

    ids, probs = [], []
    for row in adjacency:
        row.sort()
        node_ids = np.array([x[0] for x in row], dtype=np.int64)
        node_probs = np.array([x[1] for x in row], dtype=np.float64)
        node_ids.setflags(write=False)
        node_probs.setflags(write=False)
        ids.append(node_ids)
        probs.append(node_probs)

    return ids, probs
