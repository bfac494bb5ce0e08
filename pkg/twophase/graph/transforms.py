#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Probability assignment

    The weighted cascade (WC) and trivalency (TV) conventions turn an
    undirected, unweighted network into a directed influence graph: every
    undirected edge {u, v} becomes the two directed edges (u, v) and (v, u).

    -   WC: p_uv = 1 / deg(v), deg being the undirected degree.
    -   TV: each directed edge independently receives a probability drawn
        uniformly from {0.001, 0.01, 0.1}.

    License: GNU Affero General Public License v3.0
"""

import warnings

import numpy as np

from twophase import streams
from twophase.errors import DataError, type_error
from twophase.graph.edge_list import RawEdgeList
from twophase.graph.influence_graph import InfluenceGraph

TRIVALENCY_VALUES = (0.001, 0.01, 0.1)


def undirected_edges(raw):
    """
    Collapses records into distinct undirected edges.

    Both orientations of a pair count as the same undirected edge. Self-loops
    are dropped with a warning.

    Parameters
    ----------
    raw : RawEdgeList
        unweighted records.

    Returns
    -------
    labels : list
        node labels in first-appearance order.
    edges : list
        (u, v) id pairs, each undirected edge once, in first-appearance order.

    """

    if not isinstance(raw, RawEdgeList):
        raise type_error("raw", RawEdgeList, type(raw))
    if raw.weighted:
        raise DataError(
            "Probability assignment requires an unweighted edge list, "
            "but the records carry probabilities."
        )

    index = {}
    seen = set()
    edges = []
    self_loops = 0
    for u, v, _ in raw.pairs:
        uid = index.setdefault(u, len(index))
        vid = index.setdefault(v, len(index))
        if uid == vid:
            self_loops += 1
            continue
        key = (min(uid, vid), max(uid, vid))
        if key not in seen:
            seen.add(key)
            edges.append((uid, vid))

    if self_loops:
        warnings.warn("Dropped {} self-loop(s).".format(self_loops))

    return list(index), edges


def apply_wc_transform(raw):
    """
    Weighted cascade: every edge into v carries 1 / deg(v).

    Parameters
    ----------
    raw : RawEdgeList
        unweighted records, read as an undirected graph.

    Returns
    -------
    graph : InfluenceGraph

    """

    labels, pairs = undirected_edges(raw)
    degree = np.zeros(len(labels), dtype=np.int64)
    for u, v in pairs:
        degree[u] += 1
        degree[v] += 1

    edges = []
    for u, v in pairs:
        edges.append((u, v, 1.0 / degree[v]))
        edges.append((v, u, 1.0 / degree[u]))

    return InfluenceGraph(len(labels), edges, labels=labels)


def apply_tv_transform(raw, seed):
    """
    Trivalency: every directed edge draws its probability from {0.001, 0.01, 0.1}.

    Parameters
    ----------
    raw : RawEdgeList
        unweighted records, read as an undirected graph.
    seed : int
        seed of the assignment; equal seeds give identical graphs.

    Returns
    -------
    graph : InfluenceGraph

    """

    labels, pairs = undirected_edges(raw)
    rng = streams.stream(seed, streams.TRIVALENCY)
    draws = rng.integers(0, len(TRIVALENCY_VALUES), size=2 * len(pairs))

    edges = []
    for i, (u, v) in enumerate(pairs):
        edges.append((u, v, TRIVALENCY_VALUES[draws[2 * i]]))
        edges.append((v, u, TRIVALENCY_VALUES[draws[2 * i + 1]]))

    return InfluenceGraph(len(labels), edges, labels=labels)
