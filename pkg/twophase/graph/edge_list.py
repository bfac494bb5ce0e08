#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Edge-list ingestion

    Reading whitespace-separated edge-list files ('#' and '%' comment lines,
    an optional third probability column) and building influence graphs from
    them. Public network datasets in the usual SNAP/KONECT layout load
    unmodified.

    License: GNU Affero General Public License v3.0
"""

import io
import warnings

from twophase.errors import DataError, parse_error, type_error
from twophase.graph.influence_graph import InfluenceGraph

COMMENT_PREFIXES = ("#", "%")


class RawEdgeList(object):
    """
    Defines the parsed records of an edge-list file.

    Parameters
    ----------
    pairs : list
        (source label, target label, probability or None) records.
    directed : bool
        whether records are directed edges or undirected pairs.

    Attributes
    ----------
    pairs : list
        (source label, target label, probability or None) records.
    directed : bool
        whether records are directed edges or undirected pairs.
    weighted : bool
        whether the records carry probabilities.
    labels : list
        distinct labels in first-appearance order.

    """

    def __init__(self, pairs, directed=True):
        self.pairs = pairs
        self.directed = directed

    @property
    def pairs(self):
        return self.__pairs

    @pairs.setter
    def pairs(self, pairs):
        if not isinstance(pairs, list):
            raise type_error("pairs", list, type(pairs))
        pairs = [(str(u), str(v), None if p is None else float(p)) for u, v, p in pairs]
        weights = set(p is None for _, _, p in pairs)
        if len(weights) > 1:
            raise DataError("Either all records carry a probability or none does.")
        self.__pairs = pairs

    @property
    def directed(self):
        return self.__directed

    @directed.setter
    def directed(self, directed):
        if isinstance(directed, bool):
            self.__directed = directed
        else:
            raise type_error("directed", bool, type(directed))

    @property
    def weighted(self):
        return bool(self.pairs) and self.pairs[0][2] is not None

    @property
    def labels(self):
        seen = {}
        for u, v, _ in self.pairs:
            seen.setdefault(u, len(seen))
            seen.setdefault(v, len(seen))
        return list(seen)

    def __len__(self):
        return len(self.pairs)


def load_edge_list(path, directed=True):
    """
    Parses an edge-list file.

    Parameters
    ----------
    path : str
        path to the file.
    directed : bool
        whether records are directed edges or undirected pairs.

    Returns
    -------
    raw : RawEdgeList
        the parsed records, in file order.

    """

    pairs = []
    arity = None
    with io.open(path, encoding="utf-8") as edge_file:
        for line_no, line in enumerate(edge_file, start=1):
            line = line.strip()
            if not line or line.startswith(COMMENT_PREFIXES):
                continue
            fields = line.split()
            if len(fields) not in (2, 3):
                raise parse_error(
                    path, line_no, "expected 2 or 3 fields, found {}".format(len(fields))
                )
            if arity is None:
                arity = len(fields)
            elif arity != len(fields):
                raise parse_error(
                    path,
                    line_no,
                    "mixed record arity ({} and {} fields)".format(arity, len(fields)),
                )
            prob = None
            if len(fields) == 3:
                try:
                    prob = float(fields[2])
                except ValueError:
                    raise parse_error(
                        path, line_no, "'{}' is not a probability".format(fields[2])
                    )
            pairs.append((fields[0], fields[1], prob))

    return RawEdgeList(pairs, directed=directed)


def build_graph(raw):
    """
    Builds an influence graph from weighted records.

    Self-loops are dropped with a warning. Duplicate directed edges are an
    error because the model holds exactly one probability per edge. Undirected
    records produce one edge in each direction with the same probability.

    Parameters
    ----------
    raw : RawEdgeList
        the parsed records; must carry probabilities.

    Returns
    -------
    graph : InfluenceGraph
        dense ids in first-appearance order.

    """

    if not isinstance(raw, RawEdgeList):
        raise type_error("raw", RawEdgeList, type(raw))
    if raw.pairs and not raw.weighted:
        raise DataError(
            "Records carry no probabilities; use the WC or TV transform instead."
        )

    index = {}
    edges = []
    self_loops = 0
    for u, v, p in raw.pairs:
        uid = index.setdefault(u, len(index))
        vid = index.setdefault(v, len(index))
        if uid == vid:
            self_loops += 1
            continue
        edges.append((uid, vid, p))
        if not raw.directed:
            edges.append((vid, uid, p))

    if self_loops:
        warnings.warn("Dropped {} self-loop(s).".format(self_loops))

    return InfluenceGraph(len(index), edges, labels=list(index))
