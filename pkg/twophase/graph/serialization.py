#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Native graph format

    A versioned text format for fast reloading of influence graphs:

        # twophase-graph 1
        nodes <n>
        <label of node 0>
        ...
        edges <m>
        <source id> <target id> <probability>
        ...

    Probabilities are written with repr() so a save/load cycle reproduces
    the graph exactly. Labels may not contain line breaks.

    License: GNU Affero General Public License v3.0
"""

import hashlib
import io

from twophase import EXAMPLE1_PATH
from twophase.errors import DataError, parse_error, value_error
from twophase.graph.edge_list import build_graph, load_edge_list
from twophase.graph.influence_graph import InfluenceGraph
from twophase.graph.transforms import apply_tv_transform, apply_wc_transform

HEADER = "# twophase-graph"
FORMAT_VERSION = 1
BUILTIN_GRAPHS = {"example1": EXAMPLE1_PATH}
TRANSFORMS = ("native", "wc", "tv")


def save_graph(graph, path):
    """Writes a graph in the native format."""

    with io.open(path, "w", encoding="utf-8") as graph_file:
        graph_file.write(u"{} {}\n".format(HEADER, FORMAT_VERSION))
        graph_file.write(u"nodes {}\n".format(graph.n))
        for label in graph.labels:
            if "\n" in label:
                raise DataError("Label {!r} contains a line break.".format(label))
            graph_file.write(u"{}\n".format(label))
        graph_file.write(u"edges {}\n".format(graph.m))
        for u, v, p in graph.edges():
            graph_file.write(u"{} {} {!r}\n".format(u, v, p))


def is_native(path):
    """Returns True if the file starts with the native-format header."""

    with io.open(path, encoding="utf-8") as graph_file:
        return graph_file.readline().startswith(HEADER)


def load_graph(path):
    """
    Reads a graph written by save_graph.

    Parameters
    ----------
    path : str
        path to a native-format file.

    Returns
    -------
    graph : InfluenceGraph

    """

    with io.open(path, encoding="utf-8") as graph_file:
        lines = graph_file.read().split("\n")

    header = lines[0].split()
    if lines[0].rsplit(" ", 1)[0] != HEADER or len(header) != 3:
        raise parse_error(path, 1, "not a native graph file")
    if int(header[2]) != FORMAT_VERSION:
        raise parse_error(
            path, 1, "unsupported format version {}".format(header[2])
        )

    try:
        n = int(lines[1].split()[1])
        labels = lines[2 : 2 + n]
        m = int(lines[2 + n].split()[1])
        edges = []
        for line in lines[3 + n : 3 + n + m]:
            u, v, p = line.split()
            edges.append((int(u), int(v), float(p)))
    except (IndexError, ValueError):
        raise parse_error(path, len(lines), "truncated or malformed native graph file")

    if len(edges) != m or len(labels) != n:
        raise parse_error(path, len(lines), "truncated native graph file")

    return InfluenceGraph(n, edges, labels=labels)


def read_graph(source, transform="native", seed=None, directed=True):
    """
    Loads a graph from a built-in name, a native file, or an edge list.

    Parameters
    ----------
    source : str
        'example1', a native-format file, or an edge-list file.
    transform : str
        'native' (use the probabilities in the file), 'wc' or 'tv'.
    seed : int
        seed of the TV assignment.
    directed : bool
        whether weighted edge-list records are directed.

    Returns
    -------
    graph : InfluenceGraph

    """

    if transform not in TRANSFORMS:
        raise value_error("transform", "one of {}".format(TRANSFORMS), transform)

    path = BUILTIN_GRAPHS.get(source, source)
    if is_native(path):
        if transform != "native":
            raise DataError("A native graph file already carries probabilities.")
        return load_graph(path)

    raw = load_edge_list(path, directed=directed and transform == "native")
    if transform == "wc":
        return apply_wc_transform(raw)
    if transform == "tv":
        if seed is None:
            raise DataError("The TV transform needs a seed.")
        return apply_tv_transform(raw, seed)

    return build_graph(raw)


def file_digest(path):
    """SHA-256 of a file, or of the built-in instance it names."""

    path = BUILTIN_GRAPHS.get(path, path)
    digest = hashlib.sha256()
    with open(path, "rb") as data:
        for block in iter(lambda: data.read(1 << 16), b""):
            digest.update(block)

    return digest.hexdigest()
