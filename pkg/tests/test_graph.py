#!/usr/bin/env python
# -*- coding: utf-8 -*-

import io

import networkx as nx
import pytest

from twophase import EXAMPLE1_PATH
from twophase.errors import DataError
from twophase.graph import (
    TRIVALENCY_VALUES,
    InfluenceGraph,
    file_digest,
    from_networkx,
    instance_family,
    load_edge_list,
    load_graph,
    read_graph,
    save_graph,
)


def write(path, text):
    with io.open(str(path), "w", encoding="utf-8") as f:
        f.write(text)
    return str(path)


def test_example1(example1):
    assert example1.n == 4
    assert example1.m == 3
    assert example1.labels == ("A", "B", "C", "D")
    assert example1.probability(0, 1) == 0.5
    assert example1.probability(1, 3) == 0.9
    assert example1.probability(1, 0) == 0.0


def test_wc_transform(tmp_path):
    path = write(tmp_path / "star.txt", "# star plus one edge\n1 2\n1 3\n1 4\n3 4\n2 1\n")
    graph = read_graph(path, "wc")

    assert graph.n == 4
    assert graph.m == 8
    hub, leaf = graph.node("1"), graph.node("2")
    assert graph.probability(leaf, hub) == pytest.approx(1.0 / 3.0)
    assert graph.probability(hub, leaf) == pytest.approx(1.0)
    assert graph.probability(graph.node("4"), graph.node("3")) == pytest.approx(0.5)


def test_wc_rejects_weighted_records(tmp_path):
    path = write(tmp_path / "weighted.txt", "a b 0.5\nb c 0.2\n")
    with pytest.raises(DataError):
        read_graph(path, "wc")


def test_tv_transform_is_seeded(tmp_path):
    path = write(tmp_path / "path.txt", "a b\nb c\nc d\nd a\n")
    first = read_graph(path, "tv", seed=5)
    second = read_graph(path, "tv", seed=5)

    assert first == second
    assert first.m == 8
    assert all(p in TRIVALENCY_VALUES for _, _, p in first.edges())


def test_tv_needs_seed(tmp_path):
    path = write(tmp_path / "path.txt", "a b\n")
    with pytest.raises(DataError):
        read_graph(path, "tv")


def test_parse_error_names_line(tmp_path):
    path = write(tmp_path / "bad.txt", "a b 0.5\na b c d\n")
    with pytest.raises(DataError, match=":2:"):
        load_edge_list(path)


def test_self_loops_dropped(tmp_path):
    path = write(tmp_path / "loops.txt", "a a 0.5\na b 0.5\n")
    with pytest.warns(UserWarning):
        graph = read_graph(path)
    assert graph.m == 1


def test_duplicate_edge_rejected(tmp_path):
    path = write(tmp_path / "dup.txt", "a b 0.5\na b 0.7\n")
    with pytest.raises(DataError):
        read_graph(path)


def test_bad_probability_rejected():
    with pytest.raises(DataError):
        InfluenceGraph(2, [(0, 1, 1.5)])


def test_native_round_trip(tmp_path, example1):
    path = str(tmp_path / "example1.graph")
    save_graph(example1, path)

    assert load_graph(path) == example1
    assert read_graph(path) == example1
    with pytest.raises(DataError):
        read_graph(path, "wc")


def test_without(example1):
    residual, kept = example1.without([1])

    assert residual.n == 3
    assert residual.m == 0
    assert list(kept) == [0, 2, 3]
    assert residual.labels == ("A", "C", "D")
    assert list(residual.origin) == [0, 2, 3]


def test_from_networkx_undirected():
    nx_graph = nx.Graph()
    nx_graph.add_edge("x", "y", p=0.3)
    nx_graph.add_edge("y", "z", p=0.6)
    graph = from_networkx(nx_graph)

    assert graph.m == 4
    assert graph.probability(graph.node("z"), graph.node("y")) == 0.6


def test_instance_family_is_seeded():
    first = list(instance_family(5, max_nodes=6, max_edges=9, seed=2))
    second = list(instance_family(5, max_nodes=6, max_edges=9, seed=2))

    assert first == second
    for graph in first:
        assert 3 <= graph.n <= 6
        assert 1 <= graph.m <= 9
        assert all(0.0 <= p <= 1.0 for _, _, p in graph.edges())


def test_file_digest_of_builtin():
    assert file_digest("example1") == file_digest(EXAMPLE1_PATH)
    assert len(file_digest("example1")) == 64


def test_label_count_must_match():
    with pytest.raises(ValueError, match="Length of labels"):
        InfluenceGraph(2, [(0, 1, 0.5)], labels=["a"])
