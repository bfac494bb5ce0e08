#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest
import random

import numpy as np

from twophase.search import LocalSearch, Node, Problem, multiple_comparison, pairwise_comparison


class LineProblem(Problem):
    """Integers 0..10, peak at 7."""

    def __init__(self, init_state=0):
        super(LineProblem, self).__init__(init_state, maximality=True, lexi=False)

    def get_successors(self, state):
        return [x for x in (state - 1, state + 1) if 0 <= x <= 10]

    def get_value(self, state):
        return -abs(state - 7)

    def get_random_restart(self, rng):
        return int(rng.integers(0, 11))


def test_pairwise_comparison_minimize():
    assert pairwise_comparison((2, 3, 4, 9), (2, 3, 5, 7), find_min=False)


def test_pairwise_comparison_maximize():
    assert pairwise_comparison((2, 3, 5, 7), (2, 3, 4, 9), find_min=True)


def test_pairwise_comparison_equal():
    assert not pairwise_comparison((1, 2), (1, 2), find_min=True)
    with pytest.raises(ValueError):
        pairwise_comparison((1, 2), (1, 2, 3))


def test_multiple_comparison_minimize():
    tuples = [(3, 3, 4, 9), (2, 4, 4, 9), (2, 3, 5, 9), (2, 3, 4, 10)]
    random.shuffle(tuples)
    assert tuples[multiple_comparison(tuples, find_min=False)] == (3, 3, 4, 9)


def test_multiple_comparison_maximize():
    tuples = [(3, 3, 4, 9), (2, 4, 4, 9), (2, 3, 5, 9), (2, 3, 4, 10)]
    random.shuffle(tuples)
    assert tuples[multiple_comparison(tuples, find_min=True)] == (2, 3, 4, 10)


def test_multiple_comparison_ties():
    assert multiple_comparison([(1,), (2,), (2,)], find_min=False) == 1
    with pytest.raises(ValueError):
        multiple_comparison([])


def test_steepest_climb():
    search = LocalSearch(LineProblem(2))

    assert search.simple("steepest") == 7
    assert [state for state, _ in search.trajectory] == [2, 3, 4, 5, 6, 7]


def test_greedy_steps():
    search = LocalSearch(LineProblem(2))

    assert search.simple("greedy", steps=8) == 6
    assert search.iterations == 8


def test_stochastic_needs_rng():
    with pytest.raises(ValueError):
        LocalSearch(LineProblem()).simple("stochastic")
    assert LocalSearch(LineProblem(9)).simple("stochastic", rng=np.random.default_rng(0)) == 7


def test_sample():
    search = LocalSearch(LineProblem())
    best = search.sample(30, np.random.default_rng(1))

    assert search.iterations == 30
    assert len(search.trajectory) == 30
    assert -abs(best - 7) == max(value for _, value in search.trajectory)


def test_node_expands_once():
    root = Node(LineProblem(), 0)
    child = root.expand()[0]

    assert root.expand() is root.successors
    assert child.state == 1
    assert child.depth == 1
    assert child.path() == [(0, -7), (1, -6)]
    with pytest.raises(TypeError):
        Node(object(), 0)
