#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from twophase.diffusion import MonteCarloConfig
from twophase.graph import InfluenceGraph, instance_family, read_graph


@pytest.fixture
def example1():
    return read_graph("example1")


@pytest.fixture
def chain():
    def build(n, p=1.0):
        return InfluenceGraph(n, [(i, i + 1, p) for i in range(n - 1)])

    return build


@pytest.fixture
def two_nodes():
    return InfluenceGraph(2, [(0, 1, 1.0)], labels=["a", "b"])


@pytest.fixture
def family():
    return list(instance_family(6, max_nodes=5, max_edges=7, seed=3))


@pytest.fixture
def mc():
    return MonteCarloConfig(
        single_phase_sims=4000, phase1_sims=200, phase2_sims=20, master_seed=11
    )
