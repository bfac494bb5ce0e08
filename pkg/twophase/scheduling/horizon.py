#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Delay horizon

    D stands in for the longest path length of the graph: the step after
    which a probe cascade never activates anything, plus a safety margin.

    License: GNU Affero General Public License v3.0
"""

import numpy as np

from twophase import streams
from twophase.diffusion import MonteCarloConfig, rollout
from twophase.errors import type_error
from twophase.selection import select_wd
from twophase.utils import checked_int

DEFAULT_MARGIN = 2


def estimate_D(graph, k, config, margin=DEFAULT_MARGIN, sims=None):
    """
    Estimates the no-constraint delay D.

    Runs `sims` probe cascades from the k WD seeds on the HORIZON_PROBE
    streams and returns the last step at which any of them activated a node,
    plus `margin`. No cascade outlasts n - 1 steps, so D <= n - 1 + margin.

    Parameters
    ----------
    graph : InfluenceGraph
    k : int
        size of the probe seed set.
    config : MonteCarloConfig
    margin : int
        steps added to the observed stagnation point.
    sims : int
        probe replicates; defaults to config.phase1_sims.

    Returns
    -------
    D : int

    """

    if not isinstance(config, MonteCarloConfig):
        raise type_error("config", MonteCarloConfig, type(config))
    margin = checked_int("margin", margin, low=0)
    sims = config.phase1_sims if sims is None else checked_int("sims", sims, low=1)
    seeds = select_wd(graph, min(checked_int("k", k, low=0), graph.n))

    _, progression = rollout(graph, seeds.nodes, config, sims, tag=streams.HORIZON_PROBE)
    active_steps = np.flatnonzero(progression.sums()[0])
    last = int(active_steps[-1]) if len(active_steps) else 0

    return min(last, max(graph.n - 1, 0)) + margin
