#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Proxy agreement

    Compares the GDD-based two-phase value h with the greedy-based value g
    over a list of first-phase sets: Spearman rank correlation of the two
    columns and whether both pick the same best set.

    License: GNU Affero General Public License v3.0
"""

import numpy as np
import pandas as pd
from scipy.stats import spearmanr

from twophase.phases.evaluation import eval_g, eval_h
from twophase.utils import node_tuple

AGREEMENT_COLUMNS = ["s1", "g", "h"]


def rank_agreement(first, second):
    """
    Spearman correlation of two value lists.

    Two constant lists agree perfectly (1.0); a constant list against a
    varying one has no rank information (0.0).
    """

    first = np.asarray(first, dtype=np.float64)
    second = np.asarray(second, dtype=np.float64)
    first_flat = np.ptp(first) == 0.0
    second_flat = np.ptp(second) == 0.0
    if first_flat or second_flat:
        return 1.0 if first_flat and second_flat else 0.0

    rho, _ = spearmanr(first, second)
    return float(rho)


def proxy_agreement(graph, candidate_sets, d, k2, config, decay=None, selection_sims=None):
    """
    Evaluates g and h on every candidate first-phase set.

    Parameters
    ----------
    graph : InfluenceGraph
    candidate_sets : iterable
        first-phase sets to compare.
    d : int
    k2 : int
    config : MonteCarloConfig
    decay : DecayFunction
    selection_sims : int
        replicates per evaluation of the greedy second phase of g.

    Returns
    -------
    frame : DataFrame
        columns (s1, g, h), one row per candidate set.
    rho : float
        Spearman rank correlation of g and h.
    same_best : bool
        whether the first set of highest g is also the first set of highest h.

    """

    rows = []
    for s1 in candidate_sets:
        s1 = node_tuple(s1)
        g = eval_g(graph, s1, d, k2, config, decay, selection_sims).mean
        h = eval_h(graph, s1, d, k2, config, decay).mean
        rows.append([s1, g, h])
    frame = pd.DataFrame(rows, columns=AGREEMENT_COLUMNS)

    if frame.empty:
        return frame, 1.0, True

    rho = rank_agreement(frame["g"], frame["h"])
    same_best = int(np.argmax(frame["g"].values)) == int(np.argmax(frame["h"].values))

    return frame, rho, same_best
