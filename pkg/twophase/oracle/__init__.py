#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Oracle

    Exact sigma, nu and two-phase objective values on small graphs by
    live-graph enumeration.

    License: GNU Affero General Public License v3.0
"""

from twophase.oracle.live_graphs import (
    DEFAULT_EDGE_CAP,
    LiveGraph,
    enumerate_live_graphs,
)
from twophase.oracle.exact import (
    DEFAULT_SUBSET_CAP,
    ExactOracle,
    ExactValue,
    exact_f,
    exact_nu,
    exact_sigma,
)
