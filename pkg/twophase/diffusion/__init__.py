#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Diffusion

    Independent cascade simulation with activation-time traces, observation
    of a running cascade at step d, residual graphs, and the Monte-Carlo
    estimators of sigma and nu.

    License: GNU Affero General Public License v3.0
"""

from twophase.diffusion.decay import DecayFunction
from twophase.diffusion.cascade import (
    NEVER,
    DiffusionTrace,
    Observation,
    dump_trace,
    observe,
    observe_at,
    residual_graph,
    simulate_ic,
    to_residual_ids,
)
from twophase.diffusion.estimators import (
    MonteCarloConfig,
    Progression,
    SpreadEstimate,
    checked_decay,
    estimate_spread,
    estimate_temporal_spread,
    rollout,
    spread_progression,
)
