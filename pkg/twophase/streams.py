#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Random streams

    Counter-based derivation of random number generators. Replicate i of a
    phase draws from a generator seeded by (master seed, phase tag, i), so
    replicates are independent of each other, of their execution order and of
    the number of replicates run before them.

    License: GNU Affero General Public License v3.0
"""

import numpy as np

SINGLE_PHASE = 0
FIRST_PHASE = 1
SECOND_PHASE = 2
TRIVALENCY = 3
RMAX = 4
SHAPLEY = 5
CROSS_ENTROPY = 6
HORIZON_PROBE = 7
INSTANCE = 8


def stream(master_seed, tag, *counters):
    """
    Returns the generator of one replicate.

    Parameters
    ----------
    master_seed : int
        the experiment's master seed.
    tag : int
        one of the phase tags defined in this module.
    counters : int
        replicate indices (outer index, inner index, ...).

    Returns
    -------
    rng : numpy.random.Generator

    """

    entropy = [int(master_seed), int(tag)] + [int(x) for x in counters]

    return np.random.default_rng(np.random.SeedSequence(entropy))


def fresh_seed():
    """Draws a master seed from OS entropy, for runs that did not fix one."""

    return int(np.random.SeedSequence().entropy % (2 ** 63))
