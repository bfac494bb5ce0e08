#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Two-Phase Influence Maximization

    Library and command-line tools for two-phase influence maximization under
    the independent cascade model: a first set of seed nodes is activated at
    time step 0, the diffusion is observed at a later time step d, and the
    remaining budget is spent on a second set of seeds chosen on the residual
    network.

    The package contains Monte-Carlo diffusion simulation with mid-run
    observation, an exact brute-force oracle for small graphs, seed selection
    algorithms (SD, WD, GDD, greedy, RMax, SPIC, FACE), and optimizers for the
    budget split and for scheduling the second phase.

    License: GNU Affero General Public License v3.0
"""

from os.path import dirname, abspath

from twophase.__version__ import __version__

LIB_PATH = abspath(dirname(__file__))
DATA_PATH = abspath(LIB_PATH + "/data")
EXAMPLE1_PATH = abspath(DATA_PATH + "/example1.txt")
