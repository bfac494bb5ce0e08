#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Cross Entropy

    The fully adaptive cross-entropy (FACE) optimizer over seed sets, alone
    or jointly with the budget split and the delay.

    License: GNU Affero General Public License v3.0
"""

from twophase.cross_entropy.config import CeConfig
from twophase.cross_entropy.distribution import (
    CeDistribution,
    init_uniform,
    init_weighted,
    redistribute,
)
from twophase.cross_entropy.face import CeSample, face_joint_optimize, face_select
