#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Scheduling

    Optimization of the budget split k1 : k2 and of the delay d: the
    exhaustive grid, golden-section search over k1 with a sequential delay
    search, joint FACE, the delay horizon D and the split rules of greedy
    and RMax.

    License: GNU Affero General Public License v3.0
"""

from twophase.scheduling.config import (
    GRID_COLUMNS,
    OBJECTIVE_MODES,
    GridResult,
    PlanValue,
    SearchConfig,
)
from twophase.scheduling.evaluators import (
    PlanEvaluator,
    make_evaluator,
    oracle_evaluator,
    pipeline_evaluator,
)
from twophase.scheduling.search import (
    exhaustive_grid,
    face_joint_schedule,
    golden_section_k1,
    sequential_d_search,
)
from twophase.scheduling.horizon import DEFAULT_MARGIN, estimate_D
from twophase.scheduling.split import PREFIX_COLUMNS, prefix_split, rmax_split
