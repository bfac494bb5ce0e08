#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Experiment

    The command-line harness: JSON experiment descriptions, run records with
    deterministic reruns, dataset fetching and CSV/JSON outputs.

    License: GNU Affero General Public License v3.0
"""

from twophase.experiment.config import DELAY_RULES, OPTIMIZERS, ExperimentConfig
from twophase.experiment.records import (
    LOCK_NAME,
    SCHEMA_PATH,
    RunRecord,
    diff_results,
    load_schema,
    output_lock,
    validate_record,
)
from twophase.experiment.datasets import fetch_dataset, list_datasets, load_registry
from twophase.experiment.commands import (
    COMMANDS,
    cmd_oracle,
    cmd_select,
    cmd_transform,
    cmd_twophase,
    execute,
    normalize,
    rerun,
)
