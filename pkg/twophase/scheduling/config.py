#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    SearchConfig and GridResult class definitions

    License: GNU Affero General Public License v3.0
"""

from collections import namedtuple

import pandas as pd

from twophase.diffusion import DecayFunction, SpreadEstimate
from twophase.errors import type_error, value_error
from twophase.utils import checked_float, checked_int

OBJECTIVE_MODES = ("sigma", "nu")
GRID_COLUMNS = ["k1", "d", "mean", "stderr"]

# value of an injected objective, which may be negative
PlanValue = namedtuple("PlanValue", ["mean", "stderr"])


class SearchConfig(object):
    """
    Defines a budget-split and delay search.

    Parameters
    ----------
    k_total : int
        the total budget k.
    d_max : int
        the largest delay D.
    decay : DecayFunction
        time weighting of activations; None for plain spread.
    k1_grid_step : int
        spacing of the probed k1 values; defaults to max(1, k // 20).
    objective_mode : str
        'sigma' or 'nu'; defaults to 'nu' under a non-constant decay.
    patience : int
        consecutive non-improving delays after which the delay search stops.
    eval_budget : int
        largest number of plan evaluations an exhaustive grid may make; None
        for no limit.
    tie_stderr : float
        values closer than tie_stderr pooled standard errors are tied.

    """

    def __init__(
        self,
        k_total,
        d_max,
        decay=None,
        k1_grid_step=None,
        objective_mode=None,
        patience=2,
        eval_budget=None,
        tie_stderr=1.0,
    ):
        self.k_total = k_total
        self.d_max = d_max
        self.decay = decay
        self.k1_grid_step = k1_grid_step
        self.objective_mode = objective_mode
        self.patience = patience
        self.eval_budget = eval_budget
        self.tie_stderr = tie_stderr

    @property
    def k_total(self):
        return self.__k_total

    @k_total.setter
    def k_total(self, k):
        self.__k_total = checked_int("k_total", k, low=0)

    @property
    def d_max(self):
        return self.__d_max

    @d_max.setter
    def d_max(self, d_max):
        self.__d_max = checked_int("d_max", d_max, low=0)

    @property
    def decay(self):
        return self.__decay

    @decay.setter
    def decay(self, decay):
        if decay is not None and not isinstance(decay, DecayFunction):
            raise type_error("decay", DecayFunction, type(decay))
        self.__decay = decay

    @property
    def k1_grid_step(self):
        if self.__k1_grid_step is None:
            return max(1, self.__k_total // 20)
        return self.__k1_grid_step

    @k1_grid_step.setter
    def k1_grid_step(self, step):
        self.__k1_grid_step = None if step is None else checked_int("k1_grid_step", step, low=1)

    @property
    def objective_mode(self):
        if self.__objective_mode is None:
            return "sigma" if self.__decay is None or self.__decay.is_constant else "nu"
        return self.__objective_mode

    @objective_mode.setter
    def objective_mode(self, mode):
        if mode is not None and mode not in OBJECTIVE_MODES:
            raise value_error("objective_mode", "one of {}".format(OBJECTIVE_MODES), mode)
        if mode == "nu" and self.__decay is None:
            raise ValueError("The 'nu' objective needs a decay function.")
        self.__objective_mode = mode

    @property
    def effective_decay(self):
        """The decay values are weighted by; None when nothing decays."""

        if self.objective_mode == "sigma" or self.__decay.is_constant:
            return None
        return self.__decay

    @property
    def patience(self):
        return self.__patience

    @patience.setter
    def patience(self, patience):
        self.__patience = checked_int("patience", patience, low=1)

    @property
    def eval_budget(self):
        return self.__eval_budget

    @eval_budget.setter
    def eval_budget(self, budget):
        self.__eval_budget = None if budget is None else checked_int("eval_budget", budget, low=1)

    @property
    def tie_stderr(self):
        return self.__tie_stderr

    @tie_stderr.setter
    def tie_stderr(self, tie_stderr):
        self.__tie_stderr = checked_float("tie_stderr", tie_stderr, low=0.0)

    def k1_grid(self):
        """0, step, 2 * step, ..., always ending with k."""

        grid = list(range(0, self.__k_total + 1, self.k1_grid_step))
        if grid[-1] != self.__k_total:
            grid.append(self.__k_total)
        return grid

    def as_dict(self):
        return {
            "k_total": self.__k_total,
            "d_max": self.__d_max,
            "decay": None if self.__decay is None else self.__decay.as_dict(),
            "k1_grid_step": self.k1_grid_step,
            "objective_mode": self.objective_mode,
            "patience": self.__patience,
            "eval_budget": self.__eval_budget,
            "tie_stderr": self.__tie_stderr,
        }

    def __repr__(self):
        return "SearchConfig(k_total={}, d_max={}, objective_mode={!r})".format(
            self.__k_total, self.__d_max, self.objective_mode
        )


class GridResult(object):
    """
    Defines the outcome of an exhaustive (k1, d) grid.

    Parameters
    ----------
    entries : DataFrame
        columns (k1, d, mean, stderr), k1-major.
    best : tuple
        the best (k1, d).
    value : SpreadEstimate or PlanValue
        the value of the best cell.

    """

    def __init__(self, entries, best, value):
        if not isinstance(entries, pd.DataFrame):
            raise type_error("entries", pd.DataFrame, type(entries))
        if list(entries.columns) != GRID_COLUMNS:
            raise value_error("entries columns", GRID_COLUMNS, list(entries.columns))
        if not isinstance(value, (SpreadEstimate, PlanValue)):
            raise type_error("value", SpreadEstimate, type(value))
        self.__entries = entries
        self.__best = (int(best[0]), int(best[1]))
        self.__value = value

    @property
    def entries(self):
        return self.__entries

    @property
    def best(self):
        return self.__best

    @property
    def value(self):
        return self.__value

    def to_csv(self, path):
        self.__entries.to_csv(path, index=False)

    def as_dict(self):
        return {
            "best_k1": self.__best[0],
            "best_d": self.__best[1],
            "spread": self.__value.mean,
            "stderr": self.__value.stderr,
            "cells": len(self.__entries),
        }

    def __repr__(self):
        return "GridResult(best={}, value={!r})".format(self.__best, self.__value)
