#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Utilities

    Small helpers shared by the configuration classes and the algorithms.

    License: GNU Affero General Public License v3.0
"""

import numbers

import numpy as np

from twophase.errors import type_error, range_error


def is_integer(value):
    """True for Python and numpy integers, False for booleans."""

    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def is_real(value):
    """True for Python and numpy real numbers, False for booleans."""

    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def checked_int(var_name, value, low=None, high=None):
    """Returns value as an int after type and range checks."""

    if not is_integer(value):
        raise type_error(var_name, int, type(value))
    value = int(value)
    if (low is not None and value < low) or (high is not None and value > high):
        raise range_error(var_name, low, high, value)

    return value


def checked_float(var_name, value, low=None, high=None):
    """Returns value as a float after type and range checks."""

    if not is_real(value):
        raise type_error(var_name, float, type(value))
    value = float(value)
    if (low is not None and value < low) or (high is not None and value > high):
        raise range_error(var_name, low, high, value)

    return value


def node_tuple(nodes):
    """Returns a sorted tuple of distinct node ids."""

    return tuple(sorted(set(int(x) for x in nodes)))


def mean_and_stderr(values):
    """Sample mean and standard error of a 1D array of replicate values."""

    values = np.asarray(values, dtype=np.float64)
    if len(values) < 2:
        return float(np.mean(values)) if len(values) else 0.0, 0.0

    return float(np.mean(values)), float(np.std(values, ddof=1) / np.sqrt(len(values)))
