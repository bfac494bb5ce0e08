#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Error handling

    Exception helpers and the exception hierarchy used across the package. The
    command-line interface maps DataError and CapacityError to exit code 2 and
    ReproducibilityError to exit code 3.

    License: GNU Affero General Public License v3.0
"""


class TwoPhaseError(Exception):
    """Base class of all errors raised on purpose by the package."""


class DataError(TwoPhaseError, ValueError):
    """Malformed input data: edge lists, probabilities, records."""


class CapacityError(TwoPhaseError, ValueError):
    """A computation would exceed one of the configured size caps."""


class ReproducibilityError(TwoPhaseError):
    """A stored run could not be reproduced."""


def type_error(var_name, valid_type, invalid_type):
    """Returns a TypeError for the specific case.

    Keyword arguments:
    var_name -- name of the variable raising the error (str)
    valid_type -- type of the variable that should hold (type)
    invalid_type -- type of the variable
    """

    return TypeError(
        "'{}' type used for '{}'. Only '{}' type is valid for '{}'.".format(
            invalid_type.__name__, var_name, valid_type.__name__, var_name
        )
    )


def value_error(var_name, condition, value):

    return ValueError(
        "'{}' has value of '{}'. Only '{}' is valid for '{}'.".format(
            var_name, value, condition, var_name
        )
    )


def range_error(var_name, low, high, value):
    """Returns a ValueError for a value outside the closed range [low, high]."""

    return value_error(var_name, "{} <= {} <= {}".format(low, var_name, high), value)


def length_error(var_name, valid_length, invalid_length):

    return value_error("Length of {}".format(var_name), valid_length, invalid_length)


def parse_error(path, line_no, message):
    """Returns a DataError pointing at a line of an input file."""

    return DataError("{}:{}: {}".format(path, line_no, message))
