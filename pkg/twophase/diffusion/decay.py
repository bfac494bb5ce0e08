#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    DecayFunction class definition

    Time-value weighting of activations: an activation at time step t is worth
    Gamma(t). Two kinds are supported, the constant Gamma(t) = 1 (plain
    spread) and the exponential Gamma(t) = delta ** t.

    License: GNU Affero General Public License v3.0
"""

import numpy as np

from twophase.errors import value_error
from twophase.utils import checked_float

KINDS = ("constant", "exponential")


class DecayFunction(object):
    """
    Defines a non-increasing decay function with values in [0, 1].

    Parameters
    ----------
    kind : str
        'constant' or 'exponential'.
    delta : float
        the base of the exponential kind, in [0, 1].

    Attributes
    ----------
    kind : str
        'constant' or 'exponential'.
    delta : float
        the base of the exponential kind; 1.0 for the constant kind.
    is_constant : bool
        whether Gamma(t) = 1 for every t.

    """

    def __init__(self, kind="constant", delta=1.0):
        self.kind = kind
        self.delta = delta

    @classmethod
    def constant_one(cls):
        return cls("constant", 1.0)

    @classmethod
    def exponential(cls, delta):
        return cls("exponential", delta)

    @property
    def kind(self):
        return self.__kind

    @kind.setter
    def kind(self, kind):
        if kind not in KINDS:
            raise value_error("kind", "one of {}".format(KINDS), kind)
        self.__kind = kind

    @property
    def delta(self):
        return self.__delta

    @delta.setter
    def delta(self, delta):
        self.__delta = checked_float("delta", delta, 0.0, 1.0)

    @property
    def is_constant(self):
        return self.kind == "constant" or self.delta == 1.0

    def __call__(self, steps):
        """Returns Gamma at the given time step(s); 0 ** 0 counts as 1."""

        if self.is_constant:
            return np.ones_like(np.asarray(steps, dtype=np.float64))
        return np.power(self.delta, np.asarray(steps, dtype=np.float64))

    def weights(self, horizon, offset=0):
        """Gamma(offset), ..., Gamma(offset + horizon - 1) as an array."""

        return self(np.arange(offset, offset + horizon))

    def as_dict(self):
        return {"kind": self.kind, "delta": self.delta}

    def __eq__(self, other):
        if not isinstance(other, DecayFunction):
            return NotImplemented
        return self.kind == other.kind and self.delta == other.delta

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        if self.kind == "constant":
            return "DecayFunction(constant)"
        return "DecayFunction(exponential, delta={})".format(self.delta)
