#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    CeDistribution class definition

    The sampling distribution of the cross-entropy optimizer: independent
    per-node inclusion probabilities, plus categoricals over the first-phase
    budget and the delay when the split and the schedule are optimized too.

    License: GNU Affero General Public License v3.0
"""

import numpy as np

from twophase.errors import value_error
from twophase.selection.degree import GddState
from twophase.utils import checked_int

SUM_TOLERANCE = 1e-9


def _probabilities(var_name, probs, categorical=False):
    probs = np.array(probs, dtype=np.float64)
    if probs.ndim != 1 or np.any(probs < 0.0) or np.any(probs > 1.0):
        raise value_error(var_name, "a vector of probabilities in [0, 1]", probs)
    if categorical and abs(probs.sum() - 1.0) > SUM_TOLERANCE:
        raise value_error("sum of {}".format(var_name), 1.0, probs.sum())

    return probs


class CeDistribution(object):
    """
    Defines a product distribution over node sets.

    Parameters
    ----------
    node_probs : array_like
        inclusion probability q_v of every candidate.
    k1_probs : array_like
        categorical over the first-phase budgets 1..k (joint mode).
    d_probs : array_like
        categorical over the delays 0..D (joint mode).

    """

    def __init__(self, node_probs, k1_probs=None, d_probs=None):
        self.node_probs = node_probs
        self.k1_probs = k1_probs
        self.d_probs = d_probs

    @property
    def node_probs(self):
        return self.__node_probs

    @node_probs.setter
    def node_probs(self, probs):
        self.__node_probs = _probabilities("node_probs", probs)

    @property
    def k1_probs(self):
        return self.__k1_probs

    @k1_probs.setter
    def k1_probs(self, probs):
        self.__k1_probs = None if probs is None else _probabilities("k1_probs", probs, True)

    @property
    def d_probs(self):
        return self.__d_probs

    @d_probs.setter
    def d_probs(self, probs):
        self.__d_probs = None if probs is None else _probabilities("d_probs", probs, True)

    @property
    def joint(self):
        return self.__k1_probs is not None

    def sample_set(self, size, rng):
        """
        Draws a set of exactly `size` candidate indices.

        Bernoulli draws by q are repaired to the exact size by adding the
        excluded nodes of highest q or dropping the included nodes of lowest q,
        random among equal q.
        """

        q = self.__node_probs
        size = checked_int("size", size, low=0, high=len(q))
        include = rng.random(len(q)) < q
        jitter = rng.random(len(q))
        count = int(include.sum())
        if count < size:
            order = np.lexsort((jitter, -q))
            missing = [i for i in order if not include[i]][: size - count]
            include[missing] = True
        elif count > size:
            order = np.lexsort((jitter, q))
            extra = [i for i in order if include[i]][: count - size]
            include[extra] = False

        return np.flatnonzero(include)

    def sample_k1(self, rng):
        return int(rng.choice(len(self.__k1_probs), p=self.__k1_probs)) + 1

    def sample_d(self, rng):
        return int(rng.choice(len(self.__d_probs), p=self.__d_probs))

    def smoothed(self, target, alpha):
        """Returns alpha * target + (1 - alpha) * self."""

        def mix(new, old):
            if old is None:
                return None
            mixed = alpha * new + (1.0 - alpha) * old
            return np.clip(mixed, 0.0, 1.0)

        k1_probs = mix(target.k1_probs, self.__k1_probs)
        d_probs = mix(target.d_probs, self.__d_probs)
        return CeDistribution(
            mix(target.node_probs, self.__node_probs),
            None if k1_probs is None else k1_probs / k1_probs.sum(),
            None if d_probs is None else d_probs / d_probs.sum(),
        )

    def is_degenerate(self, tol=0.01):
        """True when every probability is within tol of 0 or 1."""

        for probs in (self.__node_probs, self.__k1_probs, self.__d_probs):
            if probs is not None and np.any(np.minimum(probs, 1.0 - probs) > tol):
                return False
        return True

    def __repr__(self):
        return "CeDistribution(nodes={}, joint={})".format(len(self.__node_probs), self.joint)


def redistribute(weights, total):
    """
    Scales weights to probabilities summing to total, none above 1.

    Values above 1 are clamped to 1 and their surplus is spread over the
    remaining nodes in proportion to their current values, until no value
    exceeds 1.

    Parameters
    ----------
    weights : array_like
        non-negative node weights.
    total : int
        the target sum, at most the number of weights.

    Returns
    -------
    probs : ndarray

    """

    weights = np.asarray(weights, dtype=np.float64)
    total = checked_int("total", total, low=0, high=len(weights))
    if np.any(weights < 0.0):
        raise value_error("weights", "non-negative values", weights)
    if not len(weights):
        return weights

    if weights.sum() > 0.0:
        probs = total * weights / weights.sum()
    else:
        probs = np.full(len(weights), float(total) / len(weights))

    clamped = np.zeros(len(probs), dtype=bool)
    while True:
        over = (probs > 1.0) & ~clamped
        if not np.any(over):
            break
        surplus = float(np.sum(probs[over] - 1.0))
        probs[over] = 1.0
        clamped |= over
        free = ~clamped
        if not np.any(free):
            break
        base = probs[free].sum()
        if base > 0.0:
            probs[free] += surplus * probs[free] / base
        else:
            probs[free] += surplus / free.sum()

    return probs


def init_uniform(n, k1):
    """q_i = k1 / n for every node."""

    k1 = checked_int("k1", k1, low=0, high=n)
    return CeDistribution(np.full(n, float(k1) / n) if n else np.zeros(0))


def init_weighted(graph, k1, candidates=None, preselected=()):
    """
    q_i proportional to the GDD weight w_i of node i, summing to k1.

    Parameters
    ----------
    graph : InfluenceGraph
    k1 : int
        the expected set size.
    candidates : iterable
        node ids the distribution ranges over; all nodes by default.
    preselected : iterable
        nodes already seeded, whose discounts apply to the weights.

    Returns
    -------
    distribution : CeDistribution

    """

    weights = GddState(graph, preselected).weights
    if candidates is not None:
        weights = weights[list(candidates)]

    return CeDistribution(redistribute(weights, k1))
