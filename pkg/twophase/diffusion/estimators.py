#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Spread estimators

    Monte-Carlo estimators of the expected spread sigma(S) and of the
    decay-weighted value nu(S). Replicate i of an estimate runs on the stream
    (master seed, tag, i); replicates may be spread over a process pool and
    are reduced in replicate-index order, so results do not depend on the
    number of workers.

    License: GNU Affero General Public License v3.0
"""

import math
from multiprocessing import Pool

import numpy as np
import pandas as pd

from twophase import streams
from twophase.diffusion.cascade import simulate_ic
from twophase.diffusion.decay import DecayFunction
from twophase.errors import type_error, value_error
from twophase.utils import checked_float, checked_int, mean_and_stderr, node_tuple


class SpreadEstimate(object):
    """
    Defines a Monte-Carlo estimate of sigma or nu.

    Parameters
    ----------
    mean : float
        expected node count or decay-weighted value.
    stderr : float
        standard error of the mean.
    samples : int
        number of replicates.

    """

    def __init__(self, mean, stderr=0.0, samples=1):
        self.__mean = checked_float("mean", mean, low=0.0)
        self.__stderr = checked_float("stderr", stderr, low=0.0)
        self.__samples = checked_int("samples", samples, low=1)

    @classmethod
    def from_values(cls, values):
        """Builds an estimate from per-replicate values."""

        if not len(values):
            raise value_error("values", "at least one replicate", len(values))
        mean, stderr = mean_and_stderr(values)

        return cls(max(mean, 0.0), stderr, len(values))

    @classmethod
    def exact(cls, value):
        return cls(value, 0.0, 1)

    @property
    def mean(self):
        return self.__mean

    @property
    def stderr(self):
        return self.__stderr

    @property
    def samples(self):
        return self.__samples

    def pooled_stderr(self, other):
        """Standard error of the difference of two independent estimates."""

        return math.sqrt(self.stderr ** 2 + other.stderr ** 2)

    def as_dict(self):
        return {"mean": self.mean, "stderr": self.stderr, "samples": self.samples}

    def __float__(self):
        return self.__mean

    def __eq__(self, other):
        if not isinstance(other, SpreadEstimate):
            return NotImplemented
        return (self.mean, self.stderr, self.samples) == (
            other.mean,
            other.stderr,
            other.samples,
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "SpreadEstimate({:.6g} +/- {:.3g}, samples={})".format(
            self.mean, self.stderr, self.samples
        )


class MonteCarloConfig(object):
    """
    Defines the Monte-Carlo budget of an experiment.

    Parameters
    ----------
    single_phase_sims : int
        replicates of a single-phase estimate.
    phase1_sims : int
        outer (first-phase) replicates of a two-phase estimate.
    phase2_sims : int
        inner (second-phase) replicates per outer replicate.
    master_seed : int
        root of every random stream; drawn from OS entropy when None.
    workers : int
        processes used for replicate evaluation.

    """

    def __init__(
        self,
        single_phase_sims=10 ** 4,
        phase1_sims=10 ** 3,
        phase2_sims=10 ** 3,
        master_seed=None,
        workers=1,
    ):
        self.single_phase_sims = single_phase_sims
        self.phase1_sims = phase1_sims
        self.phase2_sims = phase2_sims
        self.master_seed = streams.fresh_seed() if master_seed is None else master_seed
        self.workers = workers

    @property
    def single_phase_sims(self):
        return self.__single_phase_sims

    @single_phase_sims.setter
    def single_phase_sims(self, sims):
        self.__single_phase_sims = checked_int("single_phase_sims", sims, low=1)

    @property
    def phase1_sims(self):
        return self.__phase1_sims

    @phase1_sims.setter
    def phase1_sims(self, sims):
        self.__phase1_sims = checked_int("phase1_sims", sims, low=1)

    @property
    def phase2_sims(self):
        return self.__phase2_sims

    @phase2_sims.setter
    def phase2_sims(self, sims):
        self.__phase2_sims = checked_int("phase2_sims", sims, low=1)

    @property
    def master_seed(self):
        return self.__master_seed

    @master_seed.setter
    def master_seed(self, seed):
        self.__master_seed = checked_int("master_seed", seed, low=0)

    @property
    def workers(self):
        return self.__workers

    @workers.setter
    def workers(self, workers):
        self.__workers = checked_int("workers", workers, low=1)

    def replace(self, **changes):
        """Returns a copy with some fields changed."""

        fields = self.as_dict()
        fields.update(changes)
        return MonteCarloConfig(**fields)

    def as_dict(self):
        return {
            "single_phase_sims": self.single_phase_sims,
            "phase1_sims": self.phase1_sims,
            "phase2_sims": self.phase2_sims,
            "master_seed": self.master_seed,
            "workers": self.workers,
        }

    def __repr__(self):
        return "MonteCarloConfig({})".format(
            ", ".join("{}={}".format(k, v) for k, v in self.as_dict().items())
        )


class Progression(object):
    """
    Accumulates the number of newly active nodes per absolute time step over
    replicates.

    Counts are integers, so the sums are exact whatever the reduction order.
    """

    def __init__(self, horizon):
        self.__sum = np.zeros(horizon + 1, dtype=np.int64)
        self.__sum_sq = np.zeros(horizon + 1, dtype=np.int64)
        self.__replicates = 0

    @property
    def replicates(self):
        return self.__replicates

    def add(self, counts, offset=0):
        """Adds the per-step counts of one replicate starting at step offset."""

        counts = np.asarray(counts, dtype=np.int64)
        end = offset + len(counts)
        if end > len(self.__sum):
            self.__grow(end)
        self.__sum[offset:end] += counts
        self.__sum_sq[offset:end] += counts ** 2

    def close_replicate(self):
        self.__replicates += 1

    def merge(self, other):
        if len(other.sums()[0]) > len(self.__sum):
            self.__grow(len(other.sums()[0]))
        sums, sums_sq = other.sums()
        self.__sum[: len(sums)] += sums
        self.__sum_sq[: len(sums_sq)] += sums_sq
        self.__replicates += other.replicates

    def sums(self):
        return self.__sum, self.__sum_sq

    def __grow(self, length):
        pad = length - len(self.__sum)
        self.__sum = np.concatenate([self.__sum, np.zeros(pad, dtype=np.int64)])
        self.__sum_sq = np.concatenate([self.__sum_sq, np.zeros(pad, dtype=np.int64)])

    def to_frame(self):
        """Returns a DataFrame with columns (t, new_activations_mean, stderr)."""

        r = max(self.__replicates, 1)
        last = np.flatnonzero(self.__sum)
        length = int(last[-1]) + 1 if len(last) else 1
        mean = self.__sum[:length] / float(r)
        if r > 1:
            var = (self.__sum_sq[:length] - r * mean ** 2) / (r - 1.0)
            stderr = np.sqrt(np.maximum(var, 0.0) / r)
        else:
            stderr = np.zeros(length)

        return pd.DataFrame(
            {"t": np.arange(length), "new_activations_mean": mean, "stderr": stderr}
        )


def _rollout_chunk(args):
    """Runs replicates [start, stop) and returns (values, progression)."""

    graph, seeds, master_seed, tag, start, stop, decay, stop_at, offset = args
    values = np.empty(stop - start, dtype=np.float64)
    progression = Progression(graph.n + offset)
    for i in range(start, stop):
        trace = simulate_ic(graph, seeds, streams.stream(master_seed, tag, i), stop_at)
        values[i - start] = trace.value(decay, offset)
        progression.add(trace.new_activations(), offset)
        progression.close_replicate()

    return values, progression


def rollout(
    graph,
    seeds,
    config,
    sims,
    decay=None,
    tag=streams.SINGLE_PHASE,
    stop_at=None,
    offset=0,
):
    """
    Simulates sims replicates and returns their values and the progression.

    Parameters
    ----------
    graph : InfluenceGraph
    seeds : iterable
    config : MonteCarloConfig
    sims : int
    decay : DecayFunction
        weights activations by decay(t); plain counts when None.
    tag : int
        stream tag of the replicates.
    stop_at : int
        step limit of every cascade.
    offset : int
        absolute time of step 0, for cascades seeded after a delay.

    Returns
    -------
    values : ndarray
        per-replicate values in replicate-index order.
    progression : Progression

    """

    if not isinstance(config, MonteCarloConfig):
        raise type_error("config", MonteCarloConfig, type(config))
    sims = checked_int("sims", sims, low=1)
    seeds = node_tuple(seeds)
    graph.check_nodes(seeds)

    workers = min(config.workers, sims)
    bounds = np.linspace(0, sims, workers + 1).astype(int)
    chunks = [
        (graph, seeds, config.master_seed, tag, bounds[i], bounds[i + 1], decay, stop_at, offset)
        for i in range(workers)
    ]
    if workers == 1:
        results = [_rollout_chunk(chunks[0])]
    else:
        with Pool(workers) as pool:
            results = pool.map(_rollout_chunk, chunks)

    progression = Progression(graph.n + offset)
    for _, chunk_progression in results:
        progression.merge(chunk_progression)

    return np.concatenate([values for values, _ in results]), progression


def estimate_spread(graph, seeds, config, sims=None):
    """
    Estimates sigma(S), the expected number of active nodes at termination.

    Parameters
    ----------
    graph : InfluenceGraph
    seeds : iterable
    config : MonteCarloConfig
    sims : int
        defaults to config.single_phase_sims.

    Returns
    -------
    estimate : SpreadEstimate

    """

    sims = config.single_phase_sims if sims is None else sims
    values, _ = rollout(graph, seeds, config, sims)

    return SpreadEstimate.from_values(values)


def estimate_temporal_spread(graph, seeds, decay, config, sims=None):
    """
    Estimates nu(S), the expected sum of decay(t_j) over activated nodes j.

    With a constant decay the replicate values are the plain counts, so the
    estimate equals estimate_spread bit for bit.
    """

    sims = config.single_phase_sims if sims is None else sims
    values, _ = rollout(graph, seeds, config, sims, decay=decay)

    return SpreadEstimate.from_values(values)


def spread_progression(graph, seeds, config, sims=None):
    """Returns (SpreadEstimate, progression DataFrame) of a single-phase run."""

    sims = config.single_phase_sims if sims is None else sims
    values, progression = rollout(graph, seeds, config, sims)

    return SpreadEstimate.from_values(values), progression.to_frame()


def checked_decay(decay):
    """Returns None for plain spread, else the decay function itself."""

    if decay is None:
        return None
    if not isinstance(decay, DecayFunction):
        raise type_error("decay", DecayFunction, type(decay))

    return None if decay.is_constant else decay
