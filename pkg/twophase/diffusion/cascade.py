#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Independent cascade

    Discrete-step simulation of the independent cascade model with activation
    time traces, partial observation of a running cascade, and construction
    of the residual graph on which a second phase is played.

    Edges are sampled when their source activates. Newly active nodes attempt
    their out-neighbors in ascending id order, and each attempt draws from the
    replicate stream, so a trace is a pure function of (graph, seeds, stream).

    License: GNU Affero General Public License v3.0
"""

import io

import numpy as np
import pandas as pd

from twophase.errors import range_error
from twophase.utils import checked_int, node_tuple

NEVER = -1


class DiffusionTrace(object):
    """
    Defines the outcome of one simulated cascade.

    Parameters
    ----------
    activation_time : ndarray
        per-node activation step, NEVER (-1) for nodes that stayed inactive.
    stop_at : int
        the step limit the simulation ran under.

    Attributes
    ----------
    activation_time : ndarray
        per-node activation step; read-only.
    final_active_count : int
        number of nodes with a finite activation time.
    last_step : int
        the latest activation step, 0 for seed-only traces and -1 for empty ones.
    stop_at : int
        the step limit the simulation ran under.

    """

    def __init__(self, activation_time, stop_at):
        activation_time = np.asarray(activation_time, dtype=np.int64)
        activation_time.setflags(write=False)
        self.__activation_time = activation_time
        self.__stop_at = stop_at

    @property
    def activation_time(self):
        return self.__activation_time

    @property
    def stop_at(self):
        return self.__stop_at

    @property
    def final_active_count(self):
        return int(np.count_nonzero(self.__activation_time >= 0))

    @property
    def last_step(self):
        if not self.final_active_count:
            return NEVER
        return int(self.__activation_time.max())

    def active_nodes(self):
        return np.flatnonzero(self.__activation_time >= 0)

    def nodes_at(self, step):
        """Nodes activated exactly at the given step, in ascending id order."""

        return np.flatnonzero(self.__activation_time == step)

    def new_activations(self):
        """Number of nodes activated at steps 0, 1, ..., last_step."""

        times = self.__activation_time[self.__activation_time >= 0]
        return np.bincount(times, minlength=0).astype(np.int64)

    def value(self, decay=None, offset=0):
        """
        Sum of decay(offset + t) over activated nodes; the node count when
        decay is None.
        """

        times = self.__activation_time[self.__activation_time >= 0]
        if decay is None or decay.is_constant:
            return float(len(times))
        return float(np.sum(decay(times + offset)))

    def to_frame(self, labels=None):
        """Returns the trace as a DataFrame with columns (node_id, activation_time)."""

        frame = pd.DataFrame(
            {
                "node_id": np.arange(len(self.__activation_time)),
                "activation_time": self.__activation_time,
            }
        )
        if labels is not None:
            frame.insert(1, "label", list(labels))

        return frame

    def __repr__(self):
        return "DiffusionTrace(active={}, last_step={})".format(
            self.final_active_count, self.last_step
        )


class Observation(object):
    """
    Defines the partial observation of a cascade at time step d.

    Parameters
    ----------
    at_step : int
        the observation step d.
    already : iterable
        nodes activated at steps 0..d-1.
    recent : iterable
        nodes activated exactly at step d.

    Attributes
    ----------
    at_step : int
    already : tuple
        sorted node ids.
    recent : tuple
        sorted node ids.
    active : tuple
        sorted union of already and recent.

    """

    def __init__(self, at_step, already, recent):
        self.__at_step = checked_int("at_step", at_step, low=0)
        self.__already = node_tuple(already)
        self.__recent = node_tuple(recent)
        if set(self.__already) & set(self.__recent):
            raise ValueError("Already and recently activated sets must be disjoint.")

    @property
    def at_step(self):
        return self.__at_step

    @property
    def already(self):
        return self.__already

    @property
    def recent(self):
        return self.__recent

    @property
    def active(self):
        return tuple(sorted(self.__already + self.__recent))

    def key(self):
        return (self.__already, self.__recent)

    def __eq__(self, other):
        if not isinstance(other, Observation):
            return NotImplemented
        return self.at_step == other.at_step and self.key() == other.key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.__at_step,) + self.key())

    def __repr__(self):
        return "Observation(d={}, already={}, recent={})".format(
            self.__at_step, list(self.__already), list(self.__recent)
        )


def simulate_ic(graph, seeds, rng, stop_at=None):
    """
    Simulates one independent cascade.

    Parameters
    ----------
    graph : InfluenceGraph
    seeds : iterable
        seed node ids.
    rng : numpy.random.Generator
        the replicate stream.
    stop_at : int
        last step to simulate; defaults to n, which no cascade can exceed.

    Returns
    -------
    trace : DiffusionTrace

    """

    seeds = node_tuple(seeds)
    graph.check_nodes(seeds)
    limit = graph.n if stop_at is None else checked_int("stop_at", stop_at, low=0)

    times = np.full(graph.n, NEVER, dtype=np.int64)
    times[list(seeds)] = 0
    frontier = list(seeds)
    step = 0
    while frontier and step < limit:
        step += 1
        newly = []
        for u in frontier:
            targets, probs = graph.out_edges(u)
            if not len(targets):
                continue
            hits = targets[rng.random(len(targets)) < probs]
            for v in hits:
                if times[v] == NEVER:
                    times[v] = step
                    newly.append(int(v))
        frontier = sorted(newly)

    return DiffusionTrace(times, limit)


def observe_at(trace, d):
    """
    Returns the observation of a trace at step d.

    The trace must have been simulated at least up to step d.
    """

    d = checked_int("d", d, low=0)
    if trace.stop_at < d:
        raise range_error("d", 0, trace.stop_at, d)

    times = trace.activation_time
    already = np.flatnonzero((times >= 0) & (times < d))
    recent = np.flatnonzero(times == d)

    return Observation(d, already, recent)


def observe(graph, seeds, d, rng):
    """Runs a cascade from seeds up to step d and returns (trace, observation)."""

    trace = simulate_ic(graph, seeds, rng, stop_at=d)
    return trace, observe_at(trace, d)


def residual_graph(graph, already):
    """
    Deletes the already activated nodes and their incident edges.

    Returns
    -------
    residual : InfluenceGraph
        re-indexed 0..n'-1 in ascending id order.
    kept : ndarray
        kept[residual_id] = id in the given graph.

    """

    return graph.without(already)


def to_residual_ids(kept, nodes):
    """Maps ids of the parent graph to ids of a residual graph."""

    nodes = np.asarray(list(nodes), dtype=np.int64)
    positions = np.searchsorted(kept, nodes)
    if len(nodes) and (
        np.any(positions >= len(kept)) or np.any(kept[np.minimum(positions, len(kept) - 1)] != nodes)
    ):
        raise ValueError("Some nodes were removed from the residual graph.")

    return [int(x) for x in positions]


def dump_trace(trace, path, labels=None):
    """Writes a trace as CSV (node_id, activation_time)."""

    with io.open(path, "w", encoding="utf-8", newline="") as trace_file:
        trace.to_frame(labels).to_csv(trace_file, index=False)
