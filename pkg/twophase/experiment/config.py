#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    ExperimentConfig class definition

    A two-phase experiment as read from a JSON file:

        {
            "graph": {"source": "example1", "transform": "native",
                      "seed": null, "directed": true},
            "algorithm": "gdd", "second_algorithm": "gdd", "mode": "myopic",
            "budget": 2,
            "split": {"k1": 1} or "optimize",
            "delay": 3, "optimize" or "auto",
            "optimizer": "golden", "exhaustive" or "face-joint",
            "decay": null or {"kind": "exponential", "delta": 0.9},
            "monte_carlo": {"single_phase_sims": 10000, "phase1_sims": 1000,
                            "phase2_sims": 1000, "master_seed": 1,
                            "workers": 1},
            "farsighted": null or {"phase1_sims": 200, "phase2_sims": 50},
            "ce": null or {"n_min": 100, "n_elite": 10, "alpha": 0.6},
            "output_dir": "runs/example1"
        }

    A missing master seed is drawn from OS entropy and kept, so as_dict()
    always reproduces the run. The farsighted entry overrides Monte-Carlo
    counts for scoring first-phase sets in farsighted mode; its master seed
    is always the main one.

    License: GNU Affero General Public License v3.0
"""

import io
import json
import os

from twophase.cross_entropy import CeConfig
from twophase.diffusion import DecayFunction, MonteCarloConfig
from twophase.errors import DataError, type_error, value_error
from twophase.graph.serialization import BUILTIN_GRAPHS, TRANSFORMS
from twophase.phases.plan import MODES, checked_algorithm
from twophase.utils import checked_int

DELAY_RULES = ("optimize", "auto")
OPTIMIZERS = ("golden", "exhaustive", "face-joint")
FARSIGHTED_FIELDS = ("single_phase_sims", "phase1_sims", "phase2_sims", "workers")


class ExperimentConfig(object):
    """
    Defines a two-phase experiment.

    Parameters
    ----------
    graph : dict
        source (built-in name or path), transform ('native', 'wc', 'tv'),
        seed (of the TV assignment) and directed.
    algorithm : str
        first-phase selector.
    budget : int
        the total budget k.
    split : dict or str
        {"k1": k1} for a fixed split, 'optimize' to search it.
    delay : int or str
        a fixed delay, 'optimize' to search it, or 'auto' for D.
    decay : dict
        DecayFunction fields, or None for plain spread.
    monte_carlo : dict
        MonteCarloConfig fields.
    output_dir : str
        where records and CSV files go.
    second_algorithm : str
    mode : str
        'myopic' or 'farsighted'.
    optimizer : str
        search used when the split is optimized.
    farsighted : dict
        MonteCarloConfig counts of the farsighted scoring, among
        FARSIGHTED_FIELDS; None scores with monte_carlo.
    ce : dict
        CeConfig fields of FACE, or None for the defaults.

    """

    def __init__(
        self,
        graph,
        algorithm,
        budget,
        split,
        delay,
        decay=None,
        monte_carlo=None,
        output_dir=".",
        second_algorithm="gdd",
        mode="myopic",
        optimizer="golden",
        farsighted=None,
        ce=None,
    ):
        self.graph = graph
        self.algorithm = algorithm
        self.second_algorithm = second_algorithm
        self.mode = mode
        self.budget = budget
        self.split = split
        self.delay = delay
        self.optimizer = optimizer
        self.decay = decay
        self.monte_carlo = monte_carlo
        self.farsighted = farsighted
        self.ce = ce
        self.output_dir = output_dir

    @property
    def graph(self):
        return dict(self.__graph)

    @graph.setter
    def graph(self, graph):
        if not isinstance(graph, dict):
            raise type_error("graph", dict, type(graph))
        graph = {
            "source": graph.get("source"),
            "transform": graph.get("transform", "native"),
            "seed": graph.get("seed"),
            "directed": bool(graph.get("directed", True)),
        }
        if not isinstance(graph["source"], str):
            raise type_error("graph source", str, type(graph["source"]))
        if graph["source"] not in BUILTIN_GRAPHS and not os.path.isfile(graph["source"]):
            raise DataError("Graph file '{}' does not exist.".format(graph["source"]))
        if graph["transform"] not in TRANSFORMS:
            raise value_error("transform", "one of {}".format(TRANSFORMS), graph["transform"])
        if graph["seed"] is not None:
            graph["seed"] = checked_int("graph seed", graph["seed"], low=0)
        self.__graph = graph

    @property
    def algorithm(self):
        return self.__algorithm

    @algorithm.setter
    def algorithm(self, algorithm):
        self.__algorithm = checked_algorithm("algorithm", algorithm)

    @property
    def second_algorithm(self):
        return self.__second_algorithm

    @second_algorithm.setter
    def second_algorithm(self, algorithm):
        self.__second_algorithm = checked_algorithm("second_algorithm", algorithm)

    @property
    def mode(self):
        return self.__mode

    @mode.setter
    def mode(self, mode):
        if mode not in MODES:
            raise value_error("mode", "one of {}".format(MODES), mode)
        self.__mode = mode

    @property
    def budget(self):
        return self.__budget

    @budget.setter
    def budget(self, budget):
        self.__budget = checked_int("budget", budget, low=0)

    @property
    def split(self):
        return self.__split

    @split.setter
    def split(self, split):
        if split == "optimize":
            self.__split = split
        elif isinstance(split, dict) and "k1" in split:
            self.__split = {"k1": checked_int("k1", split["k1"], low=0, high=self.__budget)}
        else:
            raise value_error("split", "{'k1': int} or 'optimize'", split)

    @property
    def k1(self):
        """The fixed first-phase budget, None when the split is optimized."""

        return None if self.__split == "optimize" else self.__split["k1"]

    @property
    def delay(self):
        return self.__delay

    @delay.setter
    def delay(self, delay):
        if delay in DELAY_RULES:
            self.__delay = delay
        else:
            self.__delay = checked_int("delay", delay, low=0)

    @property
    def optimizer(self):
        return self.__optimizer

    @optimizer.setter
    def optimizer(self, optimizer):
        if optimizer not in OPTIMIZERS:
            raise value_error("optimizer", "one of {}".format(OPTIMIZERS), optimizer)
        self.__optimizer = optimizer

    @property
    def decay(self):
        return self.__decay

    @decay.setter
    def decay(self, decay):
        if decay is None or isinstance(decay, DecayFunction):
            self.__decay = decay
        elif isinstance(decay, dict):
            self.__decay = DecayFunction(decay.get("kind", "exponential"), decay.get("delta", 1.0))
        else:
            raise type_error("decay", DecayFunction, type(decay))

    @property
    def monte_carlo(self):
        return self.__monte_carlo

    @monte_carlo.setter
    def monte_carlo(self, monte_carlo):
        if monte_carlo is None:
            monte_carlo = MonteCarloConfig()
        elif isinstance(monte_carlo, dict):
            monte_carlo = MonteCarloConfig(**monte_carlo)
        elif not isinstance(monte_carlo, MonteCarloConfig):
            raise type_error("monte_carlo", MonteCarloConfig, type(monte_carlo))
        self.__monte_carlo = monte_carlo

    @property
    def farsighted(self):
        return None if self.__farsighted is None else dict(self.__farsighted)

    @farsighted.setter
    def farsighted(self, farsighted):
        if farsighted is not None:
            if not isinstance(farsighted, dict):
                raise type_error("farsighted", dict, type(farsighted))
            for name in farsighted:
                if name not in FARSIGHTED_FIELDS:
                    expected = "fields among {}".format(FARSIGHTED_FIELDS)
                    raise value_error("farsighted", expected, name)
            self.__monte_carlo.replace(**farsighted)
            farsighted = dict(farsighted)
        self.__farsighted = farsighted

    @property
    def farsighted_config(self):
        """The MonteCarloConfig of farsighted scoring, None without overrides."""

        if self.__farsighted is None:
            return None
        return self.__monte_carlo.replace(**self.__farsighted)

    @property
    def ce(self):
        return self.__ce

    @ce.setter
    def ce(self, ce):
        if ce is None or isinstance(ce, CeConfig):
            self.__ce = ce
        elif isinstance(ce, dict):
            self.__ce = CeConfig(**ce)
        else:
            raise type_error("ce", CeConfig, type(ce))

    @property
    def output_dir(self):
        return self.__output_dir

    @output_dir.setter
    def output_dir(self, output_dir):
        if not isinstance(output_dir, str):
            raise type_error("output_dir", str, type(output_dir))
        self.__output_dir = output_dir

    @classmethod
    def from_dict(cls, fields):
        if not isinstance(fields, dict):
            raise type_error("experiment", dict, type(fields))
        try:
            return cls(**fields)
        except TypeError as error:
            raise DataError("Malformed experiment description: {}".format(error))

    @classmethod
    def from_json(cls, path):
        with io.open(path, "r", encoding="utf-8") as config_file:
            try:
                fields = json.load(config_file)
            except ValueError as error:
                raise DataError("{}: not valid JSON ({})".format(path, error))
        return cls.from_dict(fields)

    def as_dict(self):
        return {
            "graph": self.graph,
            "algorithm": self.__algorithm,
            "second_algorithm": self.__second_algorithm,
            "mode": self.__mode,
            "budget": self.__budget,
            "split": self.__split,
            "delay": self.__delay,
            "optimizer": self.__optimizer,
            "decay": None if self.__decay is None else self.__decay.as_dict(),
            "monte_carlo": self.__monte_carlo.as_dict(),
            "farsighted": None if self.__farsighted is None else dict(self.__farsighted),
            "ce": None if self.__ce is None else self.__ce.as_dict(),
            "output_dir": self.__output_dir,
        }

    def __repr__(self):
        return "ExperimentConfig(graph={!r}, algorithm={!r}, budget={})".format(
            self.__graph["source"], self.__algorithm, self.__budget
        )
