#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Experiment commands

    Every command is a function of a JSON-compatible parameter dictionary
    returning (results, artifacts, graph digest): results are the numbers
    stored in the RunRecord, artifacts are DataFrames written as CSV files.
    The parameters are completed first (a missing master seed is drawn and
    kept), so running a command again on a record's parameters reproduces
    its results exactly.

    License: GNU Affero General Public License v3.0
"""

import copy
import os
import time

from twophase import streams
from twophase.cross_entropy import CeConfig
from twophase.diffusion import DecayFunction, MonteCarloConfig, SpreadEstimate, checked_decay
from twophase.diffusion import rollout, simulate_ic
from twophase.errors import DataError, ReproducibilityError, value_error
from twophase.experiment.config import ExperimentConfig
from twophase.experiment.records import RunRecord, diff_results, output_lock
from twophase.graph import BUILTIN_GRAPHS, file_digest, read_graph, save_graph
from twophase.oracle import ExactOracle
from twophase.phases import TwoPhasePlan, run_two_phase
from twophase.scheduling import (
    SearchConfig,
    estimate_D,
    exhaustive_grid,
    face_joint_schedule,
    golden_section_k1,
    sequential_d_search,
)
from twophase.selection import HEURISTICS, SpreadObjective, select_seeds
from twophase.utils import checked_int

ORACLE_QUERIES = ("sigma", "nu", "f")


def _graph_defaults(graph):
    graph = dict(graph)
    graph.setdefault("transform", "native")
    graph.setdefault("seed", None)
    graph.setdefault("directed", True)
    return graph


def _load_graph(graph):
    """Returns (InfluenceGraph, SHA-256 of its file)."""

    graph = _graph_defaults(graph)
    loaded = read_graph(graph["source"], graph["transform"], graph["seed"], graph["directed"])
    return loaded, file_digest(graph["source"])


def _decay(fields):
    if fields is None:
        return None
    return DecayFunction(fields.get("kind", "exponential"), fields.get("delta", 1.0))


def _labels(graph, labels):
    if labels is None:
        return ()
    if isinstance(labels, str):
        labels = [x for x in labels.split(",") if x]
    return tuple(graph.nodes_from_labels(labels))


def normalize(command, params):
    """
    Completes a command's parameters: defaults, and a master seed drawn from
    OS entropy when none is given. The result is what gets recorded.
    """

    params = copy.deepcopy(params)
    if command in ("twophase", "run"):
        return ExperimentConfig.from_dict(params).as_dict()
    if command == "select":
        params["graph"] = _graph_defaults(params["graph"])
        params["monte_carlo"] = MonteCarloConfig(**params.get("monte_carlo", {})).as_dict()
        params.setdefault("objective", "sigma")
        params.setdefault("decay", None)
        params.setdefault("samples", None)
        params.setdefault("ce", None)
        params.setdefault("trace", False)
        if params["graph"]["transform"] == "tv" and params["graph"]["seed"] is None:
            params["graph"]["seed"] = params["monte_carlo"]["master_seed"]
    elif command == "oracle":
        params["graph"] = _graph_defaults(params["graph"])
        params.setdefault("decay", None)
    elif command == "transform":
        params.setdefault("directed", False)
        params.setdefault("seed", None)

    return params


def cmd_transform(params):
    """Converts an edge list to the native format under the WC or TV model."""

    graph = read_graph(params["input"], params["model"], params["seed"], params["directed"])
    save_graph(graph, params["output"])
    results = {
        "nodes": graph.n,
        "edges": graph.m,
        "output_digest": file_digest(params["output"]),
    }

    return results, {}, file_digest(params["input"])


def cmd_select(params):
    """Single-phase selection, evaluated on the single-phase streams."""

    graph, digest = _load_graph(params["graph"])
    config = MonteCarloConfig(**params["monte_carlo"])
    objective_mode = params["objective"]
    if objective_mode not in ("sigma", "nu"):
        raise value_error("objective", "'sigma' or 'nu'", objective_mode)
    decay = _decay(params["decay"]) if objective_mode == "nu" else None
    ce_config = None if params["ce"] is None else CeConfig(**params["ce"])

    objective = None
    if params["algorithm"] not in HEURISTICS:
        objective = SpreadObjective(graph, config, decay=decay)
    seeds, history = select_seeds(
        graph,
        params["algorithm"],
        params["k"],
        objective,
        seed=config.master_seed,
        samples=params["samples"],
        ce_config=ce_config,
        return_history=True,
    )
    values, progression = rollout(
        graph, seeds.nodes, config, config.single_phase_sims, checked_decay(decay)
    )
    estimate = SpreadEstimate.from_values(values)
    results = {
        "master_seed": config.master_seed,
        "algorithm": params["algorithm"],
        "seeds": graph.labels_of(seeds.nodes),
        "spread": estimate.mean,
        "stderr": estimate.stderr,
        "samples": estimate.samples,
    }
    artifacts = {"progression": progression.to_frame()}
    if history is not None:
        artifacts["face_history"] = history
    if params["trace"]:
        rng = streams.stream(config.master_seed, streams.SINGLE_PHASE, 0)
        trace = simulate_ic(graph, seeds.nodes, rng)
        artifacts["trace"] = trace.to_frame(graph.labels)

    return results, artifacts, digest


def cmd_twophase(params):
    """
    Runs a two-phase experiment: a fixed plan, or the plan the configured
    optimizer finds.
    """

    config = ExperimentConfig.from_dict(params)
    graph, digest = _load_graph(config.graph)
    mc_config = config.monte_carlo
    k = config.budget
    if k > graph.n:
        raise DataError("Budget {} exceeds the {} nodes of the graph.".format(k, graph.n))

    artifacts = {}
    results = {"master_seed": mc_config.master_seed}
    horizon = None
    if config.delay in ("auto", "optimize"):
        horizon = estimate_D(graph, k, mc_config)
        results["D"] = horizon
    d_max = horizon if horizon is not None else config.delay
    farsighted_config = config.farsighted_config
    options = {
        "mode": config.mode,
        "second_selector": config.second_algorithm,
        "farsighted_config": farsighted_config,
        "ce_config": config.ce,
    }
    search = SearchConfig(k, d_max, config.decay)

    s1 = None
    if config.k1 is not None:
        k1 = config.k1
        if config.delay == "optimize":
            d, _ = sequential_d_search(graph, k1, search, config.algorithm, mc_config, **options)
        else:
            d = d_max
    elif config.optimizer == "golden":
        k1, d, _, history = golden_section_k1(
            graph, search, config.algorithm, mc_config, return_history=True, **options
        )
        artifacts["search_history"] = history
    elif config.optimizer == "exhaustive":
        grid = exhaustive_grid(graph, search, config.algorithm, mc_config, **options)
        k1, d = grid.best
        results["grid_best"] = grid.as_dict()
        artifacts["grid"] = grid.entries
    else:
        k1, d, seeds, history = face_joint_schedule(
            graph,
            search,
            mc_config=mc_config,
            ce_config=config.ce,
            seed=mc_config.master_seed,
            second_selector=config.second_algorithm,
            farsighted_config=farsighted_config,
            return_history=True,
        )
        s1 = seeds.nodes
        artifacts["face_history"] = history

    plan = TwoPhasePlan(
        k1, k - k1, d, s1, config.mode, config.algorithm, config.second_algorithm
    )
    result = run_two_phase(
        graph, plan, mc_config, config.decay, farsighted_config, config.ce
    )
    summary = result.as_dict(graph)
    results.update(
        {
            "plan": summary["plan"],
            "spread": summary["spread"],
            "stderr": summary["stderr"],
            "samples": summary["samples"],
            "realized_s2_examples": summary["realized_s2_examples"],
        }
    )
    artifacts["progression"] = result.progression

    return results, artifacts, digest


def cmd_oracle(params):
    """Exact sigma, nu or f on an oracle-sized graph, at full precision."""

    graph, digest = _load_graph(params["graph"])
    query = params["query"]
    if query not in ORACLE_QUERIES:
        raise value_error("query", "one of {}".format(ORACLE_QUERIES), query)
    oracle = ExactOracle(graph)
    decay = _decay(params["decay"])

    results = {"query": query}
    if query == "sigma":
        results["value"] = oracle.sigma(_labels(graph, params.get("seeds"))).value
    elif query == "nu":
        if decay is None:
            raise DataError("The 'nu' query needs a decay (--delta).")
        results["value"] = oracle.nu(_labels(graph, params.get("seeds")), decay).value
    else:
        d = checked_int("d", params["d"], low=0)
        k2 = checked_int("k2", params["k2"], low=0)
        exact = oracle.f(_labels(graph, params.get("s1")), d, k2, decay)
        results["value"] = exact.value
        results["second_phase"] = [
            {
                "already": graph.labels_of(observation.already),
                "recent": graph.labels_of(observation.recent),
                "s2": graph.labels_of(s2),
            }
            for observation, s2 in sorted(exact.second_phase.items(), key=lambda x: x[0].key())
        ]

    return results, {}, digest


COMMANDS = {
    "transform": cmd_transform,
    "select": cmd_select,
    "twophase": cmd_twophase,
    "oracle": cmd_oracle,
    "run": cmd_twophase,
}


def graph_source(command, params):
    if command == "transform":
        return params["input"]
    return params["graph"]["source"]


def execute(command, params, output_dir="."):
    """
    Runs a command under the output directory's lock, writes its CSV
    artifacts as <command>_<name>.csv and its record as
    <command>_record.json.

    Returns
    -------
    record : RunRecord

    """

    if command not in COMMANDS:
        raise value_error("command", "one of {}".format(sorted(COMMANDS)), command)
    params = normalize(command, params)

    with output_lock(output_dir):
        start_time = time.time()
        results, artifacts, digest = COMMANDS[command](copy.deepcopy(params))
        wall_time = time.time() - start_time

        for name, frame in artifacts.items():
            frame.to_csv(os.path.join(output_dir, "{}_{}.csv".format(command, name)), index=False)
        record = RunRecord(command, params, results, wall_time, digest)
        record.save(os.path.join(output_dir, "{}_record.json".format(command)))

    return record


def rerun(record_path):
    """
    Re-executes a stored record and compares its results.

    Returns
    -------
    record : RunRecord
        the stored record.
    results : dict
        the fresh results, identical to the stored ones.

    Raises
    ------
    ReproducibilityError
        on a version mismatch, a changed graph file or differing results.

    """

    record = RunRecord.load(record_path)
    record.check_version()
    if record.graph_digest is not None:
        source = graph_source(record.command, record.config)
        if source not in BUILTIN_GRAPHS and not os.path.isfile(source):
            raise ReproducibilityError("Graph file '{}' is gone.".format(source))
        current = file_digest(source)
        if current != record.graph_digest:
            raise ReproducibilityError(
                "Graph file '{}' changed since the run (sha256 {} != recorded {}); "
                "refusing to rerun.".format(source, current, record.graph_digest)
            )

    results, _, _ = COMMANDS[record.command](copy.deepcopy(record.config))
    diffs = diff_results(record.results, results)
    if diffs:
        raise ReproducibilityError(
            "Rerun of {} differs from the record:\n  {}".format(record_path, "\n  ".join(diffs))
        )

    return record, results
