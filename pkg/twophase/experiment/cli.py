#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Command-line interface

        twophase transform INPUT --model wc|tv [--seed S] --output FILE
        twophase select GRAPH --algorithm A -k K [--objective nu --delta D]
                        [--ce_n_min N --ce_n_elite E ...]
        twophase twophase GRAPH --k1 K1 --k2 K2 --d D|auto|optimize
        twophase twophase GRAPH -k K --optimize golden|exhaustive|face-joint
                          [--mode farsighted --farsighted_phase1_sims N]
        twophase oracle GRAPH --sigma --seeds B | --f --s1 A --d 1 --k2 1
        twophase rerun RECORD
        twophase datasets list | fetch NAME [--url URL --sha256 HEX]
        twophase run --config EXPERIMENT.json

    Exit codes: 0 success, 1 usage, 2 data error, 3 reproducibility failure.

    License: GNU Affero General Public License v3.0
"""

import argparse
import json
import pprint
import sys

from twophase import DATA_PATH
from twophase.errors import CapacityError, DataError, ReproducibilityError, TwoPhaseError
from twophase.cross_entropy.config import INITS as CE_INITS
from twophase.experiment.commands import execute, rerun
from twophase.experiment.config import OPTIMIZERS, ExperimentConfig
from twophase.experiment.datasets import fetch_dataset, list_datasets
from twophase.graph.serialization import TRANSFORMS
from twophase.phases import MODES
from twophase.selection import ALGORITHMS

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_REPRODUCIBILITY = 3


class ArgumentParser(argparse.ArgumentParser):
    """Exits with the usage code on malformed command lines."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{}: error: {}\n".format(self.prog, message))


def str_to_bool(query_str):
    """
    Converts argument parsed as str to a bool.

    PARAMETERS
    ----------
    query_str : str
        Argument as str.

    RETURNS
    -------
    query_bool : bool
        Argument as bool.

    """

    if query_str.lower() in ["true", "t", "1"]:
        return True
    elif query_str.lower() in ["false", "f", "0"]:
        return False
    raise argparse.ArgumentTypeError("Could not parse '{}' to bool type.".format(query_str))


def delay_type(value):
    if value in ("auto", "optimize"):
        return value
    try:
        delay = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("delay must be an integer, 'auto' or 'optimize'")
    if delay < 0:
        raise argparse.ArgumentTypeError("delay must be non-negative")
    return delay


def label_list(value):
    return [x for x in value.split(",") if x]


def _add_graph_arguments(parser):
    parser.add_argument("graph", help="'example1', a native graph file or an edge list", type=str)
    parser.add_argument(
        "--transform",
        help="probability assignment of an edge list",
        choices=TRANSFORMS,
        default="native",
    )
    parser.add_argument("--graph_seed", help="seed of the TV assignment", default=None, type=int)
    parser.add_argument(
        "--directed",
        help="whether weighted edge-list records are directed",
        default="True",
        type=str_to_bool,
    )


def _add_monte_carlo_arguments(parser):
    parser.add_argument("--sims", help="single-phase simulations", default=10000, type=int)
    parser.add_argument("--phase1_sims", help="first-phase simulations", default=1000, type=int)
    parser.add_argument("--phase2_sims", help="second-phase simulations", default=1000, type=int)
    parser.add_argument(
        "--master_seed",
        "-r",
        help="master seed; drawn from OS entropy and recorded when omitted",
        default=None,
        type=int,
    )
    parser.add_argument("--threads", help="maximum worker processes", default=1, type=int)


def _add_ce_arguments(parser):
    parser.add_argument("--ce_n_min", help="FACE draws per iteration", default=None, type=int)
    parser.add_argument("--ce_n_max", help="FACE draw cap per iteration", default=None, type=int)
    parser.add_argument("--ce_n_elite", help="FACE elite size", default=None, type=int)
    parser.add_argument("--ce_alpha", help="FACE smoothing factor", default=None, type=float)
    parser.add_argument("--ce_max_iterations", help="FACE iteration cap", default=None, type=int)
    parser.add_argument(
        "--ce_init", help="FACE initial distribution", choices=CE_INITS, default=None
    )


def _add_output_arguments(parser):
    parser.add_argument(
        "--output_dir", "-o", help="directory of the run record and CSV files", default="."
    )
    parser.add_argument(
        "--verbose", "-v", help="print the full run record", default="False", type=str_to_bool
    )


def build_parser():
    parser = ArgumentParser(
        prog="twophase", description="Two-phase influence maximization experiments."
    )
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    transform = commands.add_parser("transform", help="assign WC or TV probabilities")
    transform.add_argument("input", help="unweighted edge list", type=str)
    transform.add_argument("--model", help="probability model", choices=("wc", "tv"), required=True)
    transform.add_argument("--seed", help="seed of the TV assignment", default=None, type=int)
    transform.add_argument("--output", help="native graph file to write", required=True)
    transform.add_argument(
        "--directed", help="treat records as directed", default="False", type=str_to_bool
    )
    _add_output_arguments(transform)

    select = commands.add_parser("select", help="single-phase seed selection")
    _add_graph_arguments(select)
    select.add_argument("--algorithm", "-a", choices=ALGORITHMS, default="gdd")
    select.add_argument("-k", help="budget", required=True, type=int)
    select.add_argument("--objective", choices=("sigma", "nu"), default="sigma")
    select.add_argument("--delta", help="exponential decay factor of nu", default=None, type=float)
    select.add_argument("--samples", help="RMax samples or SPIC permutations", default=None, type=int)
    select.add_argument(
        "--trace", help="also write one simulated trace", default="False", type=str_to_bool
    )
    _add_monte_carlo_arguments(select)
    _add_ce_arguments(select)
    _add_output_arguments(select)

    twophase = commands.add_parser("twophase", help="two-phase diffusion")
    _add_graph_arguments(twophase)
    twophase.add_argument("--algorithm", "-a", choices=ALGORITHMS, default="gdd")
    twophase.add_argument("--second_algorithm", choices=ALGORITHMS, default="gdd")
    twophase.add_argument("--mode", choices=MODES, default="myopic")
    twophase.add_argument("-k", help="total budget (with --optimize)", default=None, type=int)
    twophase.add_argument("--k1", help="first-phase budget", default=None, type=int)
    twophase.add_argument("--k2", help="second-phase budget", default=None, type=int)
    twophase.add_argument(
        "--d", help="delay: an integer, 'auto' (D) or 'optimize'", default="auto", type=delay_type
    )
    twophase.add_argument(
        "--optimize", help="search the budget split", choices=OPTIMIZERS, default=None
    )
    twophase.add_argument("--delta", help="exponential decay factor", default=None, type=float)
    twophase.add_argument(
        "--farsighted_phase1_sims",
        help="first-phase simulations when scoring farsighted sets",
        default=None,
        type=int,
    )
    twophase.add_argument(
        "--farsighted_phase2_sims",
        help="second-phase simulations when scoring farsighted sets",
        default=None,
        type=int,
    )
    _add_monte_carlo_arguments(twophase)
    _add_ce_arguments(twophase)
    _add_output_arguments(twophase)

    oracle = commands.add_parser("oracle", help="exact values on small graphs")
    _add_graph_arguments(oracle)
    query = oracle.add_mutually_exclusive_group(required=True)
    query.add_argument("--sigma", dest="query", action="store_const", const="sigma")
    query.add_argument("--nu", dest="query", action="store_const", const="nu")
    query.add_argument("--f", dest="query", action="store_const", const="f")
    oracle.add_argument("--seeds", help="comma-separated labels", default=[], type=label_list)
    oracle.add_argument("--s1", help="comma-separated labels", default=[], type=label_list)
    oracle.add_argument("--d", help="delay", default=0, type=int)
    oracle.add_argument("--k2", help="second-phase budget", default=0, type=int)
    oracle.add_argument("--delta", help="exponential decay factor", default=None, type=float)
    _add_output_arguments(oracle)

    rerun_parser = commands.add_parser("rerun", help="reproduce a run record")
    rerun_parser.add_argument("record", help="a *_record.json file", type=str)

    datasets = commands.add_parser("datasets", help="list or fetch registered datasets")
    datasets.add_argument("action", choices=("list", "fetch"))
    datasets.add_argument("name", nargs="?", default=None)
    datasets.add_argument("--url", default=None)
    datasets.add_argument("--sha256", default=None)
    datasets.add_argument("--data_dir", default="datasets")

    run = commands.add_parser("run", help="run a JSON experiment description")
    run.add_argument(
        "--config",
        "-c",
        help="experiment JSON file",
        default=DATA_PATH + "/example-experiment.json",
        type=str,
    )
    run.add_argument("--master_seed", "-r", default=None, type=int)
    run.add_argument("--threads", default=None, type=int)
    run.add_argument("--verbose", "-v", default="False", type=str_to_bool)

    return parser


def _graph(args):
    return {
        "source": args.graph,
        "transform": args.transform,
        "seed": args.graph_seed,
        "directed": args.directed,
    }


def _monte_carlo(args):
    return {
        "single_phase_sims": args.sims,
        "phase1_sims": args.phase1_sims,
        "phase2_sims": args.phase2_sims,
        "master_seed": args.master_seed,
        "workers": args.threads,
    }


def _decay(delta):
    return None if delta is None else {"kind": "exponential", "delta": delta}


def _ce(args):
    fields = {
        "n_min": args.ce_n_min,
        "n_max": args.ce_n_max,
        "n_elite": args.ce_n_elite,
        "alpha": args.ce_alpha,
        "max_iterations": args.ce_max_iterations,
        "init": args.ce_init,
    }
    fields = {name: value for name, value in fields.items() if value is not None}
    return fields or None


def _farsighted(args):
    fields = {
        "phase1_sims": args.farsighted_phase1_sims,
        "phase2_sims": args.farsighted_phase2_sims,
    }
    fields = {name: value for name, value in fields.items() if value is not None}
    return fields or None


def command_params(parser, args):
    """
    Translates parsed arguments into the parameters of a command.

    Returns
    -------
    command : str
    params : dict
    output_dir : str

    """

    if args.command == "transform":
        params = {
            "input": args.input,
            "model": args.model,
            "seed": args.seed,
            "output": args.output,
            "directed": args.directed,
        }
        return "transform", params, args.output_dir

    if args.command == "select":
        if args.objective == "nu" and args.delta is None:
            parser.error("--objective nu needs --delta")
        params = {
            "graph": _graph(args),
            "algorithm": args.algorithm,
            "k": args.k,
            "objective": args.objective,
            "decay": _decay(args.delta),
            "samples": args.samples,
            "monte_carlo": _monte_carlo(args),
            "ce": _ce(args),
            "trace": args.trace,
        }
        return "select", params, args.output_dir

    if args.command == "twophase":
        if args.optimize is not None:
            if args.k is None:
                parser.error("--optimize needs the total budget -k")
            budget, split = args.k, "optimize"
        else:
            if args.k1 is None or args.k2 is None:
                parser.error("a fixed plan needs --k1 and --k2 (or -k with --optimize)")
            budget, split = args.k1 + args.k2, {"k1": args.k1}
        params = {
            "graph": _graph(args),
            "algorithm": args.algorithm,
            "second_algorithm": args.second_algorithm,
            "mode": args.mode,
            "budget": budget,
            "split": split,
            "delay": args.d,
            "optimizer": args.optimize or "golden",
            "decay": _decay(args.delta),
            "monte_carlo": _monte_carlo(args),
            "farsighted": _farsighted(args),
            "ce": _ce(args),
            "output_dir": args.output_dir,
        }
        return "twophase", params, args.output_dir

    if args.command == "oracle":
        params = {
            "graph": _graph(args),
            "query": args.query,
            "seeds": args.seeds,
            "s1": args.s1,
            "d": args.d,
            "k2": args.k2,
            "decay": _decay(args.delta),
        }
        return "oracle", params, args.output_dir

    # run
    params = ExperimentConfig.from_json(args.config).as_dict()
    if args.master_seed is not None:
        params["monte_carlo"]["master_seed"] = args.master_seed
    if args.threads is not None:
        params["monte_carlo"]["workers"] = args.threads
    return "run", params, params["output_dir"]


def _report(command, results, verbose):
    if "master_seed" in results:
        print("master seed: {}".format(results["master_seed"]))
    if verbose:
        print("\n")
        print("{} complete!".format(command.capitalize()))
        pprint.pprint(results)
        print("\n")
    else:
        print(json.dumps(results, sort_keys=True))


def main(argv=None):
    """
    Runs the command line and returns its exit code.

    Parameters
    ----------
    argv : list
        arguments without the program name; sys.argv[1:] when None.

    Returns
    -------
    code : int

    """

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "rerun":
            record, _ = rerun(args.record)
            print("Rerun of {} matches the record.".format(args.record))
            _report(record.command, record.results, False)
            return EXIT_OK

        if args.command == "datasets":
            if args.action == "list":
                print(list_datasets(args.data_dir).to_string(index=False))
                return EXIT_OK
            if args.name is None:
                parser.error("datasets fetch needs a dataset name")
            path, digest = fetch_dataset(args.name, args.data_dir, args.url, args.sha256)
            print("{}  {}".format(digest, path))
            return EXIT_OK

        command, params, output_dir = command_params(parser, args)
        record = execute(command, params, output_dir)
        _report(command, record.results, args.verbose)

    except ReproducibilityError as error:
        print("error: {}".format(error), file=sys.stderr)
        return EXIT_REPRODUCIBILITY
    except (DataError, CapacityError, TwoPhaseError, IOError, ValueError, TypeError) as error:
        print("error: {}".format(error), file=sys.stderr)
        return EXIT_DATA

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
