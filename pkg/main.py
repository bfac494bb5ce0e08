#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Quickstart usage example.

    This script reads a JSON description of a two-phase experiment:
    1. the graph (a built-in instance, a native graph file or an edge list
       with a probability model),
    2. the seed selection algorithm and the total budget,
    3. the budget split and the delay of the second phase (fixed or
       optimized), and
    4. the Monte-Carlo settings, master seed included.

    This script then runs the experiment, writes its run record and CSV
    outputs, and prints the executed plan and its spread.

    License: GNU Affero General Public License v3.0
"""

import argparse
import sys

from twophase import DATA_PATH
from twophase.experiment.cli import main as cli_main
from twophase.experiment.cli import str_to_bool


def main(config_path, master_seed, threads, verbose):
    """
    Simple function to show minimal usage.

    PARAMETERS
    ----------
    config_path : str
        Path to the JSON experiment file.
    master_seed : int
        Overrides the file's master seed.
    threads : int
        Maximum worker processes.
    verbose : bool
        Verbosity.

    RETURNS
    -------
    code : int
        exit code of the run.

    """

    argv = ["run", "--config", config_path, "--verbose", str(verbose)]
    if master_seed is not None:
        argv += ["--master_seed", str(master_seed)]
    if threads is not None:
        argv += ["--threads", str(threads)]

    return cli_main(argv)


if __name__ == "__main__":
    PARSER = argparse.ArgumentParser(description="Run a two-phase influence maximization experiment.")
    PARSER.add_argument(
        "--config_path",
        "-c",
        help="JSON experiment file path",
        default=DATA_PATH + "/example-experiment.json",
        type=str,
    )
    PARSER.add_argument(
        "--verbose",
        "-v",
        help="Verbosity, prints the full run record",
        default="False",
        type=str,
    )
    PARSER.add_argument(
        "--random_seed",
        "-r",
        help="Master seed for reproducing randomness.",
        default=None,
        type=int,
    )
    PARSER.add_argument(
        "--threads",
        "-t",
        help="Maximum worker processes",
        default=None,
        type=int,
    )
    ARGS = PARSER.parse_args()

    sys.exit(
        main(
            config_path=ARGS.config_path,
            master_seed=ARGS.random_seed,
            threads=ARGS.threads,
            verbose=str_to_bool(ARGS.verbose),
        )
    )
