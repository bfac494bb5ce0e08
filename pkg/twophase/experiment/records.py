#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Run records

    Every experiment command leaves a JSON RunRecord next to its outputs:
    the command, the exact parameters it ran with (master seed included),
    its numeric results, the wall time, the package version and the SHA-256
    of the input graph. Records are validated against the bundled JSON
    schema on write and on read.

    License: GNU Affero General Public License v3.0
"""

import contextlib
import io
import json
import os

import jsonschema

from twophase import DATA_PATH
from twophase.__version__ import __version__
from twophase.errors import DataError, ReproducibilityError, TwoPhaseError, type_error

SCHEMA_PATH = os.path.join(DATA_PATH, "schemas", "run_record.schema.json")
LOCK_NAME = ".twophase.lock"


def load_schema():
    with io.open(SCHEMA_PATH, "r", encoding="utf-8") as schema_file:
        return json.load(schema_file)


def validate_record(document):
    """Raises a DataError if a record document does not follow the schema."""

    try:
        jsonschema.validate(instance=document, schema=load_schema())
    except jsonschema.ValidationError as error:
        raise DataError("Invalid run record: {}".format(error.message))


class RunRecord(object):
    """
    Defines the record of one command execution.

    Parameters
    ----------
    command : str
        the sub-command that ran.
    config : dict
        its parameters; running the command again on them reproduces results.
    results : dict
        the numeric results.
    wall_time : float
        seconds the command took.
    graph_digest : str
        SHA-256 of the input graph file, None for commands without one.
    version : str
        package version that produced the record.

    """

    def __init__(self, command, config, results, wall_time, graph_digest=None, version=None):
        if not isinstance(config, dict):
            raise type_error("config", dict, type(config))
        if not isinstance(results, dict):
            raise type_error("results", dict, type(results))
        self.command = command
        self.config = config
        self.results = results
        self.wall_time = float(wall_time)
        self.graph_digest = graph_digest
        self.version = __version__ if version is None else version

    def as_dict(self):
        return {
            "version": self.version,
            "command": self.command,
            "config": self.config,
            "results": self.results,
            "wall_time": self.wall_time,
            "graph_digest": self.graph_digest,
        }

    def save(self, path):
        document = self.as_dict()
        validate_record(document)
        with io.open(path, "w", encoding="utf-8") as record_file:
            json.dump(document, record_file, indent=2, sort_keys=True)
            record_file.write("\n")

    @classmethod
    def load(cls, path):
        with io.open(path, "r", encoding="utf-8") as record_file:
            try:
                document = json.load(record_file)
            except ValueError as error:
                raise DataError("{}: not valid JSON ({})".format(path, error))
        validate_record(document)

        return cls(
            document["command"],
            document["config"],
            document["results"],
            document["wall_time"],
            document["graph_digest"],
            document["version"],
        )

    def check_version(self):
        """Raises a ReproducibilityError for records of another major version."""

        if self.version.split(".")[0] != __version__.split(".")[0]:
            raise ReproducibilityError(
                "Record was written by version {}, this is version {}.".format(
                    self.version, __version__
                )
            )

    def __repr__(self):
        return "RunRecord(command={!r}, version={!r})".format(self.command, self.version)


def diff_results(stored, fresh, prefix=""):
    """
    Lists every difference between two result documents.

    Numbers must match exactly; 1 and 1.0 are equal.

    Returns
    -------
    diffs : list
        one 'key: stored != fresh' line per mismatch.

    """

    diffs = []
    if isinstance(stored, dict) and isinstance(fresh, dict):
        for key in sorted(set(stored) | set(fresh)):
            path = "{}.{}".format(prefix, key) if prefix else key
            if key not in fresh:
                diffs.append("{}: missing from the rerun".format(path))
            elif key not in stored:
                diffs.append("{}: not in the record".format(path))
            else:
                diffs.extend(diff_results(stored[key], fresh[key], path))
    elif isinstance(stored, list) and isinstance(fresh, list) and len(stored) == len(fresh):
        for i, (a, b) in enumerate(zip(stored, fresh)):
            diffs.extend(diff_results(a, b, "{}[{}]".format(prefix, i)))
    elif stored != fresh:
        diffs.append("{}: {!r} != {!r}".format(prefix or "results", stored, fresh))

    return diffs


@contextlib.contextmanager
def output_lock(output_dir):
    """
    Holds the lock file of an output directory for the duration of a run.

    Raises a TwoPhaseError if another run holds it.
    """

    if not os.path.isdir(output_dir):
        os.makedirs(output_dir)
    path = os.path.join(output_dir, LOCK_NAME)
    try:
        handle = os.open(path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except OSError:
        raise TwoPhaseError(
            "Output directory '{}' is in use (remove {} if no run is active).".format(
                output_dir, path
            )
        )
    try:
        os.write(handle, str(os.getpid()).encode("ascii"))
        os.close(handle)
        yield path
    finally:
        os.remove(path)
