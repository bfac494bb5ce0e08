#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Datasets

    Real-world graphs are not bundled. The registry in data/datasets.json
    names them, with an optional download URL and a pinned SHA-256; fetching
    a dataset downloads it and refuses files whose checksum differs from the
    pinned one.

    License: GNU Affero General Public License v3.0
"""

import io
import json
import os
import urllib.request

import pandas as pd

from twophase import DATA_PATH
from twophase.errors import DataError
from twophase.graph import file_digest

REGISTRY_PATH = os.path.join(DATA_PATH, "datasets.json")


def load_registry(path=REGISTRY_PATH):
    with io.open(path, "r", encoding="utf-8") as registry_file:
        return json.load(registry_file)


def list_datasets(data_dir="datasets", path=REGISTRY_PATH):
    """
    Returns a DataFrame (name, filename, directed, pinned, present, description).
    """

    rows = []
    for name, entry in sorted(load_registry(path).items()):
        rows.append(
            [
                name,
                entry["filename"],
                entry.get("directed", False),
                entry.get("sha256") is not None,
                os.path.isfile(os.path.join(data_dir, entry["filename"])),
                entry.get("description", ""),
            ]
        )

    return pd.DataFrame(
        rows, columns=["name", "filename", "directed", "pinned", "present", "description"]
    )


def fetch_dataset(name, data_dir="datasets", url=None, sha256=None, path=REGISTRY_PATH):
    """
    Downloads a registered dataset.

    Parameters
    ----------
    name : str
        registry name.
    data_dir : str
        destination directory.
    url : str
        overrides the registry URL.
    sha256 : str
        overrides the pinned checksum.

    Returns
    -------
    path : str
        the downloaded file.
    digest : str
        its SHA-256.

    """

    registry = load_registry(path)
    if name not in registry:
        raise DataError(
            "Unknown dataset '{}'; known datasets: {}.".format(name, sorted(registry))
        )
    entry = registry[name]
    url = url or entry.get("url")
    if not url:
        raise DataError("No URL is registered for '{}'; pass one with --url.".format(name))
    expected = sha256 or entry.get("sha256")

    if not os.path.isdir(data_dir):
        os.makedirs(data_dir)
    target = os.path.join(data_dir, entry["filename"])
    try:
        urllib.request.urlretrieve(url, target)
    except (IOError, ValueError) as error:
        raise DataError("Download of '{}' from {} failed: {}".format(name, url, error))

    digest = file_digest(target)
    if expected is not None and digest != expected.lower():
        os.remove(target)
        raise DataError(
            "Checksum mismatch for '{}': expected {}, got {}.".format(name, expected, digest)
        )

    return target, digest
