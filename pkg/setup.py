#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Environment setup. Adapted from https://github.com/kennethreitz/setup.py.

    License: GNU Affero General Public License v3.0
"""

import io
import os

from setuptools import find_packages, setup

# Package meta-data.
NAME = "twophase"
DESCRIPTION = "Two-Phase Influence Maximization under the Independent Cascade Model"
REQUIRES_PYTHON = ">=3.7.0"
VERSION = None

REQUIRED = ["jsonschema", "networkx", "numpy", "pandas", "scipy"]

here = os.path.abspath(os.path.dirname(__file__))

try:
    with io.open(os.path.join(here, "README.rst"), encoding="utf-8") as f:
        long_description = "\n" + f.read()
except IOError:
    long_description = DESCRIPTION

# Load the package's __version__.py module as a dictionary.
about = {}
if not VERSION:
    with open(os.path.join(here, NAME, "__version__.py")) as f:
        exec(f.read(), about)
else:
    about["__version__"] = VERSION

setup(
    name=NAME,
    version=about["__version__"],
    description=DESCRIPTION,
    long_description=long_description,
    long_description_content_type="text/x-rst",
    python_requires=REQUIRES_PYTHON,
    packages=find_packages(exclude=("tests",)),
    install_requires=REQUIRED,
    tests_require=["pytest"],
    include_package_data=True,
    package_data={NAME: ["data/*.txt", "data/*.json", "data/schemas/*.json"]},
    entry_points={"console_scripts": ["twophase=twophase.experiment.cli:main"]},
    license="GNU AGPLv3",
    classifiers=[
        "License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
    ],
)
