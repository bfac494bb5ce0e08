#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Search

    This module contains the basic classes, methods, and functions for the
    local searches the seed selectors run on.

    License: GNU Affero General Public License v3.0
"""

from twophase.search.utils import pairwise_comparison, multiple_comparison
from twophase.search.problem import Problem
from twophase.search.node import Node
from twophase.search.local import LocalSearch
