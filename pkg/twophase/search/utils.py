#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Comparisons

    Lexicographic comparison of value tuples, used wherever a search ranks
    candidates on several keys (value first, then tie-break keys).

    License: GNU Affero General Public License v3.0
"""

import operator


def pairwise_comparison(old_tuple, new_tuple, find_min=True):
    """Performs a lexicographic comparison to see if new_tuple is strictly
    better than old_tuple, provided they are the same length.

    find_min=True  ==> smaller is better
    find_min=False ==> bigger is better"""

    if len(old_tuple) != len(new_tuple):
        raise ValueError("The tuples don't match sizes.")

    if not isinstance(find_min, bool):
        raise ValueError("Only 'True' or 'False' allowed for find_min.")

    better = operator.lt if find_min else operator.gt
    for old, new in zip(old_tuple, new_tuple):
        if better(new, old):
            return True
        if new != old:
            return False

    return False


def multiple_comparison(tuples, find_min=True):
    """Compares a list of tuples lexicographically, returns the index of the
    best one. The earliest tuple wins ties.

    find_min=True  ==> smaller is better
    find_min=False ==> bigger is better"""

    if not tuples:
        raise ValueError("Nothing to compare.")

    best = 0
    for i in range(1, len(tuples)):
        if pairwise_comparison(tuples[best], tuples[i], find_min):
            best = i

    return best
