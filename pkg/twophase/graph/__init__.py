#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    Graph

    The influence graph data model, edge-list ingestion, the WC/TV
    probability-assignment transforms and the native serialized format.

    License: GNU Affero General Public License v3.0
"""

from twophase.graph.influence_graph import InfluenceGraph
from twophase.graph.edge_list import RawEdgeList, load_edge_list, build_graph
from twophase.graph.transforms import (
    TRIVALENCY_VALUES,
    apply_tv_transform,
    apply_wc_transform,
)
from twophase.graph.serialization import (
    BUILTIN_GRAPHS,
    file_digest,
    load_graph,
    read_graph,
    save_graph,
)
from twophase.graph.generators import from_networkx, instance_family, random_instance
