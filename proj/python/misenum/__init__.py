"""Maximal independent set enumeration over sparse graphs."""

from ._core import (
    Graph,
    HierarchicalDominance,
    OrientedDominance,
    PairGraphIndependence,
    brute_mis,
    degeneracy_ordering,
    enumerate_mis,
    parse_edge_list,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "HierarchicalDominance",
    "OrientedDominance",
    "PairGraphIndependence",
    "brute_mis",
    "degeneracy_ordering",
    "enumerate_mis",
    "parse_edge_list",
]
