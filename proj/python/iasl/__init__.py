"""Integer additive set-labelings of graphs: verify, construct, search.

Thin wrapper over the C++ core. Set literals are comma-separated
non-negative integers, e.g. ``"0,1,2"``.
"""

import json as _json

from ._core import (
    Graph,
    InputError,
    Labeling,
    build_max_iasf_graph,
    enumerate_count,
    extract_chain,
    make_trivial,
    parse_graph,
    parse_labeling,
    shape,
    sumset,
)
from . import _core as _c

__all__ = [
    "Graph",
    "InputError",
    "Labeling",
    "build_max_iasf_graph",
    "classify",
    "enumerate_count",
    "extract_chain",
    "make_trivial",
    "parse_graph",
    "parse_labeling",
    "run_theorem_suite",
    "search",
    "shape",
    "sumset",
    "verify",
]


def verify(graph, labeling):
    """Full classification report as a dict; never raises on labeling defects."""
    return _json.loads(_c.verify_json(graph, labeling))


def classify(graph, labeling):
    """Classification report as a dict; raises InputError unless the labeling is valid."""
    return _json.loads(_c.classify_json(graph, labeling))


def search(graph, bound=8):
    """Decide set-filtered admissibility; returns a dict with status/witness/reason."""
    return _json.loads(_c.search_json(graph, bound))


def run_theorem_suite(max_ground_size=4):
    """Run the structural theorem suite; returns its report as a dict."""
    return _json.loads(_c.theorem_suite_json(max_ground_size))
