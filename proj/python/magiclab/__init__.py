"""Distance magic labelings of graphs: search, exact spectral tests, SRG and DRG screens."""

import json as _json

from . import _core
from ._core import (
    ArrayParseError,
    Graph,
    Graph6Error,
    complement,
    d_neighborhood,
    det_exact,
    distance_matrix,
    eigenvalue_multiplicity,
    eq_cdm_filter,
    eq_ldrg_filter,
    generate,
    has_integer_eigenvalue,
    hnp_labeling,
    hnp_predicate,
    intersection_array,
    lemma_det_condition,
    line_graph,
    magic_constant,
    nullity,
    parity_precheck,
    srg_feasible,
    srg_parameters,
    verify_labeling,
    vertex_count,
)

__all__ = [
    "ArrayParseError",
    "Graph",
    "Graph6Error",
    "classify_srg",
    "complement",
    "cross_check",
    "d_neighborhood",
    "det_exact",
    "distance_matrix",
    "eigenvalue_multiplicity",
    "eq_cdm_filter",
    "eq_ldrg_filter",
    "filter_arrays",
    "generate",
    "has_integer_eigenvalue",
    "hnp_labeling",
    "hnp_predicate",
    "info",
    "intersection_array",
    "lemma_det_condition",
    "line_graph",
    "linegraph_pipeline",
    "magic_constant",
    "nullity",
    "parity_precheck",
    "search",
    "srg_feasible",
    "srg_parameters",
    "tridiagonal_T",
    "verify_labeling",
    "vertex_count",
]


def search(g, d=(1,), algo="backtrack", timeout=0.0, workers=1):
    """Search for a D-magic labeling; returns the same dict the CLI prints."""
    return _json.loads(_core.search_json(g, list(d), algo, int(timeout * 1000), workers))


def info(g):
    return _json.loads(_core.info_json(g))


def classify_srg(params):
    """params is (n, r, a, c), or an int n for the complete graph K_n."""
    return _json.loads(_core.classify_json(params))


def tridiagonal_T(array):
    return _json.loads(_core.tridiagonal_T(array))


def filter_arrays(text):
    return _json.loads(_core.filter_arrays_json(text))


def cross_check(text):
    return _json.loads(_core.cross_check_json(text))


def linegraph_pipeline(r_max=6, run_searches=True, max_vertices=20):
    return _json.loads(_core.linegraph_pipeline_json(r_max, run_searches, max_vertices))

