"""Spectral bounds on the chromatic number.

Graph constructions and graph6 I/O, adjacency spectra, exact coloring,
the quartic/least-root machinery behind the least-eigenvalue bounds, the
closed-form bound evaluations, and a batch verification harness.
"""

from ._kernels import NUMBA_ENABLED, PURE_PYTHON
from .graphs import (ExtremalParams, Graph, Graph6Error, GRAPH6_MAX_VERTICES,
                     complete, disjoint_union, empty_graph, extremal_graph,
                     from_edges, join, parse_graph6, to_graph6)
from .spectra import (EIG_TOL, Spectrum, eigenvalues_highprec, lambda_max,
                      lambda_min, spectrum)
from .coloring import (CHI_SOLVER_CAP, ColoringResult, SolverCapError,
                       chromatic_number, coloring_number)
from .quartic import (DESCARTES_CLASSES, QuarticCoeffs, RootScan,
                      SymmetricCoords, SymmetricPointRoot, canonical_pair,
                      endpoint_margin, feasible_pairs, gap_min_over_s,
                      min_root_pair, mirror_pair, odd_parity_root_residual,
                      quartic, quartic_gap_closed, quartic_gap_direct,
                      smallest_negative_root, symmetric_root)
from .bounds import (BoundValue, EQUALITY_TOL, HOLDS_TOL, LIST_CHROMATIC_K33,
                     chi_in_theorem_range, constantine_check, edge_chi_bound,
                     fan_yu_wang_chi_bound, fan_yu_wang_lambda_bound,
                     hoffman_bound, powers_check, wilf_bound,
                     wu_elphick_check)
from .harness import (BoundReport, CHECKS, ComparisonCounts, EqualityCase,
                      EqualityScanReport, Summary, analyze, compare_bounds,
                      compare_labeled, enumerate_labeled, equality_case_scan,
                      graph_from_mask, sweep_labeled, verify_stream)

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED", "PURE_PYTHON",
    "ExtremalParams", "Graph", "Graph6Error", "GRAPH6_MAX_VERTICES",
    "complete", "disjoint_union", "empty_graph", "extremal_graph",
    "from_edges", "join", "parse_graph6", "to_graph6",
    "EIG_TOL", "Spectrum", "eigenvalues_highprec", "lambda_max",
    "lambda_min", "spectrum",
    "CHI_SOLVER_CAP", "ColoringResult", "SolverCapError",
    "chromatic_number", "coloring_number",
    "DESCARTES_CLASSES", "QuarticCoeffs", "RootScan", "SymmetricCoords",
    "SymmetricPointRoot", "canonical_pair", "endpoint_margin",
    "feasible_pairs", "gap_min_over_s", "min_root_pair", "mirror_pair",
    "odd_parity_root_residual", "quartic", "quartic_gap_closed",
    "quartic_gap_direct", "smallest_negative_root", "symmetric_root",
    "BoundValue", "EQUALITY_TOL", "HOLDS_TOL", "LIST_CHROMATIC_K33",
    "chi_in_theorem_range", "constantine_check", "edge_chi_bound",
    "fan_yu_wang_chi_bound", "fan_yu_wang_lambda_bound", "hoffman_bound",
    "powers_check", "wilf_bound", "wu_elphick_check",
    "BoundReport", "CHECKS", "ComparisonCounts", "EqualityCase",
    "EqualityScanReport", "Summary", "analyze", "compare_bounds",
    "compare_labeled", "enumerate_labeled", "equality_case_scan",
    "graph_from_mask", "sweep_labeled", "verify_stream",
]
