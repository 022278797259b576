"""Exact tools for simple families of x-monotone curves."""

from ._xmc import (
    CurveFamily,
    XmcError,
    alpha_sequence,
    chi_exact,
    chi_heuristic,
    crossing_points,
    detect,
    gap_subgraph,
    generate,
    intersection_edges,
    key_lemma_sets,
    lambda_schedule,
    omega,
    plant,
    split,
    validate,
)

__all__ = [
    "CurveFamily",
    "XmcError",
    "alpha_sequence",
    "chi_exact",
    "chi_heuristic",
    "crossing_points",
    "detect",
    "gap_subgraph",
    "generate",
    "intersection_edges",
    "key_lemma_sets",
    "lambda_schedule",
    "omega",
    "plant",
    "split",
    "validate",
]
