"""Cyclic-related presentations, relation graphs, LCS ranks, line arrangements."""

from ._lcskit import (
    HypothesisError,
    PresentationParseError,
    ResourceError,
    b2,
    canonical,
    graph_summary,
    holonomy,
    lattice_report,
    lcs_check,
    phi2_combinatorial,
    phi_table,
    realize,
    round_trip,
    validate,
    witt,
)

__all__ = [
    "HypothesisError",
    "PresentationParseError",
    "ResourceError",
    "b2",
    "canonical",
    "graph_summary",
    "holonomy",
    "lattice_report",
    "lcs_check",
    "phi2_combinatorial",
    "phi_table",
    "realize",
    "round_trip",
    "validate",
    "witt",
]
