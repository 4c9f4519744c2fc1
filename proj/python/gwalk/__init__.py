"""Exact analysis of Grover walks on regular graphs.

The heavy lifting lives in the C++ extension ``gwalk._core``: exact rational
and quadratic-field arithmetic, spectra, eigenprojections, walk-regularity
classification, periodicity, perfect state transfer, and the feasible-spectrum
tables. This package re-exports the main operations.

Quick start::

    import gwalk

    g = gwalk.construct("coclique(hamming(3,3),2)")
    gwalk.spectrum_string(g)        # '{[12]^1, [6]^6, [0]^39, [-6]^8}'
    gwalk.analyze(g)["pst"]         # [] -- no perfect state transfer
    gwalk.pst_at_time(gwalk.construct("cycle(4)"), 2)  # antipodal pairs
"""

from gwalk._core import (
    Graph,
    IrreducibleCubicOrHigher,
    ParseError,
    UnsupportedGraph,
    algebraic_integer_filter,
    analyze,
    basic_predicates,
    char_poly_string,
    classify_swr,
    construct,
    count_triangles_through,
    eigenvalue_support,
    enumerate_tables,
    feasible_rows,
    is_periodic,
    is_strongly_l_walk_regular,
    parse_graph6,
    pst_at_time,
    pst_via_conditions,
    spectrum,
    spectrum_string,
    srg_recognize,
    to_graph6,
    walk_counts,
)

__all__ = [
    "Graph",
    "IrreducibleCubicOrHigher",
    "ParseError",
    "UnsupportedGraph",
    "algebraic_integer_filter",
    "analyze",
    "basic_predicates",
    "char_poly_string",
    "classify_swr",
    "construct",
    "count_triangles_through",
    "eigenvalue_support",
    "enumerate_tables",
    "feasible_rows",
    "is_periodic",
    "is_strongly_l_walk_regular",
    "parse_graph6",
    "pst_at_time",
    "pst_via_conditions",
    "spectrum",
    "spectrum_string",
    "srg_recognize",
    "to_graph6",
    "walk_counts",
]

__version__ = "0.1.0"
