"""Maximum cardinality matching in general graphs.

Vertices are 0-based. Matchings are lists of (u, v) pairs.
"""

from ._core import (
    Graph,
    GuardExceeded,
    InputError,
    brute_max_matching_size,
    cross_check,
    max_matching,
    parse_dimacs,
    random_graph,
    run_phase,
    validate_matching,
    write_dimacs,
)

__all__ = [
    "Graph",
    "GuardExceeded",
    "InputError",
    "brute_max_matching_size",
    "cross_check",
    "max_matching",
    "parse_dimacs",
    "random_graph",
    "run_phase",
    "validate_matching",
    "write_dimacs",
]
