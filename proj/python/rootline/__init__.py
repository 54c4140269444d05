"""Line graph recognition through quadratic forms over F2.

Functions taking a graph accept either a ``Graph`` or a graph6 string.
"""

from ._core import (
    ClassBoundExceeded,
    Graph,
    ParseError,
    catalog,
    catalog_index,
    embedding_summary,
    equivalence_class,
    find_forbidden_witness,
    is_generalized_line_graph,
    is_isomorphic,
    is_line_graph,
    is_ordinary_line_graph,
    line_graph,
    mutate,
    named_graph,
    recognize,
    recognize_via_tree,
    reduce_to_tree,
    replay,
    verify_certificate,
)

__all__ = [
    "ClassBoundExceeded",
    "Graph",
    "ParseError",
    "catalog",
    "catalog_index",
    "embedding_summary",
    "equivalence_class",
    "find_forbidden_witness",
    "is_generalized_line_graph",
    "is_isomorphic",
    "is_line_graph",
    "is_ordinary_line_graph",
    "line_graph",
    "mutate",
    "named_graph",
    "recognize",
    "recognize_via_tree",
    "reduce_to_tree",
    "replay",
    "verify_certificate",
]
