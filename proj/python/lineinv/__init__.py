"""Line-graph construction, recognition, inversion, and minimum-flip repair.

Thin re-export of the compiled extension; see the individual docstrings for
semantics. Graphs are simple and undirected with vertices 0..n-1.
"""

from ._core import (
    Error,
    Flip,
    Graph,
    PseudoInverseSolution,
    add_edge,
    all_minimal_flip_sets,
    apply_flips,
    classify_case,
    classify_mechanism,
    contains_induced_claw,
    del_edge,
    is_line_graph,
    is_smith,
    isomorphic,
    line_graph,
    parse_edge_list,
    relocate_edge,
    root,
    serialize_edge_list,
    solve_branch_and_bound,
    solve_enumeration,
    spectral_radius,
    triangle_closing_sites,
    verify_solution,
)

__all__ = [
    "Error",
    "Flip",
    "Graph",
    "PseudoInverseSolution",
    "add_edge",
    "all_minimal_flip_sets",
    "apply_flips",
    "classify_case",
    "classify_mechanism",
    "contains_induced_claw",
    "del_edge",
    "is_line_graph",
    "is_smith",
    "isomorphic",
    "line_graph",
    "parse_edge_list",
    "relocate_edge",
    "root",
    "serialize_edge_list",
    "solve_branch_and_bound",
    "solve_enumeration",
    "spectral_radius",
    "triangle_closing_sites",
    "verify_solution",
]
