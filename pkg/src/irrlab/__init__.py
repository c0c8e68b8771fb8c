"""Total irregularity of graphs: measures, extremal constructions, brute-force checks."""

from .graph import (
    Graph,
    canonical_form,
    complement,
    degree_sequence,
    from_edge_list,
    is_connected,
    parse_graph6,
    to_graph6,
)
from .irregularity import irr, irr_t, irr_t_delta_add, irr_t_delta_remove, irr_t_of_sequence

__all__ = [
    "Graph",
    "canonical_form",
    "complement",
    "degree_sequence",
    "from_edge_list",
    "is_connected",
    "parse_graph6",
    "to_graph6",
    "irr",
    "irr_t",
    "irr_t_delta_add",
    "irr_t_delta_remove",
    "irr_t_of_sequence",
]
