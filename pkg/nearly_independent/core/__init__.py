from nearly_independent.core.canonical import CanonicalKey, canonical_form, canonical_key, is_isomorphic
from nearly_independent.core.edgelist import parse_edge_list, read_edge_list, to_edge_list
from nearly_independent.core.families import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    family,
    k4_minus_edge,
    path,
    star,
)
from nearly_independent.core.graph import (
    DegreeProfile,
    Deletion,
    Graph,
    VertexSet,
    closed_neighborhood,
    complement,
    degree_profile,
    delete_vertices,
    from_edge_list,
    max_degree,
    min_degree,
    neighborhood,
)
from nearly_independent.core.graph6 import from_graph6, iter_graph6, read_graph6_file, to_graph6
from nearly_independent.core.structure import (
    bridges,
    component_masks,
    cut_vertices,
    has_cycle,
    is_connected,
    split_components,
)
