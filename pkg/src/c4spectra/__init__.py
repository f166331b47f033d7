"""Signless Laplacian and Laplacian spectral radii of C4-free k-cyclic graphs.

Constructors for the extremal families, exact canonical forms, isomorph-free
enumeration, eigenvalue and polynomial tools, and claim-level verifiers.
"""

from .bounds import (
    Polynomial,
    delta_plus_one_check,
    largest_real_root,
    merris_bound,
    poly_F,
    poly_f2,
    poly_f3,
    poly_fk,
    thm31_bound,
)
from .canon import canonical_form, equitable_partition, is_isomorphic
from .enumeration import EnumSpec, enumerate_graphs, rank_by_index
from .graph import (
    Graph,
    build_delta_n2_bicyclic,
    build_delta_n2_unicyclic,
    build_extremal,
    build_named,
    copies,
    cyclomatic_number,
    is_c4_free,
    is_k_cyclic,
    join,
    union,
)
from .graphio import from_graph6, parse_graph, to_graph6
from .spectral import dominant_eigenpair, edge_shift, mu_index, perron_vector, q_index, quotient_matrix

__version__ = "0.1.0"
