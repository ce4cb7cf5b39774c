"""Exact effective resistance, voltage functions, and spanning-tree counts
on weighted multigraphs, with every supported network identity verifiable to
a literal zero residual over arbitrary-precision rationals."""

from .exactnum import Matrix, SingularMatrixError, rational
from .graph import (
    DisconnectedError,
    Edge,
    GraphError,
    MergedVertex,
    Multigraph,
    PreconditionError,
    UnknownEdgeError,
    UnknownVertexError,
    VertexPartition,
    banana_graph,
    complete_graph,
    cycle_graph,
    fan_graph,
    path_graph,
    wheel_graph,
)
from .reduction import ReductionTrace, delta_y, reduce_two_terminal
from .resistnet import (
    DeltaResult,
    EulerTerm,
    Network,
    contraction_delta,
    convex_combination_check,
    cutting_delta,
    edge_modification_delta,
    euler_decomposition,
    euler_decomposition_resistance_only,
    laplacian,
    pseudo_inverse,
    resistance_derivative,
    shorting_delta,
    voltage_transfer_contraction,
    voltage_transfer_cutting,
    voltage_transfer_shorting,
)
from .spantree import (
    averaging_contractions,
    averaging_deletions,
    closed_form,
    contraction_identity,
    count_deletion_contraction,
    count_enumeration,
    count_identified,
    count_matrix_tree,
    deletion_identity,
    identification_quadratic,
    identified_count,
    resistance_from_trees,
    spanning_tree_euler,
    star_augmentation_count,
    union_banana_of_paths,
    union_cut_vertex,
    union_cycle_replacement,
    union_k_banana,
    union_three_vertices,
    union_three_vertices_identical,
    union_two_vertices,
    vertex_deletion_count,
    voltage_from_trees,
)
from .verify import GraphGenSpec, IdentityReport, run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
