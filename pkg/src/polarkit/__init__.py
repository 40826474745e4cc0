"""Kernelization and exact solving for monopolar and cluster-property
partition recognition, with a gadget-based hard-instance generator."""

from .graphs import (
    Graph,
    GraphFormatError,
    GuardError,
    PI_CLUSTER,
    PI_EDGELESS,
    PI_MAX_DEGREE_ONE,
    PI_UNIVERSAL,
    PiSpec,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_induced_embeddings,
    induced_subgraph,
    is_cluster_graph,
    parse_graph,
    parse_pispec,
    path_graph,
    satisfies_pi,
    serialize_graph,
    serialize_pispec,
)
from .decomposition import (
    CliqueDecomposition,
    nice_clique_decomposition,
    verify_decomposition,
)
from .monopolar import (
    AuxGraph,
    KernelAudit,
    KernelResult,
    KernelState,
    ParityClosure,
    apply_rule,
    build_aux_graph,
    compute_v_rep,
    kernelize_monopolar,
    parity_closure,
)
from .solvers import (
    ClusterPiPartition,
    MonopolarPartition,
    PartialAssignment,
    monopolar_min_clusters,
    solve_cluster_pi,
    solve_monopolar_bruteforce,
    validate_partition,
)
from .sizeparam import (
    P3Packing,
    SetFamily,
    classify_and_label,
    cluster_delta_bound,
    enumerate_forbidden_sets,
    find_sunflower,
    greedy_p3_packing,
    important_bound,
    kernelize_by_b_size,
    kernelize_cluster_delta,
    sunflower_reduce,
)
from .composition import (
    CISInstance,
    CompositionBuilder,
    CompositionOutput,
    PaddedBatch,
    audit_invariants,
    build_witness_partition,
    check_exclusivity,
    colorful_independent_set,
    compose,
    pad_instances,
)
from .random_graphs import Xorshift64Star, generate_random
