"""Graph-state entanglement toolkit.

Schmidt-rank bounds over GF(2), graph rewrite rules for local Pauli
measurements, local-complementation orbits and classification, and a dense
state-vector oracle for verification.
"""

from .gf2 import BitMatrix, BitVector, gf2_kernel_basis, gf2_rank
from .graphs import (
    CapExceeded,
    Graph,
    canonical_form,
    complete_graph,
    cycle_graph,
    delete_vertex,
    edges_between,
    empty_graph,
    enumerate_connected,
    from_edges,
    grid_graph,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    local_complement,
    min_vertex_cover,
    parse_graph6,
    path_graph,
    petersen_graph,
    star_graph,
    sym_diff_edges,
    to_graph6,
    toggle_edge,
    two_coloring,
)
from .stabilizer import (
    LocalClifford,
    PauliOp,
    clifford_compose,
    clifford_conjugate_pauli,
    exact_support_count,
    local_complement_clifford,
    pauli_product,
    stabilizer_element,
    stabilizer_generator,
)
from .measurement import (
    MeasurementOutcome,
    apply_sequence,
    conjugate_basis,
    measure_pauli,
    measure_via_lc,
    sequence_transcript,
)
from .entanglement import (
    BoundsReport,
    RankIndex,
    bounds,
    lower_bound_max_rank,
    max_rank_criterion,
    pauli_persistency,
    rank_index,
    schmidt_rank,
    two_colorable_bounds,
)
from .orbits import (
    ClassRecord,
    classify,
    classify_full,
    lc_closure_with_relabelings,
    lc_equivalent,
    lc_orbit,
    rank_list_fingerprint,
    schmidt_rank_list,
)
from .oracle import (
    apply_local_clifford,
    apply_pauli,
    apply_projector,
    equal_up_to_global_phase,
    graph_state,
    reduced_entropy,
    reduced_rank,
    verify_partial_trace_form,
)

__version__ = "0.1.0"
