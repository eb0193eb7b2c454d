"""Degree-sequence lower bounds on the clique number.

Exact rational weight bounds W(G) = sum 1/(n - d(v)), delta-set partitions
and the generalized-partite number phi(G), greedy alpha/beta sequence
certificates, and brute-force oracles to check every claimed inequality.
"""

from .bounds import (
    DeltaPartition,
    Weight,
    delta_complement_check,
    is_delta_set,
    verify_generalized_partition,
    wei_bound,
    wei_independence_bound,
    wei_weight,
)
from .graph import (
    Graph,
    VertexSet,
    common_neighborhood,
    complement,
    induced_subgraph,
    is_clique,
    is_independent,
)
from .oracles import (
    DEFAULT_LIMITS,
    ChainReport,
    OracleCapError,
    OracleLimits,
    clique_number_exact,
    clique_number_naive,
    independence_number_exact,
    phi_exact,
    phi_exact_with_witness,
    wei_bound_floor_check,
)
from .sequences import (
    BoundCertificate,
    Justification,
    SeededTieBreak,
    SequenceStep,
    VertexSequence,
    build_alpha_sequence,
    build_beta_sequence,
    certify_alpha_bound,
    certify_beta_bound,
    extend_to_delta_terminal,
    lowest_id,
)

__all__ = [
    "BoundCertificate",
    "ChainReport",
    "DEFAULT_LIMITS",
    "DeltaPartition",
    "Graph",
    "Justification",
    "OracleCapError",
    "OracleLimits",
    "SeededTieBreak",
    "SequenceStep",
    "VertexSequence",
    "VertexSet",
    "Weight",
    "build_alpha_sequence",
    "build_beta_sequence",
    "certify_alpha_bound",
    "certify_beta_bound",
    "clique_number_exact",
    "clique_number_naive",
    "common_neighborhood",
    "complement",
    "delta_complement_check",
    "extend_to_delta_terminal",
    "independence_number_exact",
    "induced_subgraph",
    "is_clique",
    "is_delta_set",
    "is_independent",
    "lowest_id",
    "phi_exact",
    "phi_exact_with_witness",
    "verify_generalized_partition",
    "wei_bound",
    "wei_bound_floor_check",
    "wei_independence_bound",
    "wei_weight",
]
