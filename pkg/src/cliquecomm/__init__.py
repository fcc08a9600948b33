"""Clique-labelling communication games on orthogonality graphs.

Build a graph, enumerate its maximum cliques, derive the relation of
consistent pairwise labellings, and study the classical and quantum
one-way zero-error protocols that compute or reconstruct it.
"""

from .classical import (
    ClassicalStrategy,
    PublicCoinMixture,
    ccr_protocol,
    enumerate_consistent_strategies,
    is_orthogonal_array,
    min_oa_rows,
    mixture_for_coverage,
    mixture_for_optimality,
    randomized_encoding_feasible,
    sccr_protocol,
    strategy_partition,
    verify_classical_lower_bound,
)
from .errors import (
    CapExceededError,
    CliquecommError,
    ConditionsNotMetError,
    ConstructionFailedError,
    EmptyGraphError,
    InconsistentRelationError,
    InvalidParamsError,
    SearchExhaustedError,
    UnverifiedRepresentationError,
)
from .graphs import (
    CliqueSet,
    ConditionReport,
    Graph,
    check_conditions,
    complement,
    enumerate_maximum_cliques,
    gen_disconnected,
    gen_nncc,
    gen_paley,
)
from .paley import (
    adjacency_spectrum,
    analyze,
    extract_vectors,
    lovasz_theta,
    optimal_gram,
    paley_payoff,
    quadratic_residues,
    verify_character_square,
)
from .quantum import (
    OrthogonalRepresentation,
    QuantumStrategy,
    build_representation,
    check_mub,
    detect_mub,
    dimension_witness,
    optimize_payoff,
    quantum_table,
    representation_payoff,
    rsp_payoff,
    symmetric_equatorial_angles,
    verify_representation,
)
from .relation import (
    Relation,
    build_relation,
    colouring_to_label,
    infer_graph,
    label_to_colouring,
    labels_consistent,
)
from .simulate import (
    ReconstructionResult,
    RunLog,
    mc_success_rate,
    payoff_vs_rounds_report,
    reconstruct,
    simulate_rounds,
    success_prob_exact,
)
from .tables import (
    PayoffReport,
    ProbTable,
    check_consistency,
    check_coverage,
    check_optimality,
    compress_rows,
    mix_tables,
    payoff,
    reconstruction_possible,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "ClassicalStrategy",
    "CliqueSet",
    "CliquecommError",
    "ConditionReport",
    "ConditionsNotMetError",
    "ConstructionFailedError",
    "EmptyGraphError",
    "Graph",
    "InconsistentRelationError",
    "InvalidParamsError",
    "OrthogonalRepresentation",
    "PayoffReport",
    "ProbTable",
    "PublicCoinMixture",
    "QuantumStrategy",
    "ReconstructionResult",
    "Relation",
    "RunLog",
    "SearchExhaustedError",
    "UnverifiedRepresentationError",
    "adjacency_spectrum",
    "analyze",
    "build_relation",
    "build_representation",
    "ccr_protocol",
    "check_conditions",
    "check_consistency",
    "check_coverage",
    "check_mub",
    "check_optimality",
    "colouring_to_label",
    "complement",
    "compress_rows",
    "detect_mub",
    "dimension_witness",
    "enumerate_consistent_strategies",
    "enumerate_maximum_cliques",
    "extract_vectors",
    "gen_disconnected",
    "gen_nncc",
    "gen_paley",
    "infer_graph",
    "is_orthogonal_array",
    "label_to_colouring",
    "labels_consistent",
    "lovasz_theta",
    "mc_success_rate",
    "min_oa_rows",
    "mix_tables",
    "mixture_for_coverage",
    "mixture_for_optimality",
    "optimal_gram",
    "optimize_payoff",
    "paley_payoff",
    "payoff",
    "payoff_vs_rounds_report",
    "quadratic_residues",
    "quantum_table",
    "reconstruction_possible",
    "randomized_encoding_feasible",
    "reconstruct",
    "representation_payoff",
    "rsp_payoff",
    "sccr_protocol",
    "simulate_rounds",
    "strategy_partition",
    "success_prob_exact",
    "symmetric_equatorial_angles",
    "verify_character_square",
    "verify_classical_lower_bound",
    "verify_representation",
]
