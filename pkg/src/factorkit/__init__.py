"""Exact graph-factor existence, toughness, and reduction gadgets.

Everything here is exact and desk-scale: factor existence runs on a
blossom matching engine through the classical vertex-expansion gadget,
toughness and the all-(g,f)-factors criterion run as exhaustive subset
scans, and every nontrivial construction ships with a brute-force twin
so the two routes can be cross-checked on enumerated universes.
"""

from .errors import (
    FactorkitError,
    FormatError,
    HypothesisError,
    ScaleExceededError,
    VacuousInstanceError,
)
from .graph import (
    Factor,
    Graph,
    components,
    degree,
    degree_sum,
    edge_boundary,
    factor_degrees,
    format_edge_list,
    format_factor,
    mask_of,
    parse_edge_list,
    popcount,
    vertices_of,
)
from .generate import (
    DEFAULT_SEED,
    SpecValue,
    admissible_h,
    allowed_degrees,
    connected_cubic_graphs,
    connected_graphs,
    degree_specs_even,
    spec_from_mask,
    spec_ones_mask,
)
from .matching import default_engine, maximum_matching
from .factor import (
    TutteGadgetMap,
    has_H_factor,
    has_H_factor_bruteforce,
    has_H_factor_via_lift,
    has_f_factor,
    has_f_factor_bruteforce,
    has_gf_factor,
    has_gf_factor_bruteforce,
    has_perfect_matching,
    lift_factor,
    project_factor,
    tutte_gadget,
)
from .reduction import (
    LiftedGraph,
    ReductionInstance,
    lift_degree_spec,
    pendant_attach,
    reduce_to_all_gf,
    triangle_lift,
)
from .niessen import (
    AllFactorsVerdict,
    Counterexample,
    NiessenWitness,
    all_gf_criterion,
    all_gf_enumeration,
    deficiency,
    graph_json,
    instance_json,
    parse_graph_json,
    parse_instance,
    q_count,
    verdict_json,
    witness_json,
)
from .toughness import (
    INFINITE,
    ToughnessResult,
    is_almost_one_tough,
    is_one_tough,
    toughness,
    toughness_json,
)
from .tables import decode_degree_vector, degree_table, spec_table
from .verify import (
    ReductionReport,
    VerifyReport,
    verify_lemma_2_2,
    verify_lemma_2_4,
    verify_reduction,
    verify_reduction_universe,
    verify_theorem_1_5,
)

__version__ = "0.1.0"
