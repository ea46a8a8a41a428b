"""Zero-divisor and cozero-divisor graphs of finite commutative rings."""

from .classify import (
    ClassificationRecord,
    classification_record,
    is_comultiplication_ring,
    is_primal,
    is_second,
    is_second_to,
    is_secondal,
    is_secondary,
    s_set,
    second_to_witness,
    w_set,
    z_ideal_set,
)
from .errors import (
    CapExceededError,
    NotAnIdealError,
    RingAxiomError,
    RingMismatchError,
    RingSpecError,
)
from .graphs import (
    RingGraph,
    cozero_divisor_graph,
    emit_graph,
    ideal_cozero_divisor_graph,
    ideal_zero_divisor_graph,
    remove_vertices,
    zero_divisor_graph,
)
from .harness import (
    CheckResult,
    CorpusConfig,
    VerificationReport,
    generate_corpus,
    run_checks,
    verify_corpus,
)
from .ideals import (
    IdealSet,
    RingPredicates,
    all_ideals,
    annihilator,
    ideal_from_members,
    ideal_generated,
    ideal_intersection,
    ideal_ops,
    ideal_product,
    ideal_sum,
    is_prime_ideal,
    jacobson_radical,
    maximal_ideals,
    minimal_primes_over,
    prime_ideals,
    principal_ideal,
    quotient_ring,
    radical_of_ideal,
    ring_predicates,
    scale_ideal,
)
from .metrics import (
    INF,
    ExtendedNat,
    MetricsReport,
    SimpleGraph,
    chromatic_number,
    clique_number,
    components,
    diameter,
    distance,
    girth,
    is_connected,
    is_planar,
    metrics_report,
    partite_structure,
    r_partite,
)
from .rings import Element, FiniteRing, RingSpec, build_ring, parse_ring_spec

__version__ = "0.1.0"
