"""Finite loops, loop near-rings and rings: locality, radicals and
unique idempotent decompositions, certified by brute force at desk
scale."""

from .config import DEFAULT_BOUNDS, Bounds, bounds_from_env
from .errors import (
    AdditionNotAbelianGroup,
    BoundExceeded,
    HypothesisFailed,
    LeftDistributivityFails,
    LimitReached,
    LoopNrError,
    MulNotAssociative,
    NoTwoSidedZero,
    NotAHomomorphism,
    NotAnIdeal,
    NotApproximatelyIdempotent,
    NotASubloop,
    NotIdempotent,
    NotIdentity,
    NotLatinSquare,
    ParseError,
    PreconditionFailed,
    RightDistributivityFails,
    TargetNotARing,
    TheoremViolation,
    ValidationError,
    ZeroIdempotent,
    ZeroNotLeftAbsorbing,
)
from .loops import (
    CayleyLoop,
    ElementSubset,
    StructureHom,
    Verdict,
    enumerate_subloops,
    image,
    is_associative,
    is_commutative,
    is_normal_subloop,
    is_subloop,
    kernel,
    subloop_closure,
    validate_loop,
    validate_loop_hom,
)
from .homs import (
    ImageRing,
    LnrHom,
    TransferReport,
    idempotent_kill_check,
    image_subring,
    is_idempotent_lifting,
    is_unit_reflecting,
    validate_lnr_hom,
    verify_local_transfer,
)
from .nearrings import (
    LocalityReport,
    LoopNearRing,
    UnitGroup,
    annihilator,
    enumerate_N_subloops,
    idempotents,
    is_local_lnr,
    is_N_subloop,
    maximal_N_subloops,
    units,
    validate_lnr,
)
from .rings import (
    FiniteRing,
    Quotient,
    TwoSidedIdeal,
    coset_idempotents,
    idempotents_conjugate,
    idempotents_isomorphic,
    is_division_ring,
    is_local_ring,
    is_semiperfect,
    is_semisimple,
    jacobson_radical,
    left_ideals,
    lift_idempotent,
    quotient_ring,
    radical_by_maximal_left_ideals,
    radical_by_quasiregularity,
    validate_ideal,
    validate_ring,
    validate_ring_tables,
)
from .decomp import (
    CornerRing,
    IdempotentFamily,
    KSReport,
    RetractReport,
    corner_ring,
    corner_signature,
    decompose_regular,
    enumerate_complete_primitive_families,
    is_primitive,
    is_strongly_indecomposable_corner,
    validate_idempotent_family,
    verify_ks_uniqueness,
    verify_retract_matching,
)
from .generators import (
    CATALOG,
    all_loops,
    cyclic_ring,
    galois_field,
    map_near_ring,
    matrix_ring,
    opposite,
    parse_spec,
    product,
    random_loop,
    smallest_nonassociative_loop,
    upper_triangular_ring,
)
from .io import (
    KINDS,
    StructureFile,
    canonical_json,
    dump_structure,
    dump_structure_text,
    kind_of,
    load_structure,
    parse_structure,
    realize,
    structure_sha256,
    structure_to_dict,
)
from .reports import (
    VOLATILE_KEYS,
    analysis_report,
    check_report,
    decompose_report,
    finalize_report,
    hom_report,
    render_text,
    report_sha256,
)

__version__ = "0.1.0"
