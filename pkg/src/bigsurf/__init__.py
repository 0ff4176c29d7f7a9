"""Exact Picard-lattice computations for rational surfaces.

Everything runs over the integers and rationals: lattice models of blown-up
planes and Hirzebruch surfaces, closed-form and lattice-theoretic bigness
tests for the anticanonical class, ADE root-system extraction, Zariski
decompositions for a family of non-log-canonical examples, and complete
enumeration of negative classes on del Pezzo lattices.
"""

from .bigness import (
    BignessVerdict,
    CrossCheckReport,
    SweepReport,
    agreement_sweep,
    classify_anticanonical,
    cross_check,
    is_big_supported,
    orthogonal_complement,
)
from .enumeration import NegativeClassTable, negative_classes
from .errors import DomainError, NotNegativeDefiniteError
from .linalg import (
    Inertia,
    gram_restrict,
    inertia,
    integer_kernel,
    invert_rational,
    is_negative_definite,
    short_vectors,
    solve_rational,
)
from .picard import (
    DivisorClass,
    Generic,
    LineConic,
    PicardLattice,
    ThreeLines,
    WitnessReport,
    anticanonical_components,
    blowup_hirzebruch,
    blowup_p2,
    config_lattice,
    fiber_strict,
    sigma_strict,
    verify_witness,
)
from .roots import (
    RootSystemReport,
    classify,
    coxeter_dot,
    expected_root_count,
    extract_roots,
    predicted_type,
    root_lattice_of_config,
    type_string,
)
from .zariski import (
    FamilyParams,
    LogCanonicalResult,
    ZariskiChecks,
    ZariskiReport,
    log_canonical_test,
    zariski_decompose,
)

__all__ = [
    "DomainError",
    "NotNegativeDefiniteError",
    "Inertia",
    "gram_restrict",
    "inertia",
    "integer_kernel",
    "invert_rational",
    "is_negative_definite",
    "short_vectors",
    "solve_rational",
    "DivisorClass",
    "PicardLattice",
    "Generic",
    "LineConic",
    "ThreeLines",
    "WitnessReport",
    "blowup_p2",
    "blowup_hirzebruch",
    "fiber_strict",
    "sigma_strict",
    "config_lattice",
    "anticanonical_components",
    "verify_witness",
    "BignessVerdict",
    "CrossCheckReport",
    "SweepReport",
    "classify_anticanonical",
    "cross_check",
    "is_big_supported",
    "orthogonal_complement",
    "agreement_sweep",
    "RootSystemReport",
    "classify",
    "extract_roots",
    "expected_root_count",
    "predicted_type",
    "root_lattice_of_config",
    "type_string",
    "coxeter_dot",
    "FamilyParams",
    "LogCanonicalResult",
    "ZariskiChecks",
    "ZariskiReport",
    "zariski_decompose",
    "log_canonical_test",
    "NegativeClassTable",
    "negative_classes",
]
