"""Exact arithmetic for linear recurring sequences of arbitrary order.

Sequences are described by a coefficient vector (p_1, ..., p_r) with
p_r != 0 and a block of initial values; every term, forward or backward,
is a Fraction. On top of that sit rational generating functions, the
impulse response basis and its Toeplitz recovery, root-based closed
forms evaluated in controlled-precision arithmetic, identity and
congruence verification, and a few classical applications.
"""

from .applications import (
    PartitionCheck,
    boustrophedon,
    boustrophedon_egf_check,
    stirling_coefficients,
    stirling_column,
    stirling_triangle,
    wythoff_array,
    wythoff_closed_form_check,
    wythoff_partition_check,
    wythoff_row_spec,
    zigzag_numbers,
)
from .closed_form import (
    DEFAULT_PRECISION_BITS,
    ClosedFormEvaluator,
    RootDecomposition,
    characteristic_polynomial,
    characteristic_roots,
    closed_form_evaluator,
    general_closed_form,
    irs_closed_form,
    order2_closed_form,
)
from .errors import (
    AmbiguousClusterError,
    InsufficientRowsError,
    LrsError,
    RootFindingError,
    SingularMatrixError,
    SpecError,
    UnknownIdentityError,
)
from .genfunc import Polynomial, RationalGF, genfunc_of, irs_from_gf_shift
from .identities import (
    BilateralIRS2,
    BilateralOrder2,
    Counterexample,
    IdentityVerdict,
    addition_formula,
    congruence_product,
    congruence_suite,
    named_identity_names,
    named_identity_suite,
    negative_index_suite,
    nonhomogeneous_reduce,
    nonlinear_expansion,
    small_m_suite,
    transfer_suite,
)
from .irs_algebra import (
    ExactMatrix,
    IrsRepresentation,
    ToeplitzSystem,
    build_toeplitz,
    decompose_in_basis,
    delta_identity_check,
    is_nontrivial_basis,
    order2_coefficients,
    represent_by_irs,
    represent_weights,
    solve_toeplitz,
)
from .sequence import (
    BilateralSequence,
    CoefficientSet,
    Rational,
    SequenceSpec,
    as_fraction,
    format_rational,
    make_irs,
    spec_from_json,
    spec_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousClusterError",
    "BilateralIRS2",
    "BilateralOrder2",
    "BilateralSequence",
    "ClosedFormEvaluator",
    "CoefficientSet",
    "Counterexample",
    "DEFAULT_PRECISION_BITS",
    "ExactMatrix",
    "IdentityVerdict",
    "InsufficientRowsError",
    "IrsRepresentation",
    "LrsError",
    "PartitionCheck",
    "Polynomial",
    "Rational",
    "RationalGF",
    "RootDecomposition",
    "RootFindingError",
    "SequenceSpec",
    "SingularMatrixError",
    "SpecError",
    "ToeplitzSystem",
    "UnknownIdentityError",
    "addition_formula",
    "as_fraction",
    "boustrophedon",
    "boustrophedon_egf_check",
    "build_toeplitz",
    "characteristic_polynomial",
    "characteristic_roots",
    "congruence_product",
    "congruence_suite",
    "decompose_in_basis",
    "delta_identity_check",
    "format_rational",
    "closed_form_evaluator",
    "general_closed_form",
    "genfunc_of",
    "irs_closed_form",
    "irs_from_gf_shift",
    "is_nontrivial_basis",
    "make_irs",
    "named_identity_names",
    "named_identity_suite",
    "negative_index_suite",
    "nonhomogeneous_reduce",
    "nonlinear_expansion",
    "order2_closed_form",
    "order2_coefficients",
    "represent_by_irs",
    "represent_weights",
    "small_m_suite",
    "solve_toeplitz",
    "spec_from_json",
    "spec_to_json",
    "stirling_coefficients",
    "stirling_column",
    "stirling_triangle",
    "transfer_suite",
    "wythoff_array",
    "wythoff_closed_form_check",
    "wythoff_partition_check",
    "wythoff_row_spec",
    "zigzag_numbers",
]
