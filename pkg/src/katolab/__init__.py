"""Exact tools for matrices of iterated blow-up germs.

The package recognizes products of the elementary blow-up matrices,
normalizes their words, evaluates the associated monomial germs over exact
Gaussian rationals, and assembles the closed-form invariants of the compact
manifolds those germs define — plus truncated-series verification of the
vector-field and one-form statements.
"""

from ._limits import DEFAULT_DIGIT_CAP, ENV_VAR, ResourceLimitError
from .dynamics import (
    DEFAULT_MAX_ITER,
    ContractionReport,
    MembershipResult,
    PerronData,
    QuadraticSurd,
    certify_ball12_contraction,
    contracts_unit_ball,
    eval_inverse,
    eval_map,
    fundamental_domain_membership,
    perron_data,
    root_of_unity_check,
    sample_ball_points,
    sample_torus_points,
    stable_membership,
)
from .fields import (
    FunctionTheoryNote,
    MonomialVectorField,
    coordinate_field,
    function_nullity_note,
    monomial_field,
    one_form_nullity,
    pushforward_invariance,
    standard_field_generators,
    tangent_field_nullity,
)
from .formats import (
    format_complex,
    format_matrix_json,
    format_matrix_text,
    format_orbit_json,
    format_point,
    format_seq_json,
    format_seq_text,
    parse_complex,
    parse_matrix,
    parse_orbit,
    parse_point,
    parse_seq,
)
from .gaussrat import (
    GaussianRational,
    as_point,
    origin,
    sq_norm,
    sq_norm_12,
    unit_point,
)
from .intmat import (
    IntMatrix,
    LatticeBasis,
    characteristic_polynomial,
    hermite_normal_form,
    lattice_index,
    left_fixed_lattice,
    left_kernel_lattice,
)
from .invariants import (
    CanonicalData,
    DimensionValue,
    InvariantMonomial,
    InvariantReport,
    alg_dim,
    betti_numbers,
    build_report,
    canonical_descriptor,
    hol_vf_dimension,
    invariant_monomials,
    multiplicity_one,
    theta_lattice,
    twisted_betti_numbers,
    verify_J0_relation,
)
from .laurent import SparseLaurentPoly, iter_monomials
from .words import (
    AmbiguousOrder,
    FactorSeq,
    KatoRecognitionError,
    NotAProduct,
    NotKato,
    StandardForm,
    compose_factors,
    cyclic_normal_form,
    elementary,
    erase_index,
    factorize,
    is_kato,
    positivity_power,
    standard_form,
    type_of,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousOrder",
    "CanonicalData",
    "ContractionReport",
    "DEFAULT_DIGIT_CAP",
    "DEFAULT_MAX_ITER",
    "DimensionValue",
    "ENV_VAR",
    "FactorSeq",
    "FunctionTheoryNote",
    "GaussianRational",
    "IntMatrix",
    "InvariantMonomial",
    "InvariantReport",
    "KatoRecognitionError",
    "LatticeBasis",
    "MembershipResult",
    "MonomialVectorField",
    "NotAProduct",
    "NotKato",
    "PerronData",
    "QuadraticSurd",
    "ResourceLimitError",
    "SparseLaurentPoly",
    "StandardForm",
    "alg_dim",
    "as_point",
    "betti_numbers",
    "build_report",
    "canonical_descriptor",
    "certify_ball12_contraction",
    "characteristic_polynomial",
    "compose_factors",
    "contracts_unit_ball",
    "coordinate_field",
    "cyclic_normal_form",
    "elementary",
    "erase_index",
    "eval_inverse",
    "eval_map",
    "factorize",
    "format_complex",
    "format_matrix_json",
    "format_matrix_text",
    "format_orbit_json",
    "format_point",
    "format_seq_json",
    "format_seq_text",
    "function_nullity_note",
    "fundamental_domain_membership",
    "hermite_normal_form",
    "hol_vf_dimension",
    "invariant_monomials",
    "is_kato",
    "iter_monomials",
    "lattice_index",
    "left_fixed_lattice",
    "left_kernel_lattice",
    "monomial_field",
    "multiplicity_one",
    "one_form_nullity",
    "origin",
    "parse_complex",
    "parse_matrix",
    "parse_orbit",
    "parse_point",
    "parse_seq",
    "perron_data",
    "positivity_power",
    "pushforward_invariance",
    "root_of_unity_check",
    "sample_ball_points",
    "sample_torus_points",
    "sq_norm",
    "sq_norm_12",
    "stable_membership",
    "standard_field_generators",
    "standard_form",
    "tangent_field_nullity",
    "theta_lattice",
    "twisted_betti_numbers",
    "type_of",
    "unit_point",
    "verify_J0_relation",
]
