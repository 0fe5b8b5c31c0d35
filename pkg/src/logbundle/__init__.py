"""Exact-rational computations with hyperplane arrangements in projective
space: association, logarithmic bundles as Steiner tensors, splitting types
and jumping lines, monoidal complexes, curve-multiplication tensors and the
arrangement classification built on them."""

from .arrangement import (
    Arrangement,
    associated,
    fundamental_tensor,
    is_associated_pair,
    is_self_associated,
    new_arrangement,
    osculating_arrangement,
)
from .errors import (
    ClassifierInconsistencyError,
    FullComplexError,
    GeneralPositionError,
    InterpolationError,
    LogBundleError,
    NonUniquePsiError,
)
from .linalg import Matrix, rat
from .monoidal import (
    CodepMatrix,
    codependence_matrix,
    curve_equation_p2,
    exists_quadric_through_curve_and_flat,
    membership_determinant,
    monoid_basis,
    monoid_space_dim,
    monoid_through_points,
    monoidal_kernel_dim,
    monoidal_membership,
    rnc_meets_flat,
)
from .poly import (
    BinaryForm,
    MultiPoly,
    binary_resultant,
    fit_vanishing,
    interpolate_dense,
    root_multiplicity,
)
from .projgeom import (
    RNC,
    Flat2,
    HyperplaneForm,
    LineSpan,
    ProjPoint,
    assert_general_position,
    dual_rnc,
    flat_to_dual_line,
    general_position,
    line_to_dual_flat,
    plucker,
    point_on_rnc,
    rnc_through,
)
from .quadrics import (
    QuadraticForm,
    TorelliVerdict,
    castelnuovo_rnc,
    conditions_imposed,
    exists_quadric_containing,
    is_adjoint_sampled,
    torelli_classify,
)
from .restriction import (
    SplittingType,
    connection_map,
    generic_splitting,
    is_jumping,
    is_super_jumping,
    restrict_to_line,
    splitting_type,
)
from .rng import XorShift64
from .steiner import (
    IntertwinerVerdict,
    ResidueIntertwiner,
    SteinerTensor,
    associated_steiner,
    build_residue_intertwiner,
    certify_injectivity,
    chern_coeffs,
    cohomology_dims,
    fiber_map,
    injective_at,
    intertwiner_solve,
    normalization_split,
    schwarzenberger_curve,
    schwarzenberger_tensor,
    substitute_v,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BinaryForm",
    "ClassifierInconsistencyError",
    "CodepMatrix",
    "Flat2",
    "FullComplexError",
    "GeneralPositionError",
    "HyperplaneForm",
    "InterpolationError",
    "IntertwinerVerdict",
    "LineSpan",
    "LogBundleError",
    "Matrix",
    "MultiPoly",
    "NonUniquePsiError",
    "ProjPoint",
    "QuadraticForm",
    "RNC",
    "ResidueIntertwiner",
    "SplittingType",
    "SteinerTensor",
    "TorelliVerdict",
    "XorShift64",
    "assert_general_position",
    "associated",
    "associated_steiner",
    "binary_resultant",
    "build_residue_intertwiner",
    "castelnuovo_rnc",
    "certify_injectivity",
    "chern_coeffs",
    "codependence_matrix",
    "cohomology_dims",
    "conditions_imposed",
    "connection_map",
    "curve_equation_p2",
    "dual_rnc",
    "exists_quadric_containing",
    "exists_quadric_through_curve_and_flat",
    "fiber_map",
    "fit_vanishing",
    "flat_to_dual_line",
    "fundamental_tensor",
    "general_position",
    "generic_splitting",
    "injective_at",
    "interpolate_dense",
    "intertwiner_solve",
    "is_adjoint_sampled",
    "is_associated_pair",
    "is_jumping",
    "is_self_associated",
    "is_super_jumping",
    "line_to_dual_flat",
    "membership_determinant",
    "monoid_basis",
    "monoid_space_dim",
    "monoid_through_points",
    "monoidal_kernel_dim",
    "monoidal_membership",
    "new_arrangement",
    "normalization_split",
    "osculating_arrangement",
    "plucker",
    "point_on_rnc",
    "rat",
    "restrict_to_line",
    "rnc_meets_flat",
    "rnc_through",
    "root_multiplicity",
    "schwarzenberger_curve",
    "schwarzenberger_tensor",
    "splitting_type",
    "substitute_v",
    "torelli_classify",
]
