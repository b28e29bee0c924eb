"""Exact verification of cyclic algebras, their descent data, and the
birational maps between the associated twisted projective spaces."""

from .cocycles import (
    Cocycle2,
    check_2cocycle,
    cocycle_power,
    cocycle_product,
    is_normalized,
    standard_cyclic_cocycle,
)
from .crossed import (
    CrossedElement,
    associativity_check,
    center_dimension,
    crossed_multiply,
    splitting_check,
    splitting_representation,
)
from .monomial_maps import (
    LatticeCertificate,
    OutsideTorusError,
    SemilinearMonomialMap,
    compose,
    descent_cocycle_check,
    galois_generator_map,
    invert_on_torus,
    iterate,
    lattice_certificate,
    projectively_equal,
    projectively_equal_points,
)
from .pipeline import (
    BetaInconsistencyError,
    BetaSolution,
    PipelineCertificate,
    PipelineFailure,
    ThetaSpec,
    build_theta,
    build_theta1,
    build_theta2,
    certificate_dict,
    cyclotomic_spec,
    invert_theta1_explicit,
    run_pipeline,
    solve_beta,
    solve_beta_from_cocycle,
    symbolic_spec,
    validate_certificate,
    verify_diagram,
    write_certificate,
)
from .scalars import (
    CyclotomicElement,
    GaloisAutomorphism,
    SymbolicScalar,
    SymbolicShift,
    cyclotomic_polynomial,
    euler_phi,
    fixed_by,
)

__all__ = [
    "BetaInconsistencyError",
    "BetaSolution",
    "Cocycle2",
    "CrossedElement",
    "CyclotomicElement",
    "GaloisAutomorphism",
    "LatticeCertificate",
    "OutsideTorusError",
    "PipelineCertificate",
    "PipelineFailure",
    "SemilinearMonomialMap",
    "SymbolicScalar",
    "SymbolicShift",
    "ThetaSpec",
    "associativity_check",
    "build_theta",
    "build_theta1",
    "build_theta2",
    "center_dimension",
    "certificate_dict",
    "check_2cocycle",
    "cocycle_power",
    "cocycle_product",
    "compose",
    "crossed_multiply",
    "cyclotomic_polynomial",
    "cyclotomic_spec",
    "descent_cocycle_check",
    "euler_phi",
    "fixed_by",
    "galois_generator_map",
    "invert_on_torus",
    "invert_theta1_explicit",
    "is_normalized",
    "iterate",
    "lattice_certificate",
    "projectively_equal",
    "projectively_equal_points",
    "run_pipeline",
    "solve_beta",
    "solve_beta_from_cocycle",
    "splitting_check",
    "splitting_representation",
    "standard_cyclic_cocycle",
    "symbolic_spec",
    "validate_certificate",
    "verify_diagram",
    "write_certificate",
]
