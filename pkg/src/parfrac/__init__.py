"""Exact partial fractions of products of affine-linear reciprocals,
indexed by the points of the associated hyperplane arrangement."""

from .arrangement import (
    ArrangementInput,
    ArrangementPoint,
    GenericityReport,
    enumerate_points,
    is_generic,
    parse_input,
    spanning_subsets,
    validate,
)
from .decomposer import (
    STRATEGIES,
    Decomposition,
    PointPolynomial,
    SeparationInstance,
    Term,
    decompose,
    point_polynomials,
    residue_coefficient,
    separate,
)
from .multipoly import AffineForm, MultiPoly, product_of_forms
from .verifier import spot_check, verify_identity, verify_point_form, verify_residues

__all__ = [
    "AffineForm",
    "ArrangementInput",
    "ArrangementPoint",
    "Decomposition",
    "GenericityReport",
    "MultiPoly",
    "PointPolynomial",
    "STRATEGIES",
    "SeparationInstance",
    "Term",
    "decompose",
    "enumerate_points",
    "is_generic",
    "parse_input",
    "point_polynomials",
    "product_of_forms",
    "residue_coefficient",
    "separate",
    "spanning_subsets",
    "spot_check",
    "validate",
    "verify_identity",
    "verify_point_form",
    "verify_residues",
]
