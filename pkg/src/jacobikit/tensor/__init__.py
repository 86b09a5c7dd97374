"""Multivectors, forms, (1,1)-tensors and the bracket calculus on a chart."""

from .calculus import (
    apply_endomorphism,
    bivector_apply,
    bivector_eval,
    bivector_matrix,
    compose_J_bivector,
    composition_defect,
    contract,
    differential,
    evaluate,
    evaluate_form,
    exterior_derivative,
    interior_product,
    lie_derivative,
    nijenhuis_torsion,
    pair,
    power_apply,
    power_bivector,
    schouten_bracket,
    transpose_apply,
    vector_apply,
    wedge,
)
from .endomorphism import EndomorphismField
from .fields import (
    DifferentialForm,
    GradedField,
    MultivectorField,
    basis_form,
    basis_forms,
    basis_vector,
    basis_vectors,
    bivector,
    euler_field,
    one_form,
    vector_field,
)

__all__ = [
    "DifferentialForm",
    "EndomorphismField",
    "GradedField",
    "MultivectorField",
    "apply_endomorphism",
    "basis_form",
    "basis_forms",
    "basis_vector",
    "basis_vectors",
    "bivector",
    "bivector_apply",
    "bivector_eval",
    "bivector_matrix",
    "compose_J_bivector",
    "composition_defect",
    "contract",
    "differential",
    "euler_field",
    "evaluate",
    "evaluate_form",
    "exterior_derivative",
    "interior_product",
    "lie_derivative",
    "nijenhuis_torsion",
    "one_form",
    "pair",
    "power_apply",
    "power_bivector",
    "schouten_bracket",
    "transpose_apply",
    "vector_apply",
    "vector_field",
    "wedge",
]
