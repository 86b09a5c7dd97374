"""Jacobi structures, compatibility with (1,1)-tensors, pencils and recursion operators."""

from .compat import (
    check_compatibility,
    check_anchor_equivalences,
    check_theorem_rec,
    hierarchy,
    hierarchy_report,
    is_jacobi_pencil,
)
from .core import (
    algebroid_bracket,
    anchor,
    concomitant,
    depoissonize,
    form_bracket,
    is_jacobi,
    is_poisson,
    jacobi_bracket,
    lcs_pencil_identities,
    lcs_recursion_tensor,
    lcs_structure_residuals,
    lcs_to_jacobi,
    poissonize,
    star_bracket,
    tilde_anchor,
)
from .homogeneous import check_homogeneous_pn, is_homogeneous_poisson, verify_conformal_morphism
from .identities import REGISTRY, UNCONDITIONAL, verify_identity
from .recursion import recursion_operator_check, recursion_torsion
from .report import ERROR, FAIL, PASS, CheckReport
from .structures import FieldPair, JacobiPair, RecursionOperator, SectionPair

__all__ = [
    "ERROR",
    "FAIL",
    "PASS",
    "REGISTRY",
    "UNCONDITIONAL",
    "CheckReport",
    "FieldPair",
    "JacobiPair",
    "RecursionOperator",
    "SectionPair",
    "algebroid_bracket",
    "anchor",
    "check_compatibility",
    "check_homogeneous_pn",
    "check_anchor_equivalences",
    "check_theorem_rec",
    "concomitant",
    "depoissonize",
    "form_bracket",
    "hierarchy",
    "hierarchy_report",
    "is_homogeneous_poisson",
    "is_jacobi",
    "is_jacobi_pencil",
    "is_poisson",
    "jacobi_bracket",
    "lcs_pencil_identities",
    "lcs_recursion_tensor",
    "lcs_structure_residuals",
    "lcs_to_jacobi",
    "poissonize",
    "recursion_operator_check",
    "recursion_torsion",
    "star_bracket",
    "tilde_anchor",
    "verify_conformal_morphism",
    "verify_identity",
]
