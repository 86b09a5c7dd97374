"""Homogeneous Poisson structures and conformal Jacobi morphisms."""

from __future__ import annotations

from itertools import combinations_with_replacement

from ..errors import ChartMismatch, HypothesisViolated
from ..scalar import ScalarField
from ..tensor import (
    EndomorphismField,
    MultivectorField,
    basis_forms,
    basis_vectors,
    bivector_apply,
    compose_J_bivector,
    lie_derivative,
    schouten_bracket,
)
from .compat import clause_composition, clause_torsion_LL
from .core import _concomitant, jacobi_bracket
from .report import ERROR, CheckReport, Residuals
from .structures import JacobiPair


def is_homogeneous_poisson(pi: MultivectorField, Z: MultivectorField) -> CheckReport:
    """Pass iff ``[π,π] = 0`` and ``[Z,π] = −π``."""
    res = Residuals()
    res.check("[π,π]", schouten_bracket(pi, pi))
    res.check("[Z,π]+π", schouten_bracket(Z, pi) + pi)
    return CheckReport.from_residuals("is_homogeneous_poisson", res)


def _concomitant_clause(pi, J) -> CheckReport:
    chart = pi.chart
    Jpi = compose_J_bivector(J, pi)
    forms = basis_forms(chart)
    res = Residuals()
    for i, a in enumerate(forms):
        for j in range(i + 1, len(forms)):
            res.check(f"C(π,J)[{chart.names[i]},{chart.names[j]}]", _concomitant(pi, Jpi, J, a, forms[j]))
    return CheckReport.from_residuals("C(π,J)=0", res)


def check_homogeneous_pn(pi: MultivectorField, Z: MultivectorField, J: EndomorphismField, strict: bool = False) -> CheckReport:
    """The homogeneity condition for ``Jπ`` in both forms.

    ``π(L_Z ᵗJα − ᵗJ L_Z α)`` is C^∞-linear in ``α`` and is evaluated on basis
    covectors; ``[Z,Jπ] + Jπ`` is computed independently and the two verdicts
    must agree.  ``[Z,JX] − J[Z,X]`` on basis fields is reported but does not
    count: it is sufficient, not necessary.
    """
    chart = pi.chart
    hyp = {"homogeneous": is_homogeneous_poisson(pi, Z), "J∘π=π∘ᵗJ": clause_composition(J, pi)}
    if hyp["J∘π=π∘ᵗJ"].passed:
        hyp["C(π,J)=0"] = _concomitant_clause(pi, J)
        hyp["N_J(πα,πβ)=0"] = clause_torsion_LL(J, pi)
    for key, rep in hyp.items():
        rep.name = key
    hyp_rep = CheckReport.combine("hypotheses", hyp)
    if not hyp_rep.passed and strict:
        raise HypothesisViolated("; ".join(hyp_rep.residuals))
    clauses = {"hypotheses": hyp_rep}
    if not hyp["J∘π=π∘ᵗJ"].passed:
        return CheckReport.combine("check_homogeneous_pn", clauses, notes=["Jπ is not a bivector"])

    eq9 = Residuals()
    for i, a in enumerate(basis_forms(chart)):
        w = lie_derivative(Z, J.transpose_apply(a)) - J.transpose_apply(lie_derivative(Z, a))
        eq9.check(f"dx[{chart.names[i]}]", bivector_apply(pi, w))
    clauses["π∘[L_Z,ᵗJ]=0"] = CheckReport.from_residuals("π(L_Z∘ᵗJ-ᵗJ∘L_Z)=0", eq9)

    Jpi = compose_J_bivector(J, pi)
    cross = Residuals()
    cross.check("[Z,Jπ]+Jπ", schouten_bracket(Z, Jpi) + Jpi)
    clauses["[Z,Jπ]=-Jπ"] = CheckReport.from_residuals("[Z,Jπ]=-Jπ", cross)

    cor = Residuals()
    for i, X in enumerate(basis_vectors(chart)):
        cor.check(f"∂[{chart.names[i]}]", schouten_bracket(Z, J.apply(X)) - J.apply(schouten_bracket(Z, X)))
    clauses["[Z,JX]=J[Z,X]"] = CheckReport.from_residuals("[Z,JX]=J[Z,X]", cor)

    notes = ["[Z,JX]=J[Z,X] is informational (sufficient, not necessary)"]
    if not hyp_rep.passed:
        notes.append("hypotheses violated; remaining clauses evaluated anyway")
    e9, cr = clauses["π∘[L_Z,ᵗJ]=0"].passed, clauses["[Z,Jπ]=-Jπ"].passed
    if e9 != cr and hyp["homogeneous"].passed:
        msg = f"π∘[L_Z,ᵗJ]=0 is {e9} but [Z,Jπ]=-Jπ is {cr}"
        clauses["consistency"] = CheckReport("consistency", ERROR, [msg], [msg])
    return CheckReport.combine("check_homogeneous_pn", clauses, notes=notes, informational=("[Z,JX]=J[Z,X]",))


def verify_conformal_morphism(p_src: JacobiPair, p_dst: JacobiPair, a: ScalarField, test_functions) -> CheckReport:
    """``{a·f∘ψ, a·g∘ψ}₁ = a·({f,g}₂∘ψ)`` for ``ψ`` the projection dropping extra coordinates.

    The source chart must extend the destination chart.  Whether ``a``
    vanishes nowhere is not decided; it is recorded as the caller's claim.
    """
    src, dst = p_src.chart, p_dst.chart
    if src.names[: dst.dimension] != dst.names:
        raise ChartMismatch(f"{src} does not extend {dst}")
    if a.chart != src:
        raise ChartMismatch(f"conformal factor lives on {a.chart}, expected {src}")
    notes = ["a is assumed nowhere zero (not decided symbolically)"]
    tests = list(test_functions)
    if not tests:
        notes.append("warning: no test functions, passes vacuously")
    res = Residuals()
    for f, g in combinations_with_replacement(range(len(tests)), 2):
        F, G = tests[f], tests[g]
        lhs = jacobi_bracket(p_src, a * F.lift(src), a * G.lift(src))
        rhs = a * jacobi_bracket(p_dst, F, G).lift(src)
        res.check(f"({F},{G})", lhs - rhs)
    return CheckReport.from_residuals("verify_conformal_morphism", res, notes=notes)


__all__ = ["check_homogeneous_pn", "is_homogeneous_poisson", "verify_conformal_morphism"]
