"""Recursion operators on TM ⊕ ℝ and the Jacobi-Nijenhuis conditions."""

from __future__ import annotations

from itertools import combinations

from ..tensor import (
    DifferentialForm,
    basis_forms,
    bivector_apply,
    compose_J_bivector,
    pair,
)
from .compat import DEFAULT_KMAX, clause_b, clause_composition, clause_iii
from .core import require_jacobi, star_bracket, tilde_anchor
from .report import CheckReport, Residuals
from .structures import FieldPair, JacobiPair, RecursionOperator, SectionPair


def recursion_torsion(R: RecursionOperator, a: FieldPair, b: FieldPair) -> FieldPair:
    """``N_𝒥(a, b)`` with respect to the star bracket."""
    Ra, Rb = R(a), R(b)
    out = star_bracket(Ra, Rb)
    out = out - R(star_bracket(Ra, b))
    out = out - R(star_bracket(a, Rb))
    return out + R(R(star_bracket(a, b)))


def commutation_clauses(p: JacobiPair, R: RecursionOperator) -> CheckReport:
    """The three conditions equivalent to ``𝒥∘~# = ~#∘ᵗ𝒥``."""
    L, E = p.L, p.E
    chart = p.chart
    c1 = Residuals()
    c1.check("i_Eα₀", pair(R.alpha0, E))
    c2 = Residuals()
    c2.check("JE-Λα₀-φ₀E", R.J.apply(E) - bivector_apply(L, R.alpha0) - E * R.phi0)
    c3 = Residuals()
    for i, a in enumerate(basis_forms(chart)):
        lhs = R.J.apply(bivector_apply(L, a)) - bivector_apply(L, R.J.transpose_apply(a))
        rhs = R.X0 * pair(a, E) + E * pair(a, R.X0)
        c3.check(f"dx[{chart.names[i]}]", lhs - rhs)
    clauses = {
        "i_Eα₀=0": CheckReport.from_residuals("i_Eα₀=0", c1),
        "JE=Λα₀+φ₀E": CheckReport.from_residuals("JE=Λα₀+φ₀E", c2),
        "JΛα-ΛᵗJα=(i_Eα)X₀+(i_X₀α)E": CheckReport.from_residuals("JΛα-ΛᵗJα=(i_Eα)X₀+(i_X₀α)E", c3),
    }
    return CheckReport.combine("commutation", clauses)


def _test_sections(chart):
    zero = DifferentialForm.zero(chart, 1)
    scalars = [chart.zero, chart.one] + chart.coordinates()
    out = []
    for a in [zero] + basis_forms(chart):
        for g in scalars:
            if a.is_zero() and g.is_zero():
                continue
            out.append(SectionPair(a, g))
    return out


def _section_label(chart, s: SectionPair) -> str:
    nz = [chart.names[i] for (i,), v in s.alpha.items() if not v.is_zero()]
    form = f"dx[{nz[0]}]" if nz else "0"
    return f"({form},{s.f})"


def torsion_clause(p: JacobiPair, R: RecursionOperator) -> CheckReport:
    """``N_𝒥(~#s₁, ~#s₂) = 0`` on a finite family of sections.

    ``N_𝒥`` is C^∞-linear in both slots and ``~#`` is linear, so the family
    of basis covectors with ``g ∈ {0, 1, coordinates}`` is more than enough.
    """
    chart = p.chart
    secs = _test_sections(chart)
    images = [tilde_anchor(p, s) for s in secs]
    res = Residuals()
    for i, j in combinations(range(len(secs)), 2):
        if images[i].is_zero() or images[j].is_zero():
            continue
        N = recursion_torsion(R, images[i], images[j])
        if not N.is_zero():
            res.items.append(f"{_section_label(chart, secs[i])},{_section_label(chart, secs[j])}: {N}")
    return CheckReport.from_residuals("N_𝒥(~#s₁,~#s₂)=0", res)


def recursion_operator_check(p: JacobiPair, R: RecursionOperator, k_max: int = DEFAULT_KMAX) -> CheckReport:
    """Whether ``(Λ, E, 𝒥)`` is a Jacobi-Nijenhuis structure.

    Clauses in order: the commutation conditions, the recursion-operator
    torsion, then C₁, C₂ (``k ≤ k_max``) and C₃.  C₃ needs ``JΛ`` to be a
    bivector, so ``J∘Λ = Λ∘ᵗJ`` is checked alongside it.
    """
    require_jacobi(p)
    L, E, J = p.L, p.E, R.J
    clauses = {}
    clauses["commutation"] = commutation_clauses(p, R)
    clauses["recursion torsion"] = torsion_clause(p, R)
    c1 = Residuals()
    c1.check("JE-Λα₀-φ₀E", J.apply(E) - bivector_apply(L, R.alpha0) - E * R.phi0)
    clauses["C1"] = CheckReport.from_residuals("C1", c1)
    ks = list(range(1, k_max + 1))
    clauses["C2"] = clause_iii(L, E, J, ks)
    clauses["C2"].name = f"C2 k=1..{k_max}"
    ci = clause_composition(J, L)
    clauses["J∘Λ=Λ∘ᵗJ"] = ci
    if ci.passed:
        clauses["C3"] = clause_b(L, compose_J_bivector(J, L), J, E, name="C3")
    else:
        clauses["C3"] = CheckReport.skipped("C3", "J∘Λ≠Λ∘ᵗJ so C(Λ,J) is undefined")
    notes = [f"C2 checked up to k_max={k_max}"]
    if R.X0.is_zero():
        notes.append("X₀ vanishes identically, so X₀=0 on supp(E)")
    elif not E.is_zero():
        notes.append("X₀ is not identically zero; support of E not computed, conditions applied verbatim")
    return CheckReport.combine("recursion_operator_check", clauses, notes=notes)


__all__ = ["commutation_clauses", "recursion_operator_check", "recursion_torsion", "torsion_clause"]
