"""Compatibility of a (1,1)-tensor with a Jacobi pair, pencils and hierarchies.

Universally quantified statements over 1-forms are checked on the basis
covectors ``dx^i``; every expression used that way is C^∞-linear in its
form arguments once ``J∘Λ = Λ∘ᵗJ`` holds.
"""

from __future__ import annotations

from itertools import combinations

from ..errors import HypothesisViolated, NotABivector, NotCompatible
from ..tensor import (
    EndomorphismField,
    bivector_apply,
    bivector_eval,
    composition_defect,
    compose_J_bivector,
    nijenhuis_torsion,
    pair,
    power_apply,
    power_bivector,
    schouten_bracket,
    wedge,
)
from ..tensor import basis_forms
from .core import _algebroid_bracket, _anchor, _concomitant, is_jacobi, is_poisson, poissonize, require_jacobi
from .report import ERROR, FAIL, PASS, CheckReport, Residuals
from .structures import JacobiPair, SectionPair

DEFAULT_KMAX = 3


def _names(chart, *idx):
    return "[" + ",".join(chart.names[i] for i in idx) + "]"


# -- clause builders -----------------------------------------------------------------

def clause_composition(J: EndomorphismField, L) -> CheckReport:
    res = Residuals()
    res.check("J∘Λ-Λ∘ᵗJ (symmetric part of J·Λ)", composition_defect(J, L))
    return CheckReport.from_residuals("(i) J∘Λ=Λ∘ᵗJ", res)


def clause_torsion_LL(J, L) -> CheckReport:
    chart = L.chart
    images = [bivector_apply(L, a) for a in basis_forms(chart)]
    res = Residuals()
    for i, j in combinations(range(chart.dimension), 2):
        if images[i].is_zero() or images[j].is_zero():
            continue
        res.check(f"N_J(Λdx,Λdx){_names(chart, i, j)}", nijenhuis_torsion(J, images[i], images[j]))
    return CheckReport.from_residuals("N_J(Λα,Λβ)=0", res)


def clause_torsion_LE(J, L, E, ks) -> CheckReport:
    chart = L.chart
    images = [bivector_apply(L, a) for a in basis_forms(chart)]
    res = Residuals()
    for k in ks:
        JkE = power_apply(J, E, k)
        if JkE.is_zero():
            continue
        for i, X in enumerate(images):
            if X.is_zero():
                continue
            res.check(f"k={k} N_J(Λdx,J^kE){_names(chart, i)}", nijenhuis_torsion(J, X, JkE))
    label = "N_J(Λα,E)=0" if list(ks) == [0] else f"N_J(Λα,J^kE)=0 k={ks[0]}..{ks[-1]}"
    return CheckReport.from_residuals(label, res)


def _condition_vectors(L, JL, J, E):
    """``V(α,β) = Λ(C(Λ,J)(α,β)) − Λ(α,β)JE + Λ(α,ᵗJβ)E`` on basis covectors."""
    chart = L.chart
    forms = basis_forms(chart)
    JE = J.apply(E)
    for i, a in enumerate(forms):
        for j, b in enumerate(forms):
            C = _concomitant(L, JL, J, a, b)
            V = bivector_apply(L, C) - JE * bivector_eval(L, a, b) + E * bivector_eval(L, a, J.transpose_apply(b))
            yield i, j, V


def clause_b(L, JL, J, E, name="(b)") -> CheckReport:
    """``⟨ᵗJγ, V(α,β)⟩ = 0`` for all γ, i.e. ``J·V(α,β) = 0``."""
    chart = L.chart
    res = Residuals()
    for i, j, V in _condition_vectors(L, JL, J, E):
        res.check(f"J·V{_names(chart, i, j)}", J.apply(V))
    return CheckReport.from_residuals(name, res)


def clause_a(L, JL, J, E) -> CheckReport:
    """``J([JE,Λ]α + [E,JΛ]α) = 0``."""
    chart = L.chart
    B = schouten_bracket(J.apply(E), L) + schouten_bracket(E, JL)
    res = Residuals()
    for i, a in enumerate(basis_forms(chart)):
        res.check(f"J([JE,Λ]+[E,JΛ])dx{_names(chart, i)}", J.apply(bivector_apply(B, a)))
    return CheckReport.from_residuals("(a)", res)


def clause_iii(L, E, J, ks) -> CheckReport:
    res = Residuals()
    for k in ks:
        res.check(f"k={k} [J^kE,Λ]+[E,J^kΛ]", schouten_bracket(power_apply(J, E, k), L) + schouten_bracket(E, power_bivector(J, L, k)))
    return CheckReport.from_residuals(f"(iii) k=1..{ks[-1]}", res)


# -- compatibility ------------------------------------------------------------------------

def check_compatibility(p: JacobiPair, J: EndomorphismField, k_max: int = DEFAULT_KMAX) -> CheckReport:
    """Compatibility of ``J`` with ``(Λ, E)``.

    Clauses: the torsion hypotheses (``k = 0`` separately, then ``1..k_max``),
    (i) ``J∘Λ = Λ∘ᵗJ``, (ii) the concomitant condition, (iii) for
    ``k = 1..k_max``.  The ``∀k ∈ ℕ`` quantifier is truncated at ``k_max``.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    L, E = p.L, p.E
    clauses = {}
    clauses["N_J(Λα,Λβ)"] = clause_torsion_LL(J, L)
    clauses["N_J(Λα,E)"] = clause_torsion_LE(J, L, E, [0])
    clauses["N_J(Λα,J^kE)"] = clause_torsion_LE(J, L, E, list(range(1, k_max + 1)))
    ci = clause_composition(J, L)
    clauses["(i)"] = ci
    if ci.passed:
        JL = compose_J_bivector(J, L)
        clauses["(ii)"] = clause_b(L, JL, J, E, name="(ii)")
        clauses["(iii)"] = clause_iii(L, E, J, list(range(1, k_max + 1)))
    else:
        for key in ("(ii)", "(iii)"):
            clauses[key] = CheckReport.skipped(key, "JΛ is not a bivector because (i) fails")
    return CheckReport.combine("check_compatibility", clauses, notes=[f"k checked up to k_max={k_max}"])


# -- the (JΛ, JE) criterion -----------------------------------------------------------

def theorem_hypotheses(p: JacobiPair, J) -> CheckReport:
    clauses = {
        "(i)": clause_composition(J, p.L),
        "N_J(Λα,Λβ)": clause_torsion_LL(J, p.L),
        "N_J(Λα,E)": clause_torsion_LE(J, p.L, p.E, [0]),
    }
    return CheckReport.combine("hypotheses", clauses)


def check_theorem_rec(p: JacobiPair, J: EndomorphismField, strict: bool = False) -> CheckReport:
    """Conditions (a), (b) versus an independent ``is_jacobi(JΛ, JE)``.

    The two verdicts must agree whenever the hypotheses hold; a disagreement
    is reported with status ``error``.  Violated hypotheses raise
    :class:`HypothesisViolated` when ``strict``; otherwise they are reported
    and nothing else is evaluated.
    """
    require_jacobi(p)
    hyp = theorem_hypotheses(p, J)
    clauses = {"hypotheses": hyp}
    if not hyp.passed:
        if strict:
            raise HypothesisViolated("; ".join(hyp.residuals))
        return CheckReport.combine("check_theorem_rec", clauses, notes=["hypotheses violated; (a), (b) not evaluated"])
    L, E = p.L, p.E
    JL = compose_J_bivector(J, L)
    ca = clause_a(L, JL, J, E)
    cb = clause_b(L, JL, J, E)
    cj = is_jacobi(JacobiPair(JL, J.apply(E)))
    cj.name = "is_jacobi(JΛ,JE)"
    clauses.update({"(a)": ca, "(b)": cb, "is_jacobi(JΛ,JE)": cj})
    lhs, rhs = ca.passed and cb.passed, cj.passed
    if lhs != rhs:
        msg = f"(a)∧(b) is {lhs} but is_jacobi(JΛ,JE) is {rhs}"
        clauses["consistency"] = CheckReport("consistency", ERROR, [msg], [msg])
        return CheckReport("check_theorem_rec", ERROR, [f"consistency | {msg}"], [msg], clauses)
    clauses["consistency"] = CheckReport("consistency", PASS)
    verdict = "holds" if lhs else "fails"
    rep = CheckReport.combine("check_theorem_rec", {k: clauses[k] for k in ("(a)", "(b)")})
    rep.clauses = clauses
    rep.notes = [f"(a)∧(b) {verdict}; is_jacobi(JΛ,JE) agrees"]
    return rep


# -- pencils and hierarchies -----------------------------------------------------------

def pencil_condition(p1: JacobiPair, p2: JacobiPair) -> CheckReport:
    res = Residuals()
    res.check("[E1,Λ2]+[E2,Λ1]", schouten_bracket(p1.E, p2.L) + schouten_bracket(p2.E, p1.L))
    res.check(
        "E1∧Λ2+E2∧Λ1-[Λ1,Λ2]",
        wedge(p1.E, p2.L) + wedge(p2.E, p1.L) - schouten_bracket(p1.L, p2.L),
    )
    return CheckReport.from_residuals("condition (2)", res)


def pencil_poissonized(p1: JacobiPair, p2: JacobiPair) -> CheckReport:
    """``[π1 − λπ2, π1 − λπ2] = 0`` with ``λ`` a fresh coordinate."""
    chart = p1.chart
    t = chart.fresh_name("t")
    pi1, pi2 = poissonize(p1, t), poissonize(p2, t)
    lam_name = pi1.chart.fresh_name("lam")
    ext = pi1.chart.extend(lam_name)
    lam = ext.coordinate(lam_name)
    P = pi1.lift(ext) - pi2.lift(ext) * lam
    rep = is_poisson(P)
    rep.name = "λ-route"
    rep.residuals = [r.replace("[π,π]", "[π1-λπ2,π1-λπ2]") for r in rep.residuals]
    return rep


def is_jacobi_pencil(p1: JacobiPair, p2: JacobiPair) -> CheckReport:
    """Both routes of the pencil criterion; they must agree."""
    require_jacobi(p1, "first pair")
    require_jacobi(p2, "second pair")
    c2 = pencil_condition(p1, p2)
    c3 = pencil_poissonized(p1, p2)
    clauses = {"condition (2)": c2, "λ-route": c3}
    if c2.passed != c3.passed:
        msg = f"condition (2) is {c2.passed} but the Poissonized pencil is {c3.passed}"
        clauses["agreement"] = CheckReport("agreement", ERROR, [msg], [msg])
        return CheckReport("is_jacobi_pencil", ERROR, [f"agreement | {msg}"], [msg], clauses)
    clauses["agreement"] = CheckReport("agreement", PASS)
    return CheckReport.combine("is_jacobi_pencil", clauses)


def hierarchy(p: JacobiPair, J: EndomorphismField, k_max: int = DEFAULT_KMAX, check: bool = True) -> list:
    """``[(J^kΛ, J^kE) for k = 0..k_max]``; requires compatibility first."""
    if check:
        rep = check_compatibility(p, J, k_max)
        if not rep.passed:
            raise NotCompatible("; ".join(rep.residuals))
    out = [p]
    for _ in range(k_max):
        prev = out[-1]
        try:
            L = compose_J_bivector(J, prev.L)
        except NotABivector as exc:  # excluded by (i)
            raise AssertionError("J^kΛ lost antisymmetry although (i) holds") from exc
        out.append(JacobiPair(L, J.apply(prev.E)))
    return out


def hierarchy_report(p: JacobiPair, J: EndomorphismField, k_max: int = DEFAULT_KMAX) -> CheckReport:
    """Compatibility, then every member and every pair of the hierarchy."""
    clauses = {"compatibility": check_compatibility(p, J, k_max)}
    if not clauses["compatibility"].passed:
        return CheckReport.combine("hierarchy", clauses, notes=["not compatible; hierarchy not built"])
    members = hierarchy(p, J, k_max, check=False)
    for k, m in enumerate(members):
        rep = is_jacobi(m)
        rep.name = f"member {k} is_jacobi"
        clauses[rep.name] = rep
    if all(clauses[f"member {k} is_jacobi"].passed for k in range(len(members))):
        for a, b in combinations(range(len(members)), 2):
            rep = is_jacobi_pencil(members[a], members[b])
            rep.name = f"pencil ({a},{b})"
            clauses[rep.name] = rep
    return CheckReport.combine("hierarchy", clauses, notes=[f"{len(members)} structures"])


# -- anchor equivalences --------------------------------------------------------------

def check_anchor_equivalences(p: JacobiPair, J: EndomorphismField, scalars=None) -> CheckReport:
    """Both equivalences between (a)/(b) and the anchor of ``(JΛ, JE)``.

    Left sides: (a) and (b) on basis covectors.  Right sides:
    ``[JΛα + f JE, g JE] = #{(α,f),(0,g)}`` and ``[JΛα, JΛβ] = #{(α,0),(β,0)}``,
    both for the pair ``(JΛ, JE)``.  These are not tensorial in the scalar
    slots, so they are sampled on basis covectors (plus ``0``) and on
    ``scalars`` (default: ``1`` and every coordinate).
    """
    require_jacobi(p)
    hyp = theorem_hypotheses(p, J)
    clauses = {"hypotheses": hyp}
    if not hyp.passed:
        return CheckReport.combine("check_anchor_equivalences", clauses, notes=["hypotheses violated"])
    chart = p.chart
    L, E = p.L, p.E
    JL = compose_J_bivector(J, L)
    JE = J.apply(E)
    q = JacobiPair(JL, JE)
    forms = basis_forms(chart)
    if scalars is None:
        scalars = [chart.one] + chart.coordinates()
    zero_form = forms[0] * 0

    ca = clause_a(L, JL, J, E)
    res = Residuals()
    for i, a in enumerate([zero_form] + forms):
        for f in [chart.zero] + scalars:
            for g in scalars:
                lhs = schouten_bracket(bivector_apply(JL, a) + JE * f, JE * g)
                rhs = _anchor(q, _algebroid_bracket(q, SectionPair(a, f), SectionPair(zero_form, g)))
                res.check(f"α#{i} f={f} g={g}", lhs - rhs)
    ra = CheckReport.from_residuals("(a) anchor form", res)

    cb = clause_b(L, JL, J, E)
    res = Residuals()
    for i, j in combinations(range(chart.dimension), 2):
        a, b = forms[i], forms[j]
        lhs = schouten_bracket(bivector_apply(JL, a), bivector_apply(JL, b))
        rhs = _anchor(q, _algebroid_bracket(q, SectionPair(a, 0), SectionPair(b, 0)))
        res.check(f"{_names(chart, i, j)}", lhs - rhs)
    rb = CheckReport.from_residuals("(b) anchor form", res)

    clauses.update({"(a)": ca, "(a) anchor form": ra, "(b)": cb, "(b) anchor form": rb})
    eq = Residuals()
    for key, left, right in (("(a)", ca, ra), ("(b)", cb, rb)):
        if left.passed != right.passed:
            eq.items.append(f"equivalence {key}: left {left.status}, right {right.status}")
    rep = CheckReport.from_residuals("check_anchor_equivalences", eq, clauses=clauses)
    rep.notes = [f"(a): {ca.status} ⇔ {ra.status}; (b): {cb.status} ⇔ {rb.status}"]
    return rep


__all__ = [
    "check_compatibility",
    "check_anchor_equivalences",
    "check_theorem_rec",
    "hierarchy",
    "hierarchy_report",
    "is_jacobi_pencil",
    "pencil_condition",
    "pencil_poissonized",
    "theorem_hypotheses",
]
