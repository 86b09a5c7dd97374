"""Jacobi and Poisson axioms, brackets, Poissonization and the LCS construction."""

from __future__ import annotations

from ..errors import ChartMismatch, Degenerate, KindMismatch, NameClash, NotHomogeneous, NotJacobi, NotLCS
from ..scalar import Chart, ScalarField
from ..tensor import (
    DifferentialForm,
    EndomorphismField,
    MultivectorField,
    basis_vector,
    bivector_apply,
    bivector_eval,
    compose_J_bivector,
    differential,
    exterior_derivative,
    interior_product,
    lie_derivative,
    pair,
    schouten_bracket,
    vector_apply,
    wedge,
)
from .linalg import inverse, matmul
from .report import CheckReport, Residuals
from .structures import FieldPair, JacobiPair, SectionPair

DEFAULT_T = "t"


# -- axioms ----------------------------------------------------------------------

def is_poisson(pi: MultivectorField) -> CheckReport:
    """Pass iff ``[π, π] = 0``."""
    res = Residuals()
    res.check("[π,π]", schouten_bracket(pi, pi))
    return CheckReport.from_residuals("is_poisson", res)


def jacobi_residuals(p: JacobiPair) -> tuple:
    """``([E,Λ], [Λ,Λ] − 2E∧Λ)``."""
    return schouten_bracket(p.E, p.L), schouten_bracket(p.L, p.L) - wedge(p.E, p.L) * 2


def is_jacobi(p: JacobiPair) -> CheckReport:
    """Pass iff ``[E,Λ] = 0`` and ``[Λ,Λ] = 2E∧Λ``."""
    r1, r2 = jacobi_residuals(p)
    res = Residuals()
    res.check("[E,Λ]", r1)
    res.check("[Λ,Λ]-2E∧Λ", r2)
    return CheckReport.from_residuals("is_jacobi", res)


def require_jacobi(p: JacobiPair, what="pair"):
    rep = is_jacobi(p)
    if not rep.passed:
        raise NotJacobi(f"{what} is not a Jacobi structure: {'; '.join(rep.residuals)}")


def jacobi_bracket(p: JacobiPair, f: ScalarField, g: ScalarField) -> ScalarField:
    """``{f,g} = Λ(df,dg) + ⟨f dg − g df, E⟩``."""
    df, dg = differential(f), differential(g)
    return bivector_eval(p.L, df, dg) + f * pair(dg, p.E) - g * pair(df, p.E)


# -- Poissonization --------------------------------------------------------------

def poissonize(p: JacobiPair, t: str = DEFAULT_T) -> MultivectorField:
    """``e^{-t}(Λ + ∂_t∧E)`` on the chart extended by ``t`` (appended last)."""
    chart = p.chart
    if t in chart.names:
        raise NameClash(f"chart {chart} already has a coordinate named {t!r}")
    ext = chart.extend(t)
    n = ext.dimension
    factor = ext.exp([0] * (n - 1) + [-1])
    dt = basis_vector(ext, n - 1)
    return (p.L.lift(ext) + wedge(dt, p.E.lift(ext))) * factor


def _t_position(chart: Chart, t_index) -> int:
    if isinstance(t_index, str):
        return chart.index(t_index)
    if not 0 <= t_index < chart.dimension:
        raise IndexError(f"t_index {t_index} out of range")
    return t_index


def depoissonize(pi: MultivectorField, t_index=DEFAULT_T) -> JacobiPair:
    """Inverse of :func:`poissonize` in a chart straightened along ``∂_t``.

    ``t_index`` is a coordinate name or a 0-based index.  Requires ``e^t π``
    to be independent of ``t``.
    """
    chart = pi.chart
    ti = _t_position(chart, t_index)
    name = chart.names[ti]
    freq = [0] * chart.dimension
    freq[ti] = 1
    scaled = pi * chart.exp(freq)
    for idx, v in scaled.items():
        d = v.diff(ti)
        if not d.is_zero():
            raise NotHomogeneous(f"e^{name}·π depends on {name} (component {idx}: ∂ = {d})")
    base_names = chart.names[:ti] + chart.names[ti + 1:]
    base = Chart(base_names)
    pos = {i: (i if i < ti else i - 1) for i in range(chart.dimension) if i != ti}
    L, E = {}, {}
    for (i, j), v in scaled.items():
        w = v.restrict(name, base)
        if i == ti:
            E[(pos[j],)] = w
        elif j == ti:
            E[(pos[i],)] = -w
        else:
            L[(pos[i], pos[j])] = w
    return JacobiPair(MultivectorField(base, 2, L), MultivectorField(base, 1, E))


# -- brackets of forms -------------------------------------------------------------

def form_bracket(L: MultivectorField, alpha: DifferentialForm, beta: DifferentialForm) -> DifferentialForm:
    """``{α,β}_Λ = L_{Λα}β − L_{Λβ}α − d(Λ(α,β))``."""
    out = lie_derivative(bivector_apply(L, alpha), beta)
    out = out - lie_derivative(bivector_apply(L, beta), alpha)
    return out - differential(bivector_eval(L, alpha, beta))


def concomitant(L: MultivectorField, J: EndomorphismField, alpha, beta) -> DifferentialForm:
    """``C(Λ,J)(α,β) = {α,β}_{JΛ} − ({ᵗJα,β}_Λ + {α,ᵗJβ}_Λ − ᵗJ{α,β}_Λ)``."""
    JL = compose_J_bivector(J, L)
    return _concomitant(L, JL, J, alpha, beta)


def _concomitant(L, JL, J, alpha, beta):
    tJa, tJb = J.transpose_apply(alpha), J.transpose_apply(beta)
    out = form_bracket(JL, alpha, beta)
    out = out - form_bracket(L, tJa, beta)
    out = out - form_bracket(L, alpha, tJb)
    return out + J.transpose_apply(form_bracket(L, alpha, beta))


# -- Lie algebroid of a Jacobi manifold --------------------------------------------

def _algebroid_bracket(p: JacobiPair, s1: SectionPair, s2: SectionPair) -> SectionPair:
    L, E = p.L, p.E
    a, f, b, g = s1.alpha, s1.f, s2.alpha, s2.f
    form = form_bracket(L, a, b)
    form = form + lie_derivative(E, b) * f - lie_derivative(E, a) * g
    form = form - interior_product(E, wedge(a, b))
    df, dg = differential(f), differential(g)
    scalar = -bivector_eval(L, a, b) + bivector_eval(L, a, dg) - bivector_eval(L, b, df)
    scalar = scalar + f * pair(dg, E) - g * pair(df, E)
    return SectionPair(form, scalar)


def algebroid_bracket(p: JacobiPair, s1: SectionPair, s2: SectionPair, check: bool = True) -> SectionPair:
    """The bracket ``{(α,f),(β,g)}_{(Λ,E)}`` on sections of ``T*M ⊕ ℝ``."""
    if check:
        require_jacobi(p)
    return _algebroid_bracket(p, s1, s2)


def _anchor(p: JacobiPair, s: SectionPair) -> MultivectorField:
    return bivector_apply(p.L, s.alpha) + p.E * s.f


def anchor(p: JacobiPair, s: SectionPair, check: bool = True) -> MultivectorField:
    """``#(α, f) = Λα + fE``."""
    if check:
        require_jacobi(p)
    return _anchor(p, s)


def star_bracket(a: FieldPair, b: FieldPair) -> FieldPair:
    """``[(X1,f1),(X2,f2)]⋆ = ([X1,X2], X1(f2) − X2(f1))``."""
    if a.chart != b.chart:
        raise ChartMismatch(f"{a.chart} vs {b.chart}")
    return FieldPair(schouten_bracket(a.X, b.X), vector_apply(a.X, b.f) - vector_apply(b.X, a.f))


def tilde_anchor(p: JacobiPair, s: SectionPair) -> FieldPair:
    """``~#(α, g) = (Λα + gE, −i_E α)``."""
    return FieldPair(bivector_apply(p.L, s.alpha) + p.E * s.f, -pair(s.alpha, p.E))


# -- locally conformal symplectic structures ---------------------------------------

def form_matrix(F: DifferentialForm) -> list:
    """``F[i][j] = F(∂_i, ∂_j)``."""
    n = F.chart.dimension
    return [[F[(i, j)] for j in range(n)] for i in range(n)]


def lcs_structure_residuals(F: DifferentialForm, omega: DifferentialForm) -> list:
    res = Residuals()
    res.check("dω", exterior_derivative(omega))
    res.check("dF+ω∧F", exterior_derivative(F) + wedge(omega, F))
    return res.items


def lcs_to_jacobi(F: DifferentialForm, omega: DifferentialForm) -> JacobiPair:
    """Jacobi pair of a locally conformal symplectic structure ``(F, ω)``.

    ``Λ`` solves ``i_{Λα}F = −α``.  The Reeb-type field is ``E = Λω``, the
    solution of ``i_E F = −ω``; with the pairing conventions used here this is
    the sign for which ``(Λ, E)`` is a Jacobi pair (its Poissonization is
    Poisson and the bracket ``Λ(df,dg) + f E(g) − g E(f)`` satisfies the Jacobi
    identity).
    """
    if not isinstance(F, DifferentialForm) or F.degree != 2:
        raise KindMismatch("F must be a 2-form")
    if not isinstance(omega, DifferentialForm) or omega.degree != 1:
        raise KindMismatch("ω must be a 1-form")
    if F.chart != omega.chart:
        raise ChartMismatch(f"{F.chart} vs {omega.chart}")
    chart = F.chart
    n = chart.dimension
    if n % 2:
        raise Degenerate(f"no nondegenerate 2-form in odd dimension {n}")
    residuals = lcs_structure_residuals(F, omega)
    if residuals:
        raise NotLCS("(F, ω) fails the LCS structure equations", residuals)
    inv = inverse(form_matrix(F), chart)
    L = {(i, j): -inv[i][j] for i in range(n) for j in range(i + 1, n)}
    w = [omega[(j,)] for j in range(n)]
    E = {}
    for i in range(n):
        acc = chart.zero
        for j in range(n):
            if inv[i][j] and w[j]:
                acc = acc + inv[i][j] * w[j]
        E[(i,)] = acc
    return JacobiPair(MultivectorField(chart, 2, L), MultivectorField(chart, 1, E))


def lcs_recursion_tensor(F1: DifferentialForm, F2: DifferentialForm) -> EndomorphismField:
    """``J = ♭₂⁻¹ ∘ ♭₁`` with ``♭ᵢ(X) = −i_X Fᵢ``."""
    if F1.chart != F2.chart:
        raise ChartMismatch(f"{F1.chart} vs {F2.chart}")
    chart = F1.chart
    # ♭(X)_j = Σ_i F_ji X^i, so ♭ has matrix F on components
    M = matmul(inverse(form_matrix(F2), chart), form_matrix(F1), chart)
    return EndomorphismField(chart, M)


def lcs_pencil_identities(p1: JacobiPair, p2: JacobiPair, omega: DifferentialForm) -> CheckReport:
    """The two bracket expansions relating an LCS pencil to its local Poisson pencil.

    ``ω = df`` must have constant components so that ``e^f`` is in the scalar
    ring; ``πᵢ = e^{−f}Λᵢ``.  Checked exactly:

    ``[π₁,π₂] = e^{−2f}([Λ₁,Λ₂] − E₁∧Λ₂ − E₂∧Λ₁)`` and
    ``[[π₁,π₂], e^f] = −e^{−f}([E₂,Λ₁] + [E₁,Λ₂])``.
    """
    chart = p1.chart
    if p2.chart != chart or omega.chart != chart:
        raise ChartMismatch("pairs and ω must share a chart")
    coeffs = []
    for i in range(chart.dimension):
        c = omega[(i,)]
        if not c.is_constant():
            raise ValueError("ω must have constant components")
        coeffs.append(c.constant_value())
    ef = chart.exp(coeffs)
    emf = chart.exp([-c for c in coeffs])
    pi1, pi2 = p1.L * emf, p2.L * emf
    P = schouten_bracket(pi1, pi2)
    clauses = {}
    res = Residuals()
    expansion = (schouten_bracket(p1.L, p2.L) - wedge(p1.E, p2.L) - wedge(p2.E, p1.L)) * (emf * emf)
    res.check("[π1,π2]-e^{-2f}([Λ1,Λ2]-E1∧Λ2-E2∧Λ1)", P - expansion)
    clauses["[π1,π2] expansion"] = CheckReport.from_residuals("[π1,π2] expansion", res)
    res = Residuals()
    lhs = schouten_bracket(P, MultivectorField.scalar(ef))
    rhs = (schouten_bracket(p2.E, p1.L) + schouten_bracket(p1.E, p2.L)) * (-emf)
    res.check("[[π1,π2],e^f]+e^{-f}([E2,Λ1]+[E1,Λ2])", lhs - rhs)
    clauses["[[π1,π2],e^f] expansion"] = CheckReport.from_residuals("[[π1,π2],e^f] expansion", res)
    return CheckReport.combine("lcs_pencil_identities", clauses)


__all__ = [
    "algebroid_bracket",
    "anchor",
    "concomitant",
    "depoissonize",
    "form_bracket",
    "form_matrix",
    "is_jacobi",
    "is_poisson",
    "jacobi_bracket",
    "jacobi_residuals",
    "lcs_pencil_identities",
    "lcs_recursion_tensor",
    "lcs_structure_residuals",
    "lcs_to_jacobi",
    "poissonize",
    "require_jacobi",
    "star_bracket",
    "tilde_anchor",
]
