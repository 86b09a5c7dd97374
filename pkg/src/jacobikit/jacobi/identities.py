"""Registry of named tensor identities, each checked as left minus right.

Inputs are keyed ``L`` (Λ), ``E``, ``J``, ``pi``, ``alpha``, ``beta``,
``gamma``, ``X``, ``Y`` and the integer ``k``.  Omitted 1-forms and vector
fields range over the coordinate basis.  Identities with hypotheses check
them first and raise :class:`HypothesisViolated`.

``eq8`` is registered with ``+⟨C(Λ,J)(α,β), πγ⟩`` as its last term: with the
pairing and bracket conventions of this package that is the sign for which
the identity holds for all inputs.  ``eq8_minus`` keeps the other sign for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from ..errors import HypothesisViolated, KindMismatch, MissingInput, UnknownIdentity
from ..tensor import (
    DifferentialForm,
    MultivectorField,
    basis_forms,
    basis_vectors,
    bivector_apply,
    bivector_eval,
    composition_defect,
    compose_J_bivector,
    evaluate,
    lie_derivative,
    nijenhuis_torsion,
    pair,
    power_bivector,
    schouten_bracket,
    wedge,
)
from .compat import check_compatibility
from .core import _concomitant, form_bracket
from .report import CheckReport, Residuals
from .structures import JacobiPair


@dataclass(frozen=True)
class Identity:
    name: str
    required: tuple
    forms: tuple = ()
    vectors: tuple = ()
    hypotheses: Callable | None = None
    body: Callable = None
    doc: str = ""


def _chart(inputs):
    for v in inputs.values():
        if hasattr(v, "chart"):
            return v.chart
    raise MissingInput("no tensor inputs given")


def _family(inputs, key, chart, kind):
    if key in inputs:
        v = inputs[key]
        if kind is DifferentialForm and not (isinstance(v, DifferentialForm) and v.degree == 1):
            raise KindMismatch(f"{key} must be a 1-form")
        if kind is MultivectorField and not (isinstance(v, MultivectorField) and v.degree == 1):
            raise KindMismatch(f"{key} must be a vector field")
        return [(key, v)]
    if kind is DifferentialForm:
        return [(f"d{n}", f) for n, f in zip(chart.names, basis_forms(chart))]
    return [(f"∂{n}", f) for n, f in zip(chart.names, basis_vectors(chart))]


def _bivector_hyp(*pairs):
    """``J∘P = P∘ᵗJ`` for each named bivector."""

    def check(inp):
        J = inp["J"]
        for key in pairs:
            d = composition_defect(J, inp[key])
            if not d.is_zero():
                raise HypothesisViolated(f"J∘{key} ≠ {key}∘ᵗJ (defect {d})")

    return check


def _jacobi_part_hyp(inp):
    L, E = inp["L"], inp["E"]
    r = schouten_bracket(L, L) - wedge(E, L) * 2
    if not r.is_zero():
        raise HypothesisViolated(f"[Λ,Λ] ≠ 2E∧Λ (residual {r})")
    _bivector_hyp("L")(inp)


def _compat_hyp(inp):
    _bivector_hyp("L")(inp)
    k = max(int(inp.get("k", 1)), 1)
    rep = check_compatibility(JacobiPair(inp["L"], inp["E"]), inp["J"], k_max=k)
    if not rep.passed:
        raise HypothesisViolated("J is not compatible with (Λ,E): " + "; ".join(rep.residuals))


# -- bodies ----------------------------------------------------------------------------
# Each body takes a context (the inputs plus memoized derived tensors) and one
# choice of the quantified arguments, and returns (lhs, rhs).

class _Ctx(dict):
    def memo(self, key, fn):
        if key not in self:
            self[key] = fn()
        return self[key]

    def JL(self):
        return self.memo("JL", lambda: compose_J_bivector(self["J"], self["L"]))

    def bracket(self, key, a, b):
        return self.memo(("br", key), lambda: schouten_bracket(a, b))

    def conc(self, key, L, JL, a, b):
        return self.memo(("C", key, id(a), id(b)), lambda: _concomitant(L, JL, self["J"], a, b))


def _eq2(ctx, a, b, c):
    L = ctx["L"]
    lhs = pair(c, bivector_apply(L, form_bracket(L, a, b)))
    rhs = pair(c, schouten_bracket(bivector_apply(L, a), bivector_apply(L, b)))
    rhs = rhs + evaluate(ctx.bracket("LL", L, L), a, b, c) / 2
    return lhs, rhs


def _eq4(ctx, a):
    L, E = ctx["L"], ctx["E"]
    lhs = bivector_apply(ctx.bracket("EL", E, L), a)
    rhs = schouten_bracket(E, bivector_apply(L, a)) - bivector_apply(L, lie_derivative(E, a))
    return lhs, rhs


def _lemma_bivec(ctx, a, b, c):
    L, E, J = ctx["L"], ctx["E"], ctx["J"]
    JL = ctx.JL()
    JE = J.apply(E)
    tJc = J.transpose_apply(c)
    lhs = evaluate(ctx.bracket("JLJL", JL, JL), a, b, c) / 2
    rhs = evaluate(ctx.memo("JE^JL", lambda: wedge(JE, JL)), a, b, c)
    rhs = rhs + pair(tJc, bivector_apply(L, ctx.conc("L", L, JL, a, b)))
    rhs = rhs + pair(tJc, E) * bivector_eval(L, a, J.transpose_apply(b))
    rhs = rhs - pair(tJc, JE) * bivector_eval(L, a, b)
    rhs = rhs - pair(c, nijenhuis_torsion(J, bivector_apply(L, a), bivector_apply(L, b)))
    return lhs, rhs


def _eq3(ctx, a, b, c):
    L, J = ctx["L"], ctx["J"]
    JL = ctx.JL()
    LL = ctx.bracket("LL", L, L)
    tJ = J.transpose_apply
    lhs = evaluate(ctx.bracket("JLJL", JL, JL), a, b, c) / 2
    rhs = (evaluate(LL, tJ(a), b, tJ(c)) + evaluate(LL, a, tJ(b), tJ(c)) - evaluate(LL, a, b, tJ(tJ(c)))) / 2
    rhs = rhs + pair(tJ(c), bivector_apply(L, ctx.conc("L", L, JL, a, b)))
    rhs = rhs - pair(c, nijenhuis_torsion(J, bivector_apply(L, a), bivector_apply(L, b)))
    return lhs, rhs


def _lemma_vec(ctx, a, b):
    L, E, J = ctx["L"], ctx["E"], ctx["J"]
    JL = ctx.JL()
    JE = J.apply(E)
    lhs = bivector_eval(ctx.bracket("JEJL", JE, JL), a, b)
    inner = bivector_apply(ctx.bracket("JEL", JE, L), a) + bivector_apply(ctx.bracket("EJL", E, JL), a)
    inner = J.apply(inner) - J.apply(J.apply(bivector_apply(ctx.bracket("EL", E, L), a)))
    rhs = pair(b, nijenhuis_torsion(J, E, bivector_apply(L, a))) + pair(b, inner)
    return lhs, rhs


def _torsion_power(ctx, k, X, Y):
    if k == 0:
        return X * 0
    Jk = ctx.memo(("pow", k), lambda: ctx["J"].power(k))
    return nijenhuis_torsion(Jk, X, Y)


def _lemma_nij(ctx, X, Y):
    J = ctx["J"]
    k = int(ctx.get("k", 1))
    if k < 1:
        raise HypothesisViolated("lemma_nij needs k ≥ 1")
    JX, JY = J.apply(X), J.apply(Y)
    Jk = ctx.memo(("pow", k), lambda: J.power(k))
    lhs = _torsion_power(ctx, k + 1, X, Y)
    rhs = _torsion_power(ctx, k, JX, JY)
    rhs = rhs + Jk.apply(nijenhuis_torsion(J, Jk.apply(X), Y) + nijenhuis_torsion(J, X, Jk.apply(Y)))
    rhs = rhs - J.apply(J.apply(_torsion_power(ctx, k - 1, JX, JY) - _torsion_power(ctx, k, X, Y)))
    return lhs, rhs


def _eq5(ctx, a, b, X):
    L, J = ctx["L"], ctx["J"]
    JL = ctx.JL()
    JJL = ctx.memo("JJL", lambda: compose_J_bivector(J, JL))
    lhs = pair(ctx.conc("JL", JL, JJL, a, b), X)
    tJa = ctx.memo(("tJ", id(a)), lambda: J.transpose_apply(a))
    rhs = pair(ctx.conc("L", L, JL, tJa, b), X)
    rhs = rhs + pair(a, nijenhuis_torsion(J, bivector_apply(L, b), X))
    return lhs, rhs


def _eq6(ctx, a, b):
    L, J = ctx["L"], ctx["J"]
    k = int(ctx.get("k", 1))
    JkL = ctx.memo("JkL", lambda: power_bivector(J, L, k))
    JkJL = ctx.memo("JkJL", lambda: compose_J_bivector(J, JkL))
    tJk_a = a
    for _ in range(k):
        tJk_a = J.transpose_apply(tJk_a)
    lhs = bivector_apply(JkL, _concomitant(JkL, JkJL, J, a, b))
    rhs = bivector_apply(JkL, _concomitant(L, ctx.JL(), J, tJk_a, b))
    return lhs, rhs


def _eq7(ctx, a, b):
    L, E, J = ctx["L"], ctx["E"], ctx["J"]
    JL = ctx.JL()
    lhs = bivector_apply(JL, ctx.conc("L", L, JL, a, b))
    rhs = J.apply(J.apply(E) * bivector_eval(L, a, b) - E * bivector_eval(L, a, J.transpose_apply(b)))
    return lhs, rhs


def _eq8(ctx, a, b, c, minus=False):
    # The last term enters with + here; see the module notes.
    L, P, J = ctx["L"], ctx["pi"], ctx["J"]
    JL = ctx.JL()
    JP = ctx.memo("JP", lambda: compose_J_bivector(J, P))
    lhs = evaluate(ctx.bracket("JLP", JL, P), a, b, c)
    rhs = evaluate(ctx.bracket("LP", L, P), a, b, J.transpose_apply(c))
    rhs = rhs + pair(ctx.conc("P", P, JP, a, c), bivector_apply(L, b))
    rhs = rhs - pair(ctx.conc("P", P, JP, b, c), bivector_apply(L, a))
    last = pair(ctx.conc("L", L, JL, a, b), bivector_apply(P, c))
    rhs = rhs - last if minus else rhs + last
    return lhs, rhs


def _eq8_minus(ctx, a, b, c):
    return _eq8(ctx, a, b, c, minus=True)


REGISTRY = {
    i.name: i
    for i in (
        Identity("eq2", ("L",), ("alpha", "beta", "gamma"), (), None, _eq2,
                 "⟨γ, Λ{α,β}_Λ⟩ = ⟨γ, [Λα,Λβ]⟩ + ½[Λ,Λ](α,β,γ)"),
        Identity("eq4", ("L", "E"), ("alpha",), (), None, _eq4, "[E,Λ]α = [E,Λα] − Λ L_E α"),
        Identity("lemma_bivec", ("L", "E", "J"), ("alpha", "beta", "gamma"), (), _jacobi_part_hyp, _lemma_bivec,
                 "½[JΛ,JΛ] expanded through C(Λ,J) and N_J, given [Λ,Λ] = 2E∧Λ"),
        Identity("eq3", ("L", "J"), ("alpha", "beta", "gamma"), (), _bivector_hyp("L"), _eq3,
                 "½[JΛ,JΛ] expanded through [Λ,Λ], C(Λ,J) and N_J"),
        Identity("lemma_vec", ("L", "E", "J"), ("alpha", "beta"), (), _bivector_hyp("L"), _lemma_vec,
                 "[JE,JΛ](α,β) = ⟨β, N_J(E,Λα)⟩ + ⟨β, J[JE,Λ]α + J[E,JΛ]α − J²[E,Λ]α⟩"),
        Identity("lemma_nij", ("J",), (), ("X", "Y"), None, _lemma_nij, "N_{J^{k+1}} in terms of N_{J^k}, N_J"),
        Identity("eq5", ("L", "J"), ("alpha", "beta"), ("X",), _bivector_hyp("L"), _eq5,
                 "⟨C(JΛ,J)(α,β), X⟩ = ⟨C(Λ,J)(ᵗJα,β), X⟩ + ⟨α, N_J(Λβ,X)⟩"),
        Identity("eq6", ("L", "E", "J"), ("alpha", "beta"), (), _compat_hyp, _eq6,
                 "J^kΛ C(J^kΛ,J)(α,β) = J^kΛ C(Λ,J)(ᵗJ^kα,β)"),
        Identity("eq7", ("L", "E", "J"), ("alpha", "beta"), (), _compat_hyp, _eq7,
                 "JΛ C(Λ,J)(α,β) = J(Λ(α,β)JE − Λ(α,ᵗJβ)E)"),
        Identity("eq8", ("L", "pi", "J"), ("alpha", "beta", "gamma"), (), _bivector_hyp("L", "pi"), _eq8,
                 "[JΛ,π](α,β,γ) = [Λ,π](α,β,ᵗJγ) + ⟨C(π,J)(α,γ),Λβ⟩ − ⟨C(π,J)(β,γ),Λα⟩ + ⟨C(Λ,J)(α,β),πγ⟩"),
        Identity("eq8_minus", ("L", "pi", "J"), ("alpha", "beta", "gamma"), (), _bivector_hyp("L", "pi"),
                 _eq8_minus, "eq8 with − on the last term; false under these conventions, kept for reference"),
    )
}

UNCONDITIONAL = ("eq2", "eq4", "eq5", "eq8", "lemma_vec", "lemma_nij")


def verify_identity(name: str, inputs: dict) -> CheckReport:
    """Evaluate one registered identity; pass iff every residual vanishes."""
    try:
        ident = REGISTRY[name]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {name!r}; known: {', '.join(REGISTRY)}") from None
    missing = [k for k in ident.required if k not in inputs]
    if missing:
        raise MissingInput(f"{name} needs {', '.join(missing)}")
    inputs = _Ctx(inputs)
    chart = _chart(inputs)
    if "E" in ident.required and inputs.get("E") is None:
        inputs["E"] = MultivectorField.zero(chart, 1)
    if ident.hypotheses is not None:
        ident.hypotheses(inputs)
    families = [_family(inputs, k, chart, DifferentialForm) for k in ident.forms]
    families += [_family(inputs, k, chart, MultivectorField) for k in ident.vectors]
    res = Residuals()
    for combo in product(*families):
        lhs, rhs = ident.body(inputs, *(v for _, v in combo))
        label = ",".join(lab for lab, _ in combo)
        res.check(f"({label})" if label else "", lhs - rhs)
    notes = []
    if any(k not in inputs for k in ident.forms + ident.vectors):
        notes.append("omitted arguments range over the coordinate basis")
    return CheckReport.from_residuals(name, res, notes=notes)


__all__ = ["REGISTRY", "UNCONDITIONAL", "verify_identity"]
