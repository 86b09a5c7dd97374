"""Exterior and Schouten calculus on a chart.

Conventions (everything else follows from these):

* ``⟨α1∧…∧αq, X1∧…∧Xq⟩ = det⟨αi, Xj⟩``, so ``⟨dx^I, ∂_J⟩ = δ_IJ`` on
  increasing tuples;
* a bivector acts on 1-forms by ``⟨β, Λα⟩ = Λ(α, β) = ⟨α∧β, Λ⟩``;
* the Schouten bracket is first computed with odd coordinates ``ξ_i = ∂_i``::

      [P, Q]₀ = Σ_i ∂P/∂ξ_i · ∂Q/∂x_i − (−1)^{(p−1)(q−1)} ∂Q/∂ξ_i · ∂P/∂x_i

  (right derivatives in ``ξ``), then every result whose degree, or one of
  whose arguments' degree, is ≥ 3 is re-signed as described in
  :func:`schouten_bracket`.  The outcome satisfies ``[X, ·] = L_X``,
  ``[Λ, f] = −Λ(df)`` and ``⟨γ, Λ{α,β}_Λ⟩ = ⟨γ,[Λα,Λβ]⟩ + ½[Λ,Λ](α,β,γ)``,
  so that ``[Λ, Λ] = 2E∧Λ`` is the Jacobi condition.
"""

from __future__ import annotations

from ..errors import ChartMismatch, DegreeMismatch, KindMismatch, NotABivector
from ..scalar import ScalarField
from .endomorphism import EndomorphismField
from .fields import (
    DifferentialForm,
    GradedField,
    MultivectorField,
    merge_indices,
)


def _same_chart(*objs):
    chart = objs[0].chart
    for o in objs[1:]:
        if o.chart != chart:
            raise ChartMismatch(f"operands live on {chart} and {o.chart}")
    return chart


def _accumulate(comps, key, value):
    prev = comps.get(key)
    if prev is None:
        comps[key] = value
    else:
        s = prev + value
        if s.is_zero():
            del comps[key]
        else:
            comps[key] = s


def _finish(comps):
    return {k: v for k, v in comps.items() if not v.is_zero()}


def _require_vector(X, what="X"):
    if not isinstance(X, MultivectorField) or X.degree != 1:
        raise KindMismatch(f"{what} must be a vector field")


def _require_one_form(a, what="α"):
    if not isinstance(a, DifferentialForm) or a.degree != 1:
        raise KindMismatch(f"{what} must be a 1-form")


# -- exterior algebra ----------------------------------------------------------

def wedge(A: GradedField, B: GradedField) -> GradedField:
    """Graded-commutative exterior product of two multivectors or two forms."""
    if type(A) is not type(B) or not isinstance(A, GradedField):
        raise KindMismatch(f"cannot wedge {getattr(A, 'kind', A)} with {getattr(B, 'kind', B)}")
    chart = _same_chart(A, B)
    comps = {}
    for I, f in A._comps.items():
        for J, g in B._comps.items():
            merged = merge_indices(I, J)
            if merged is None:
                continue
            sign, K = merged
            term = f * g
            _accumulate(comps, K, term if sign > 0 else -term)
    return type(A)._raw(chart, A.degree + B.degree, _finish(comps))


def pair(omega: DifferentialForm, A: MultivectorField) -> ScalarField:
    """Full contraction ``⟨ω, A⟩`` of a q-form with a q-vector."""
    if not isinstance(omega, DifferentialForm) or not isinstance(A, MultivectorField):
        raise KindMismatch("pair takes a form and a multivector")
    chart = _same_chart(omega, A)
    if omega.degree != A.degree:
        raise DegreeMismatch(f"pairing a {omega.degree}-form with a {A.degree}-vector")
    acc = chart.zero
    small, large = (omega, A) if len(omega._comps) <= len(A._comps) else (A, omega)
    for I, f in small._comps.items():
        g = large._comps.get(I)
        if g is not None:
            acc = acc + f * g
    return acc


def interior_product(X: MultivectorField, omega: DifferentialForm) -> DifferentialForm:
    """``(i_X ω)(Y2, …, Yq) = ω(X, Y2, …, Yq)``."""
    _require_vector(X)
    if not isinstance(omega, DifferentialForm):
        raise KindMismatch("interior product needs a differential form")
    chart = _same_chart(X, omega)
    if omega.degree < 1:
        raise DegreeMismatch("interior product of a 0-form")
    comps = {}
    for I, f in omega._comps.items():
        for k, i in enumerate(I):
            xi = X._comps.get((i,))
            if xi is None:
                continue
            term = xi * f
            _accumulate(comps, I[:k] + I[k + 1:], term if k % 2 == 0 else -term)
    return DifferentialForm._raw(chart, omega.degree - 1, _finish(comps))


def contract(P: MultivectorField, alpha: DifferentialForm) -> MultivectorField:
    """``P(α, ·, …, ·)``: insert a 1-form in the first slot of a multivector.

    For a bivector this is ``Λα`` with ``(Λα)^j = Σ_i Λ^{ij} α_i``.
    """
    if not isinstance(P, MultivectorField):
        raise KindMismatch("contract needs a multivector")
    _require_one_form(alpha)
    chart = _same_chart(P, alpha)
    if P.degree < 1:
        raise DegreeMismatch("cannot contract a function with a 1-form")
    comps = {}
    for I, f in P._comps.items():
        for k, i in enumerate(I):
            ai = alpha._comps.get((i,))
            if ai is None:
                continue
            term = ai * f
            _accumulate(comps, I[:k] + I[k + 1:], term if k % 2 == 0 else -term)
    return MultivectorField._raw(chart, P.degree - 1, _finish(comps))


def evaluate(P: MultivectorField, *forms: DifferentialForm) -> ScalarField:
    """``P(α1, …, αp) = ⟨α1∧…∧αp, P⟩``."""
    if len(forms) != P.degree:
        raise DegreeMismatch(f"{P.degree}-vector evaluated on {len(forms)} forms")
    if not forms:
        return P.as_scalar()
    acc = forms[0]
    for f in forms[1:]:
        acc = wedge(acc, f)
    return pair(acc, P)


def evaluate_form(omega: DifferentialForm, *vectors: MultivectorField) -> ScalarField:
    """``ω(X1, …, Xq) = ⟨ω, X1∧…∧Xq⟩``."""
    if len(vectors) != omega.degree:
        raise DegreeMismatch(f"{omega.degree}-form evaluated on {len(vectors)} vectors")
    if not vectors:
        return omega.as_scalar()
    acc = vectors[0]
    for v in vectors[1:]:
        acc = wedge(acc, v)
    return pair(omega, acc)


def pair_1(alpha: DifferentialForm, X: MultivectorField) -> ScalarField:
    """``⟨α, X⟩`` for a 1-form and a vector field."""
    return pair(alpha, X)


def bivector_apply(L: MultivectorField, alpha: DifferentialForm) -> MultivectorField:
    """The map ``Λ: Ω¹ → χ`` of a bivector."""
    if L.degree != 2:
        raise DegreeMismatch("expected a bivector")
    return contract(L, alpha)


def bivector_eval(L: MultivectorField, alpha: DifferentialForm, beta: DifferentialForm) -> ScalarField:
    """``Λ(α, β) = ⟨β, Λα⟩``."""
    return pair(beta, contract(L, alpha))


def vector_apply(X: MultivectorField, f: ScalarField) -> ScalarField:
    """``X(f) = ⟨df, X⟩``."""
    _require_vector(X)
    acc = f.chart.zero
    for (i,), xi in X._comps.items():
        d = f.diff(i)
        if d:
            acc = acc + xi * d
    return acc


# -- differential calculus -----------------------------------------------------

def differential(f: ScalarField) -> DifferentialForm:
    """``df`` of a scalar field."""
    comps = {}
    for i in range(f.chart.dimension):
        d = f.diff(i)
        if d:
            comps[(i,)] = d
    return DifferentialForm._raw(f.chart, 1, comps)


def exterior_derivative(omega) -> DifferentialForm:
    """``d`` on forms; a bare :class:`ScalarField` is treated as a 0-form."""
    if isinstance(omega, ScalarField):
        return differential(omega)
    if not isinstance(omega, DifferentialForm):
        raise KindMismatch("exterior derivative of a non-form")
    chart = omega.chart
    comps = {}
    for I, f in omega._comps.items():
        for i in range(chart.dimension):
            if i in I:
                continue
            d = f.diff(i)
            if not d:
                continue
            sign, K = merge_indices((i,), I)
            _accumulate(comps, K, d if sign > 0 else -d)
    return DifferentialForm._raw(chart, omega.degree + 1, _finish(comps))


def _schouten_half(A, B, dB_cache):
    """``Σ_i ∂A/∂ξ_i · ∂B/∂x_i`` (right ξ-derivatives)."""
    p = A.degree
    comps = {}
    for I, f in A._comps.items():
        for k, i in enumerate(I):
            rest = I[:k] + I[k + 1:]
            odd = (p - 1 - k) % 2 == 1
            for J, g in B._comps.items():
                key = (J, i)
                dg = dB_cache.get(key)
                if dg is None:
                    dg = g.diff(i)
                    dB_cache[key] = dg
                if not dg:
                    continue
                merged = merge_indices(rest, J)
                if merged is None:
                    continue
                sign, K = merged
                term = f * dg
                if odd:
                    sign = -sign
                _accumulate(comps, K, term if sign > 0 else -term)
    return comps


def _degree_sign(d: int) -> int:
    return -1 if d >= 3 else 1


def schouten_bracket(A, B) -> MultivectorField:
    """Schouten–Nijenhuis bracket of a p-vector and a q-vector (p+q ≥ 1).

    Scalars may be passed as :class:`ScalarField` (degree 0).

    Normalization: the derivation-built bracket ``[A,B]₀`` (the one obeying
    the wedge Leibniz rule, with ``[X,f] = X(f)``) is transported through
    the linear map that negates multivectors of degree ≥ 3, i.e.
    ``[A,B] = s(p)s(q)s(p+q-1)·[A,B]₀``.  This keeps graded symmetry, the
    graded Jacobi identity, ``[X,·] = L_X`` and ``[Λ,f] = -Λ(df)``, and gives
    ``[Λ,Λ]`` the sign for which ``[Λ,Λ] = 2E∧Λ`` characterizes Jacobi pairs.
    The price is that the Leibniz rule only holds up to that sign twist.
    """
    if isinstance(A, ScalarField):
        A = MultivectorField.scalar(A)
    if isinstance(B, ScalarField):
        B = MultivectorField.scalar(B)
    if not isinstance(A, MultivectorField) or not isinstance(B, MultivectorField):
        raise KindMismatch("the Schouten bracket takes multivector fields")
    chart = _same_chart(A, B)
    p, q = A.degree, B.degree
    if p + q < 1:
        raise DegreeMismatch("bracket of two functions is not defined")
    first = _schouten_half(A, B, {})
    second = _schouten_half(B, A, {})
    graded_sign = -1 if ((p - 1) * (q - 1)) % 2 else 1
    # [A,B] = first − graded_sign * second
    for K, v in second.items():
        _accumulate(first, K, -v if graded_sign > 0 else v)
    comps = _finish(first)
    if _degree_sign(p) * _degree_sign(q) * _degree_sign(p + q - 1) < 0:
        comps = {K: -v for K, v in comps.items()}
    return MultivectorField._raw(chart, p + q - 1, comps)


def lie_derivative(X: MultivectorField, T):
    """``L_X`` on scalars, forms (Cartan formula) and multivectors (``[X, T]``)."""
    _require_vector(X)
    if isinstance(T, ScalarField):
        _same_chart(X, T)
        return vector_apply(X, T)
    _same_chart(X, T)
    if isinstance(T, DifferentialForm):
        if T.degree == 0:
            return DifferentialForm.scalar(vector_apply(X, T.as_scalar()))
        d_iX = exterior_derivative(interior_product(X, T))
        i_dX = interior_product(X, exterior_derivative(T))
        return d_iX + i_dX
    if isinstance(T, MultivectorField):
        if T.degree == 0:
            return MultivectorField.scalar(vector_apply(X, T.as_scalar()))
        return schouten_bracket(X, T)
    raise KindMismatch(f"cannot take the Lie derivative of {type(T).__name__}")


# -- (1,1)-tensors ---------------------------------------------------------------

def apply_endomorphism(J: EndomorphismField, X: MultivectorField) -> MultivectorField:
    return J.apply(X)


def transpose_apply(J: EndomorphismField, alpha: DifferentialForm) -> DifferentialForm:
    return J.transpose_apply(alpha)


def bivector_matrix(L: MultivectorField) -> list:
    """Full antisymmetric matrix ``L[i][j] = Λ^{ij}``."""
    if L.degree != 2:
        raise DegreeMismatch("expected a bivector")
    n = L.chart.dimension
    zero = L.chart.zero
    M = [[zero] * n for _ in range(n)]
    for (i, j), v in L._comps.items():
        M[i][j] = v
        M[j][i] = -v
    return M


def composition_defect(J: EndomorphismField, L: MultivectorField) -> EndomorphismField:
    """Symmetric part ``M + Mᵀ`` of the matrix of ``J∘Λ``; zero iff ``J∘Λ = Λ∘ᵗJ``."""
    M = _j_lambda_matrix(J, L)
    n = J.n
    return EndomorphismField(J.chart, [[M[i][k] + M[k][i] for k in range(n)] for i in range(n)])


def _j_lambda_matrix(J, L):
    # (J(Λα))^k = Σ_i M[i][k] α_i with M = L·Jᵀ
    _same_chart(J, L)
    Lm = bivector_matrix(L)
    n = J.n
    zero = J.chart.zero
    M = []
    for i in range(n):
        row = []
        for k in range(n):
            acc = zero
            Jk = J.rows[k]
            for j in range(n):
                a, b = Lm[i][j], Jk[j]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        M.append(row)
    return M


def compose_J_bivector(J: EndomorphismField, L: MultivectorField) -> MultivectorField:
    """The bivector ``JΛ`` with ``(JΛ)α = J(Λα)``; requires ``J∘Λ = Λ∘ᵗJ``."""
    M = _j_lambda_matrix(J, L)
    n = J.n
    residual = [[M[i][k] + M[k][i] for k in range(n)] for i in range(n)]
    if any(not v.is_zero() for row in residual for v in row):
        raise NotABivector(
            "J∘Λ is not skew-symmetric (J∘Λ ≠ Λ∘ᵗJ)",
            EndomorphismField(J.chart, residual),
        )
    comps = {}
    for i in range(n):
        for k in range(i + 1, n):
            if M[i][k]:
                comps[(i, k)] = M[i][k]
    return MultivectorField._raw(J.chart, 2, comps)


def power_bivector(J: EndomorphismField, L: MultivectorField, k: int) -> MultivectorField:
    """``J^k Λ``."""
    out = L
    for _ in range(k):
        out = compose_J_bivector(J, out)
    return out


def power_apply(J: EndomorphismField, X: MultivectorField, k: int) -> MultivectorField:
    """``J^k X``."""
    out = X
    for _ in range(k):
        out = J.apply(out)
    return out


def nijenhuis_torsion(J: EndomorphismField, X: MultivectorField, Y: MultivectorField) -> MultivectorField:
    """``N_J(X,Y) = [JX, JY] − J[JX, Y] − J[X, JY] + J²[X, Y]``."""
    _require_vector(X, "X")
    _require_vector(Y, "Y")
    _same_chart(J, X, Y)
    JX, JY = J.apply(X), J.apply(Y)
    out = schouten_bracket(JX, JY)
    out = out - J.apply(schouten_bracket(JX, Y))
    out = out - J.apply(schouten_bracket(X, JY))
    out = out + J.apply(J.apply(schouten_bracket(X, Y)))
    return out
