"""Seeded random instances: polynomial fields of low degree and compatible (1,1)-tensors.

Everything takes a :class:`random.Random` so suites are reproducible from a
recorded seed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from ..scalar import Chart, ScalarField
from ..tensor import (
    DifferentialForm,
    EndomorphismField,
    MultivectorField,
    basis_vector,
    bivector_matrix,
    wedge,
)
from .linalg import matmul
from .structures import JacobiPair

COEFFS = (-2, -1, 1, 2, Fraction(1, 2), Fraction(-3, 2))


def random_scalar(chart: Chart, rng: random.Random, degree: int = 2, terms: int = 3, zero_prob: float = 0.0) -> ScalarField:
    """Sum of up to ``terms`` monomials of total degree ``≤ degree``."""
    if zero_prob and rng.random() < zero_prob:
        return chart.zero
    xs = chart.coordinates()
    monos = [chart.one]
    for d in range(1, degree + 1):
        for combo in combinations_with_replacement(range(chart.dimension), d):
            m = chart.one
            for i in combo:
                m = m * xs[i]
            monos.append(m)
    acc = chart.zero
    for _ in range(rng.randint(1, terms)):
        acc = acc + rng.choice(monos) * rng.choice(COEFFS)
    return acc


def _comps(chart, p, rng, **kw):
    return {I: random_scalar(chart, rng, **kw) for I in combinations(range(chart.dimension), p)}


def random_multivector(chart, p, rng, **kw) -> MultivectorField:
    """A ``p``-vector; ``kw`` is passed to :func:`random_scalar`."""
    return MultivectorField(chart, p, _comps(chart, p, rng, **kw))


def random_form(chart, p, rng, **kw) -> DifferentialForm:
    return DifferentialForm(chart, p, _comps(chart, p, rng, **kw))


def random_endomorphism(chart, rng, **kw) -> EndomorphismField:
    n = chart.dimension
    return EndomorphismField(chart, [[random_scalar(chart, rng, **kw) for _ in range(n)] for _ in range(n)])


def random_antisymmetric(chart, rng, **kw) -> list:
    n = chart.dimension
    W = [[chart.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = random_scalar(chart, rng, **kw)
            W[i][j], W[j][i] = v, -v
    return W


def compatible_endomorphism(L: MultivectorField, rng, f=None, **kw) -> EndomorphismField:
    """``J = f·Id + L·W`` with ``W`` antisymmetric, so that ``J∘Λ = Λ∘ᵗJ``."""
    chart = L.chart
    n = chart.dimension
    if f is None:
        f = random_scalar(chart, rng, **kw)
    LW = matmul(bivector_matrix(L), random_antisymmetric(chart, rng, **kw), chart)
    rows = [[LW[i][j] + (f if i == j else chart.zero) for j in range(n)] for i in range(n)]
    return EndomorphismField(chart, rows)


def random_identity_inputs(chart: Chart, rng, with_pi: bool = False, **kw) -> dict:
    """``L``, ``E``, a ``J`` with ``J∘Λ = Λ∘ᵗJ`` and optionally ``pi = gΛ + bJΛ``."""
    from ..tensor import compose_J_bivector

    L = random_multivector(chart, 2, rng, **kw)
    J = compatible_endomorphism(L, rng, **kw)
    out = {"L": L, "E": random_multivector(chart, 1, rng, **kw), "J": J}
    if with_pi:
        g, b = random_scalar(chart, rng, degree=1), random_scalar(chart, rng, degree=1)
        out["pi"] = L * g + compose_J_bivector(J, L) * b
    return out


# -- instances for the (JΛ, JE) theorem ---------------------------------------------------

def symplectic_r4() -> JacobiPair:
    C = Chart.standard(4)
    e = [basis_vector(C, i) for i in range(4)]
    return JacobiPair(wedge(e[0], e[1]) + wedge(e[2], e[3]))


def contact_r3(names=("x", "y", "z")) -> JacobiPair:
    C = Chart.of(*names)
    y = C.coordinate(1)
    e = [basis_vector(C, i) for i in range(3)]
    return JacobiPair(wedge(e[0] + e[2] * y, e[1]), e[2])


def so3(names=("x", "y", "z")) -> MultivectorField:
    C = Chart.of(*names)
    x, y, z = C.coordinates()
    e = [basis_vector(C, i) for i in range(3)]
    return wedge(e[0], e[1]) * z + wedge(e[1], e[2]) * x + wedge(e[2], e[0]) * y


def theorem_instances(seed: int = 0, count: int = 24) -> list:
    """``(label, pair, J)`` triples; all satisfy the torsion hypotheses.

    Scalar multiples ``f·Id`` of the identity have vanishing torsion, and
    ``J∘Λ = Λ∘ᵗJ`` is automatic, so they satisfy the hypotheses for any ``f``.
    Constant ``f`` keeps ``(fΛ, fE)`` Jacobi; non-constant ``f`` generally
    breaks it.  Constant diagonal ``J`` on symplectic ℝ⁴ pairing the planes
    are added as a second family.
    """
    rng = random.Random(seed)
    base = [("symplectic R4", symplectic_r4()), ("contact R3", contact_r3())]
    base.append(("so3", JacobiPair(so3())))
    out = []
    i = 0
    while len(out) < count:
        label, p = base[i % len(base)]
        chart = p.chart
        kind = i % 4
        if kind == 0:
            f = chart.constant(rng.choice(COEFFS))
            tag = "constant"
        elif kind == 1:
            f = random_scalar(chart, rng, degree=1, terms=2)
            if f.is_constant():
                f = f + chart.coordinate(0)
            tag = "linear"
        elif kind == 2:
            f = random_scalar(chart, rng, degree=2, terms=2)
            if f.is_constant():
                f = f + chart.coordinate(0) ** 2
            tag = "quadratic"
        else:
            f = None
            tag = "diagonal"
        if f is None:
            if chart.dimension != 4:
                i += 1
                continue
            a, b = rng.choice(COEFFS), rng.choice(COEFFS)
            J = EndomorphismField.diagonal(chart, [a, a, b, b])
        else:
            J = EndomorphismField.scalar(chart, 1) * f
        out.append((f"{label} {tag} #{len(out)}", p, J))
        i += 1
    return out


__all__ = [
    "compatible_endomorphism",
    "contact_r3",
    "random_antisymmetric",
    "random_endomorphism",
    "random_form",
    "random_identity_inputs",
    "random_multivector",
    "random_scalar",
    "so3",
    "symplectic_r4",
    "theorem_instances",
]
