"""Plain value types: Jacobi pairs, sections of T*M⊕ℝ and TM⊕ℝ, recursion operators."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ChartMismatch, KindMismatch
from ..scalar import Chart, ScalarField
from ..tensor import DifferentialForm, EndomorphismField, MultivectorField


def _scalar(chart: Chart, value) -> ScalarField:
    if isinstance(value, ScalarField):
        if value.chart != chart:
            raise ChartMismatch(f"scalar on {value.chart}, expected {chart}")
        return value
    return chart.constant(value)


def _check(obj, cls, degree, chart, what):
    if not isinstance(obj, cls) or obj.degree != degree:
        raise KindMismatch(f"{what} must be a {cls.__name__} of degree {degree}")
    if obj.chart != chart:
        raise ChartMismatch(f"{what} lives on {obj.chart}, expected {chart}")


@dataclass(frozen=True, eq=False)
class JacobiPair:
    """A bivector ``L`` (Λ) and a vector field ``E`` on one chart.

    Nothing is validated beyond kinds; use :func:`is_jacobi` for the axioms.
    """

    L: MultivectorField
    E: MultivectorField = None

    def __post_init__(self):
        if not isinstance(self.L, MultivectorField):
            raise KindMismatch("Λ must be a bivector field")
        if self.E is None:
            object.__setattr__(self, "E", MultivectorField.zero(self.L.chart, 1))
        _check(self.L, MultivectorField, 2, self.L.chart, "Λ")
        _check(self.E, MultivectorField, 1, self.L.chart, "E")

    @property
    def chart(self) -> Chart:
        return self.L.chart

    def __eq__(self, other):
        if not isinstance(other, JacobiPair):
            return NotImplemented
        return self.chart == other.chart and self.L == other.L and self.E == other.E

    __hash__ = None

    def scaled(self, c) -> "JacobiPair":
        return JacobiPair(self.L * c, self.E * c)

    def __sub__(self, other: "JacobiPair") -> "JacobiPair":
        return JacobiPair(self.L - other.L, self.E - other.E)

    def lift(self, chart: Chart) -> "JacobiPair":
        return JacobiPair(self.L.lift(chart), self.E.lift(chart))

    def __str__(self):
        return f"(Λ = {self.L}, E = {self.E})"


@dataclass(frozen=True, eq=False)
class SectionPair:
    """A section ``(α, f)`` of ``T*M ⊕ ℝ``."""

    alpha: DifferentialForm
    f: ScalarField

    def __post_init__(self):
        if not isinstance(self.alpha, DifferentialForm) or self.alpha.degree != 1:
            raise KindMismatch("α must be a 1-form")
        object.__setattr__(self, "f", _scalar(self.alpha.chart, self.f))

    @property
    def chart(self):
        return self.alpha.chart

    def __eq__(self, other):
        if not isinstance(other, SectionPair):
            return NotImplemented
        return self.alpha == other.alpha and self.f == other.f

    __hash__ = None

    def __str__(self):
        return f"({self.alpha}, {self.f})"


@dataclass(frozen=True, eq=False)
class FieldPair:
    """A section ``(X, f)`` of ``TM ⊕ ℝ``."""

    X: MultivectorField
    f: ScalarField

    def __post_init__(self):
        if not isinstance(self.X, MultivectorField) or self.X.degree != 1:
            raise KindMismatch("X must be a vector field")
        object.__setattr__(self, "f", _scalar(self.X.chart, self.f))

    @property
    def chart(self):
        return self.X.chart

    def __add__(self, other):
        return FieldPair(self.X + other.X, self.f + other.f)

    def __sub__(self, other):
        return FieldPair(self.X - other.X, self.f - other.f)

    def is_zero(self) -> bool:
        return self.X.is_zero() and self.f.is_zero()

    def __eq__(self, other):
        if not isinstance(other, FieldPair):
            return NotImplemented
        return self.X == other.X and self.f == other.f

    __hash__ = None

    def __str__(self):
        return f"({self.X}, {self.f})"


@dataclass(frozen=True, eq=False)
class RecursionOperator:
    """``𝒥(X, f) = (JX + f·X₀, i_X α₀ + f·φ₀)`` on ``TM ⊕ ℝ``."""

    J: EndomorphismField
    X0: MultivectorField
    alpha0: DifferentialForm
    phi0: ScalarField

    def __post_init__(self):
        chart = self.J.chart
        _check(self.X0, MultivectorField, 1, chart, "X₀")
        _check(self.alpha0, DifferentialForm, 1, chart, "α₀")
        object.__setattr__(self, "phi0", _scalar(chart, self.phi0))

    @classmethod
    def identity(cls, chart: Chart) -> "RecursionOperator":
        return cls(
            EndomorphismField.identity(chart),
            MultivectorField.zero(chart, 1),
            DifferentialForm.zero(chart, 1),
            chart.one,
        )

    @property
    def chart(self):
        return self.J.chart

    def __call__(self, s: FieldPair) -> FieldPair:
        from ..tensor import pair

        X, f = s.X, s.f
        return FieldPair(self.J.apply(X) + self.X0 * f, pair(self.alpha0, X) + f * self.phi0)

    def transpose(self, beta: DifferentialForm, g: ScalarField):
        """``ᵗ𝒥(β, g) = (ᵗJβ + g·α₀, i_{X₀}β + g·φ₀)``."""
        from ..tensor import pair

        g = _scalar(self.chart, g)
        return SectionPair(self.J.transpose_apply(beta) + self.alpha0 * g, pair(beta, self.X0) + g * self.phi0)

    def __str__(self):
        return f"(J = {self.J}, X₀ = {self.X0}, α₀ = {self.alpha0}, φ₀ = {self.phi0})"
