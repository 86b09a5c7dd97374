"""(1,1)-tensor fields as n x n matrices of scalars."""

from __future__ import annotations

from ..errors import ChartMismatch, KindMismatch
from ..scalar import Chart, ScalarField
from .fields import DifferentialForm, MultivectorField, _as_scalar


class EndomorphismField:
    """``J[i][j]`` is the ``∂_i`` component of ``J(∂_j)``."""

    __slots__ = ("chart", "rows")

    def __init__(self, chart: Chart, rows):
        n = chart.dimension
        rows = tuple(tuple(_as_scalar(chart, v) for v in row) for row in rows)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError(f"endomorphism on a {n}-chart needs {n}x{n} entries")
        self.chart = chart
        self.rows = rows

    @classmethod
    def identity(cls, chart: Chart) -> "EndomorphismField":
        return cls.scalar(chart, 1)

    @classmethod
    def scalar(cls, chart: Chart, value) -> "EndomorphismField":
        s = _as_scalar(chart, value)
        n = chart.dimension
        zero = chart.zero
        return cls(chart, [[s if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, chart: Chart, values) -> "EndomorphismField":
        n = chart.dimension
        values = [_as_scalar(chart, v) for v in values]
        zero = chart.zero
        return cls(chart, [[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, chart: Chart) -> "EndomorphismField":
        return cls.scalar(chart, 0)

    def __getitem__(self, ij) -> ScalarField:
        i, j = ij
        return self.rows[i][j]

    @property
    def n(self) -> int:
        return self.chart.dimension

    def _same_chart(self, other):
        if other.chart != self.chart:
            raise ChartMismatch(f"{self.chart} vs {other.chart}")

    # -- action ------------------------------------------------------------
    def apply(self, X: MultivectorField) -> MultivectorField:
        """``(JX)^i = Σ_j J[i][j] X^j``."""
        if not isinstance(X, MultivectorField) or X.degree != 1:
            raise KindMismatch("J acts on vector fields")
        self._same_chart(X)
        comps = {}
        for i in range(self.n):
            row = self.rows[i]
            acc = None
            for (j,), xj in X._comps.items():
                if row[j]:
                    term = row[j] * xj
                    acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                comps[(i,)] = acc
        return MultivectorField._raw(self.chart, 1, comps)

    def transpose_apply(self, alpha: DifferentialForm) -> DifferentialForm:
        """``(ᵗJα)_j = Σ_i J[i][j] α_i``."""
        if not isinstance(alpha, DifferentialForm) or alpha.degree != 1:
            raise KindMismatch("ᵗJ acts on 1-forms")
        self._same_chart(alpha)
        comps = {}
        for j in range(self.n):
            acc = None
            for (i,), ai in alpha._comps.items():
                entry = self.rows[i][j]
                if entry:
                    term = entry * ai
                    acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                comps[(j,)] = acc
        return DifferentialForm._raw(self.chart, 1, comps)

    def __call__(self, X):
        return self.apply(X)

    # -- algebra -----------------------------------------------------------
    def compose(self, other: "EndomorphismField") -> "EndomorphismField":
        """``self ∘ other`` (matrix product)."""
        self._same_chart(other)
        n = self.n
        zero = self.chart.zero
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return EndomorphismField(self.chart, rows)

    __matmul__ = compose

    def power(self, k: int) -> "EndomorphismField":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = EndomorphismField.identity(self.chart)
        for _ in range(k):
            result = result.compose(self)
        return result

    def transpose(self) -> "EndomorphismField":
        return EndomorphismField(self.chart, [list(col) for col in zip(*self.rows)])

    def __add__(self, other):
        self._same_chart(other)
        return EndomorphismField(self.chart, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_chart(other)
        return EndomorphismField(self.chart, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return EndomorphismField(self.chart, [[-a for a in r] for r in self.rows])

    def __mul__(self, factor):
        if isinstance(factor, EndomorphismField):
            return NotImplemented
        s = _as_scalar(self.chart, factor)
        return EndomorphismField(self.chart, [[a * s for a in r] for r in self.rows])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.rows for v in row)

    def __eq__(self, other):
        if not isinstance(other, EndomorphismField):
            return NotImplemented
        return other.chart == self.chart and (self - other).is_zero()

    __hash__ = None

    def lift(self, target: Chart) -> "EndomorphismField":
        pos = [target.index(name) for name in self.chart.names]
        m = target.dimension
        zero = target.zero
        rows = [[zero] * m for _ in range(m)]
        for i in range(self.n):
            for j in range(self.n):
                rows[pos[i]][pos[j]] = self.rows[i][j].lift(target)
        return EndomorphismField(target, rows)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.rows) + "]"

    def __repr__(self):
        return f"EndomorphismField({self})"
