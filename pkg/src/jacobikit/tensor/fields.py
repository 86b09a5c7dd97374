"""Multivector fields and differential forms with exact components.

Both kinds store one component per strictly increasing index tuple (0-based
coordinate indices); any other ordering is reached through the sign of the
sorting permutation.  Only nonzero components are kept internally, but
``components`` reports all ``C(n, p)`` of them.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..errors import ChartMismatch, KindMismatch
from ..scalar import Chart, ScalarField


@lru_cache(maxsize=65536)
def merge_indices(left: tuple, right: tuple):
    """Sort ``left + right``; return ``(sign, merged)`` or ``None`` on overlap."""
    if not left:
        return 1, right
    if not right:
        return 1, left
    inversions = 0
    for i in left:
        for j in right:
            if i == j:
                return None
            if i > j:
                inversions += 1
    return (-1 if inversions & 1 else 1), tuple(sorted(left + right))


@lru_cache(maxsize=65536)
def sort_indices(idx: tuple):
    """``(sign, sorted)`` for an index tuple, or ``None`` if it repeats."""
    if len(set(idx)) != len(idx):
        return None
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1 if inversions & 1 else 1), tuple(sorted(idx))


def _as_scalar(chart, value):
    if isinstance(value, ScalarField):
        if value.chart != chart:
            raise ChartMismatch(f"component on {value.chart}, field on {chart}")
        return value
    return chart.constant(value)


class GradedField:
    """Common machinery of :class:`MultivectorField` and :class:`DifferentialForm`."""

    __slots__ = ("chart", "degree", "_comps")
    kind = "graded"
    _basis_symbol = "?"

    def __init__(self, chart: Chart, degree: int, components=None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.chart = chart
        self.degree = degree
        comps = {}
        for idx, value in (components or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index {idx} does not have length {degree}")
            if any(not 0 <= i < chart.dimension for i in idx):
                raise IndexError(f"index {idx} out of range for {chart.dimension}-chart")
            value = _as_scalar(chart, value)
            if value.is_zero():
                continue
            sorted_ = sort_indices(idx)
            if sorted_ is None:
                continue
            sign, key = sorted_
            value = value if sign > 0 else -value
            prev = comps.get(key)
            value = value if prev is None else prev + value
            if value.is_zero():
                comps.pop(key, None)
            else:
                comps[key] = value
        self._comps = comps

    @classmethod
    def _raw(cls, chart, degree, comps):
        obj = object.__new__(cls)
        obj.chart = chart
        obj.degree = degree
        obj._comps = comps
        return obj

    @classmethod
    def zero(cls, chart, degree):
        return cls._raw(chart, degree, {})

    @classmethod
    def scalar(cls, s: ScalarField):
        return cls._raw(s.chart, 0, {} if s.is_zero() else {(): s})

    # -- access ------------------------------------------------------------
    def __getitem__(self, idx) -> ScalarField:
        if isinstance(idx, int):
            idx = (idx,)
        idx = tuple(idx)
        sorted_ = sort_indices(idx)
        if sorted_ is None:
            return self.chart.zero
        sign, key = sorted_
        value = self._comps.get(key)
        if value is None:
            return self.chart.zero
        return value if sign > 0 else -value

    @property
    def components(self) -> dict:
        zero = self.chart.zero
        return {
            idx: self._comps.get(idx, zero)
            for idx in combinations(range(self.chart.dimension), self.degree)
        }

    def items(self):
        """Nonzero components in increasing index order."""
        return sorted(self._comps.items())

    def as_scalar(self) -> ScalarField:
        if self.degree != 0:
            raise ValueError("only degree-0 fields are scalars")
        return self._comps.get((), self.chart.zero)

    def is_zero(self) -> bool:
        return not self._comps

    def __bool__(self):
        return bool(self._comps)

    # -- linear structure --------------------------------------------------
    def _check(self, other):
        if type(other) is not type(self):
            raise KindMismatch(f"cannot combine {self.kind} with {getattr(other, 'kind', type(other).__name__)}")
        if other.chart != self.chart:
            raise ChartMismatch(f"fields on {self.chart} and {other.chart}")
        if other.degree != self.degree:
            raise ValueError(f"degree {self.degree} vs {other.degree}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        comps = dict(self._comps)
        for k, v in other._comps.items():
            prev = comps.get(k)
            if prev is None:
                comps[k] = v
            else:
                s = prev + v
                if s.is_zero():
                    del comps[k]
                else:
                    comps[k] = s
        return type(self)._raw(self.chart, self.degree, comps)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.chart, self.degree, {k: -v for k, v in self._comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, factor):
        if isinstance(factor, GradedField):
            return NotImplemented
        factor = _as_scalar(self.chart, factor)
        if factor.is_zero():
            return type(self).zero(self.chart, self.degree)
        comps = {}
        for k, v in self._comps.items():
            w = v * factor
            if not w.is_zero():
                comps[k] = w
        return type(self)._raw(self.chart, self.degree, comps)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if type(other) is not type(self):
            return NotImplemented
        if other.chart != self.chart or other.degree != self.degree:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def map_components(self, fn):
        comps = {}
        for k, v in self._comps.items():
            w = fn(v)
            if not w.is_zero():
                comps[k] = w
        return type(self)._raw(self.chart, self.degree, comps)

    def lift(self, target: Chart):
        """Same field on a chart with extra coordinates (components constant along them)."""
        pos = [target.index(name) for name in self.chart.names]
        comps = {}
        for idx, v in self._comps.items():
            sign, key = sort_indices(tuple(pos[i] for i in idx))
            w = v.lift(target)
            comps[key] = w if sign > 0 else -w
        return type(self)._raw(target, self.degree, comps)

    # -- printing ----------------------------------------------------------
    def __str__(self):
        if not self._comps:
            return "0"
        if self.degree == 0:
            return str(self._comps[()])
        names = self.chart.names
        parts = []
        for idx, v in sorted(self._comps.items()):
            basis = f"{self._basis_symbol}[{','.join(names[i] for i in idx)}]"
            parts.append(f"({v})*{basis}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}(degree={self.degree}, {self})"


class MultivectorField(GradedField):
    """Antisymmetric contravariant field; ``D[x,y]`` prints ``∂x∧∂y``."""

    __slots__ = ()
    kind = "multivector"
    _basis_symbol = "D"


class DifferentialForm(GradedField):
    """Antisymmetric covariant field; ``d[x,y]`` prints ``dx∧dy``."""

    __slots__ = ()
    kind = "form"
    _basis_symbol = "d"


# -- convenience constructors --------------------------------------------------

def vector_field(chart: Chart, components) -> MultivectorField:
    """Vector field from a length-n sequence or an ``{index: value}`` mapping."""
    if isinstance(components, dict):
        items = components.items()
    else:
        items = enumerate(components)
    return MultivectorField(chart, 1, {(i,): v for i, v in items})


def one_form(chart: Chart, components) -> DifferentialForm:
    if isinstance(components, dict):
        items = components.items()
    else:
        items = enumerate(components)
    return DifferentialForm(chart, 1, {(i,): v for i, v in items})


def bivector(chart: Chart, components: dict) -> MultivectorField:
    return MultivectorField(chart, 2, components)


def basis_vector(chart: Chart, i: int) -> MultivectorField:
    return MultivectorField._raw(chart, 1, {(i,): chart.one})


def basis_form(chart: Chart, i: int) -> DifferentialForm:
    return DifferentialForm._raw(chart, 1, {(i,): chart.one})


def basis_forms(chart: Chart) -> list:
    return [basis_form(chart, i) for i in range(chart.dimension)]


def basis_vectors(chart: Chart) -> list:
    return [basis_vector(chart, i) for i in range(chart.dimension)]


def euler_field(chart: Chart) -> MultivectorField:
    return vector_field(chart, chart.coordinates())
