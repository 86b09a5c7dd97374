"""Exact scalar fields on a coordinate chart.

Scalars are fractions of exponential polynomials: finite sums of
``q * x^a * exp(c . x)`` with ``q`` and the frequency vector ``c`` rational.
This is the smallest ring that contains ``exp(-t)`` and ``exp(f)`` for linear
``f`` and is closed under the four operations and partial derivatives, and
zero-testing in it is exact: distinct ``(a, c)`` pairs are linearly
independent, so a numerator is zero iff it has no terms.

Fractions are normalised (denominator's leading term monic with zero
frequency, common monomial factor cancelled) but not GCD-reduced; equality is
decided on the cross-multiplied difference.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from ..errors import ChartMismatch, DivisionByZero, IndexOutOfRange, PoleAtPoint
from ._backend import kernels as _k

Q = mpq
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RESERVED = {"exp"}


def to_rational(value) -> mpq:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to an exact rational."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, Rational)) or type(value).__name__ == "mpq":
        return mpq(value)
    if isinstance(value, str):
        return mpq(Fraction(value))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class Chart:
    """An ordered list of coordinate names on an open set of R^n."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a chart needs at least one coordinate")
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name) or name in _RESERVED:
                raise ValueError(f"invalid coordinate name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate coordinate names in {names}")

    @classmethod
    def of(cls, *names) -> "Chart":
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "Chart":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def dimension(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def extend(self, *names: str) -> "Chart":
        return Chart(self.names + tuple(names))

    def fresh_name(self, base: str) -> str:
        name, k = base, 1
        while name in self.names:
            name = f"{base}{k}"
            k += 1
        return name

    # constructors -- coordinate indices are 0-based here
    def coordinate(self, i) -> "ScalarField":
        if isinstance(i, str):
            i = self.index(i)
        if not 0 <= i < self.dimension:
            raise IndexOutOfRange(f"coordinate index {i} out of range for {self.dimension}-chart")
        a = [0] * self.dimension
        a[i] = 1
        return ScalarField._raw(self, {(tuple(a), None): Q(1)}, None)

    def coordinates(self) -> list:
        return [self.coordinate(i) for i in range(self.dimension)]

    def constant(self, value) -> "ScalarField":
        q = to_rational(value)
        if not q:
            return ScalarField._raw(self, {}, None)
        return ScalarField._raw(self, {(self._zero_exps, None): q}, None)

    def exp(self, frequencies) -> "ScalarField":
        """``exp(c . x)`` for a rational frequency vector ``c``."""
        c = tuple(to_rational(v) for v in frequencies)
        if len(c) != self.dimension:
            raise ValueError("frequency vector has wrong length")
        return ScalarField._raw(self, {(self._zero_exps, _freq(c)): Q(1)}, None)

    @property
    def zero(self) -> "ScalarField":
        return ScalarField._raw(self, {}, None)

    @property
    def one(self) -> "ScalarField":
        return self.constant(1)

    @property
    def _zero_exps(self) -> tuple:
        return (0,) * self.dimension

    def __str__(self):
        return "(" + ", ".join(self.names) + ")"


def _freq(c):
    """Normalise a frequency tuple: all-zero becomes ``None``."""
    if c is None:
        return None
    for v in c:
        if v:
            return tuple(c)
    return None


def _neg_freq(c):
    return None if c is None else tuple(-v for v in c)


def term_order_key(key, n):
    """Canonical order of terms: lexicographic on (frequency, exponents)."""
    a, c = key
    return (c if c is not None else (0,) * n, a)


class ExpPoly:
    """Immutable exponential polynomial in ``n`` variables.

    ``terms`` maps ``(a, c)`` to a nonzero rational; ``c is None`` stands for
    the zero frequency vector so that plain polynomials never carry one.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self.terms = terms

    @classmethod
    def one(cls, n):
        return cls(n, {((0,) * n, None): Q(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(c is None for _, c in self.terms)

    def sorted_terms(self, descending=True):
        n = self.n
        return sorted(self.terms.items(), key=lambda kv: term_order_key(kv[0], n), reverse=descending)

    def leading(self):
        n = self.n
        return max(self.terms.items(), key=lambda kv: term_order_key(kv[0], n))

    def __eq__(self, other):
        return isinstance(other, ExpPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        return ExpPoly(self.n, _k.add(self.terms, other.terms))

    def __sub__(self, other):
        return ExpPoly(self.n, _k.sub(self.terms, other.terms))

    def __mul__(self, other):
        return ExpPoly(self.n, _k.mul(self.terms, other.terms))

    def __neg__(self):
        return ExpPoly(self.n, _k.neg(self.terms))

    def diff(self, i):
        return ExpPoly(self.n, _k.diff(self.terms, i))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"ExpPoly({self.n}, {self.terms!r})"


def _normalize(n, num, den):
    """Return canonical ``(num, den)`` dicts; ``den is None`` means 1."""
    if den is not None and not den:
        raise DivisionByZero("division by the zero scalar field")
    if not num:
        return {}, None
    if den is None:
        return num, None
    zero_a = (0,) * n
    if len(den) == 1:
        ((a, c), q), = den.items()
        g = list(a)
        for (b, _) in num:
            g = [x if x < y else y for x, y in zip(g, b)]
            if not any(g):
                break
        num = _k.mul_term(num, tuple(-x for x in g), _neg_freq(c), 1 / q)
        rest = tuple(x - y for x, y in zip(a, g))
        if not any(rest):
            return num, None
        return num, {(rest, None): Q(1)}
    (la, lc), lq = max(den.items(), key=lambda kv: term_order_key(kv[0], n))
    g = list(la)
    for (b, _) in num:
        g = [x if x < y else y for x, y in zip(g, b)]
    for (b, _) in den:
        g = [x if x < y else y for x, y in zip(g, b)]
    shift = tuple(-x for x in g)
    inv, nc = 1 / lq, _neg_freq(lc)
    if any(g) or lc is not None or lq != 1:
        num = _k.mul_term(num, shift, nc, inv)
        den = _k.mul_term(den, shift, nc, inv)
    # num = k * den  => constant
    if len(num) == len(den) and num.keys() == den.keys():
        ratio = None
        for key, v in num.items():
            r = v / den[key]
            if ratio is None:
                ratio = r
            elif r != ratio:
                break
        else:
            return {(zero_a, None): ratio}, None
    return num, den


class ScalarField:
    """Exact element of the fraction field of exponential polynomials.

    Values are immutable.  Arithmetic accepts ints, Fractions and mpq on
    either side.  ``==`` is mathematical equality (cross-multiplication), so
    instances are not hashable.
    """

    __slots__ = ("chart", "_num", "_den")

    def __init__(self, chart: Chart, num: ExpPoly | dict, den: ExpPoly | dict | None = None):
        n = chart.dimension
        num = num.terms if isinstance(num, ExpPoly) else dict(num)
        if isinstance(den, ExpPoly):
            den = den.terms
        if den is not None:
            den = dict(den)
            if den == {((0,) * n, None): 1}:
                den = None
        self.chart = chart
        self._num, self._den = _normalize(n, num, den)

    @classmethod
    def _raw(cls, chart, num, den):
        obj = object.__new__(cls)
        obj.chart = chart
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def _make(cls, chart, num, den):
        num, den = _normalize(chart.dimension, num, den)
        return cls._raw(chart, num, den)

    # -- accessors ---------------------------------------------------------
    @property
    def numerator(self) -> ExpPoly:
        return ExpPoly(self.chart.dimension, self._num)

    @property
    def denominator(self) -> ExpPoly:
        if self._den is None:
            return ExpPoly.one(self.chart.dimension)
        return ExpPoly(self.chart.dimension, self._den)

    def is_zero(self) -> bool:
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def is_polynomial(self) -> bool:
        return self._den is None and all(c is None for _, c in self._num)

    def is_constant(self) -> bool:
        if self._den is not None:
            return False
        if not self._num:
            return True
        if len(self._num) != 1:
            return False
        (a, c), = self._num
        return c is None and not any(a)

    def constant_value(self) -> mpq:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self._num.values()), Q(0))

    def total_degree(self) -> int:
        """Largest total monomial degree in the numerator (-1 for zero)."""
        return max((sum(a) for a, _ in self._num), default=-1)

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, ScalarField):
            if other.chart != self.chart:
                raise ChartMismatch(f"scalars on charts {self.chart} and {other.chart}")
            return other
        try:
            return self.chart.constant(other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._num:
            return self
        if not self._num:
            return other
        d1, d2 = self._den, other._den
        if d1 is None and d2 is None:
            return ScalarField._raw(self.chart, _k.add(self._num, other._num), None)
        if d1 == d2:
            return ScalarField._make(self.chart, _k.add(self._num, other._num), d1)
        n1 = self._num if d2 is None else _k.mul(self._num, d2)
        n2 = other._num if d1 is None else _k.mul(other._num, d1)
        den = d1 if d2 is None else (d2 if d1 is None else _k.mul(d1, d2))
        return ScalarField._make(self.chart, _k.add(n1, n2), den)

    __radd__ = __add__

    def __neg__(self):
        return ScalarField._raw(self.chart, _k.neg(self._num), self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._num or not other._num:
            return self.chart.zero
        num = _k.mul(self._num, other._num)
        d1, d2 = self._den, other._den
        if d1 is None and d2 is None:
            return ScalarField._raw(self.chart, num, None)
        den = d1 if d2 is None else (d2 if d1 is None else _k.mul(d1, d2))
        return ScalarField._make(self.chart, num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._num:
            raise DivisionByZero("division by the zero scalar field")
        num = self._num if other._den is None else _k.mul(self._num, other._den)
        den = other._num if self._den is None else _k.mul(self._den, other._num)
        return ScalarField._make(self.chart, num, den)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result, base = self.chart.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ScalarField) and other.chart != self.chart:
            return False
        try:
            diff = self - other
        except TypeError:
            return NotImplemented
        if diff is NotImplemented:
            return NotImplemented
        return diff.is_zero()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    # -- calculus ----------------------------------------------------------
    def diff(self, i: int) -> "ScalarField":
        """Partial derivative along coordinate ``i`` (0-based)."""
        n = self.chart.dimension
        if not 0 <= i < n:
            raise IndexOutOfRange(f"coordinate index {i} out of range for {n}-chart")
        dn = _k.diff(self._num, i)
        if self._den is None:
            return ScalarField._raw(self.chart, dn, None)
        dd = _k.diff(self._den, i)
        num = _k.sub(_k.mul(dn, self._den), _k.mul(self._num, dd))
        return ScalarField._make(self.chart, num, _k.mul(self._den, self._den))

    def gradient(self) -> list:
        return [self.diff(i) for i in range(self.chart.dimension)]

    # -- chart changes -----------------------------------------------------
    def lift(self, target: Chart) -> "ScalarField":
        """Pull back along the projection ``target -> self.chart`` that drops
        the coordinates of ``target`` not present in ``self.chart``."""
        if target == self.chart:
            return self
        try:
            pos = [target.index(name) for name in self.chart.names]
        except KeyError as exc:
            raise ChartMismatch(f"{target} does not contain coordinate {exc}") from None
        m = target.dimension

        def embed(terms):
            out = {}
            for (a, c), v in terms.items():
                na = [0] * m
                for i, p in enumerate(pos):
                    na[p] = a[i]
                nc = None
                if c is not None:
                    nc = [Q(0)] * m
                    for i, p in enumerate(pos):
                        nc[p] = c[i]
                    nc = tuple(nc)
                out[(tuple(na), nc)] = v
            return out

        return ScalarField._raw(target, embed(self._num), None if self._den is None else embed(self._den))

    def restrict(self, name: str, target: Chart | None = None) -> "ScalarField":
        """Set coordinate ``name`` to zero and drop it from the chart."""
        i = self.chart.index(name)
        if target is None:
            target = Chart(self.chart.names[:i] + self.chart.names[i + 1:])

        def drop(terms):
            out = {}
            for (a, c), v in terms.items():
                if a[i]:
                    continue
                key = (a[:i] + a[i + 1:], _freq(None if c is None else c[:i] + c[i + 1:]))
                s = out.get(key, 0) + v
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
            return out

        num = drop(self._num)
        den = None if self._den is None else drop(self._den)
        if den is not None and not den:
            raise PoleAtPoint(f"denominator of {self} vanishes at {name}=0")
        return ScalarField._make(target, num, den)

    # -- evaluation --------------------------------------------------------
    def eval_approx(self, point) -> float:
        """Double-precision value at a rational point (diagnostics only)."""
        n = self.chart.dimension
        if len(point) != n:
            raise ValueError(f"expected {n} coordinates, got {len(point)}")
        pt = [to_rational(v) for v in point]
        if self._den is not None and _vanishes_at(self._den, pt):
            raise PoleAtPoint(f"denominator of {self} vanishes at {tuple(str(v) for v in pt)}")
        value = _eval_float(self._num, pt)
        if self._den is not None:
            value /= _eval_float(self._den, pt)
        return value

    # -- printing ----------------------------------------------------------
    def __str__(self):
        from .printer import format_scalar

        return format_scalar(self)

    def __repr__(self):
        return f"ScalarField({self.chart}, {str(self)!r})"


def _monomial_value(a, pt):
    value = Q(1)
    for e, x in zip(a, pt):
        if e:
            value *= x ** e
    return value


def _vanishes_at(terms, pt) -> bool:
    # exp(r) for distinct rationals r are linearly independent over the
    # algebraic numbers, so grouping by the exponent decides exactly.
    groups = {}
    for (a, c), v in terms.items():
        r = Q(0) if c is None else sum((ci * x for ci, x in zip(c, pt)), Q(0))
        groups[r] = groups.get(r, Q(0)) + v * _monomial_value(a, pt)
    return all(not s for s in groups.values())


def _eval_float(terms, pt) -> float:
    total = 0.0
    for (a, c), v in terms.items():
        r = 0.0 if c is None else float(sum((ci * x for ci, x in zip(c, pt)), Q(0)))
        total += float(v * _monomial_value(a, pt)) * math.exp(r)
    return total


# -- module-level operations with 1-based coordinate indices -------------------

def scalar_arith(op: str, a: ScalarField, b: ScalarField | None = None) -> ScalarField:
    """Dispatch ``add``/``sub``/``mul``/``div``/``neg`` by name."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"{op} needs two operands")
    if isinstance(b, ScalarField) and b.chart != a.chart:
        raise ChartMismatch(f"scalars on charts {a.chart} and {b.chart}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


def partial_derivative(s: ScalarField, i: int) -> ScalarField:
    """``∂s/∂x_i`` with ``1 <= i <= n``."""
    n = s.chart.dimension
    if not isinstance(i, int) or not 1 <= i <= n:
        raise IndexOutOfRange(f"coordinate index {i} not in 1..{n}")
    return s.diff(i - 1)


def is_zero(s: ScalarField) -> bool:
    return s.is_zero()


def eval_approx(s: ScalarField, point) -> float:
    return s.eval_approx(point)
