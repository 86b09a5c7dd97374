import math

import pytest
from hypothesis import given, strategies as st

from jacobikit import BACKEND, Chart
from jacobikit.errors import (
    ChartMismatch,
    DivisionByZero,
    ExpressionSyntaxError,
    IndexOutOfRange,
    NonLinearExponent,
    NonNaturalExponent,
    PoleAtPoint,
    UnknownIdentifier,
)
from jacobikit.scalar import eval_approx, format_scalar, is_zero, partial_derivative, scalar_arith

from conftest import S, rand_scalar

seeds = st.integers(0, 10**9)


def test_backend_selected():
    assert BACKEND in ("cython", "python")


class TestArithmetic:
    def test_additive_inverse(self, R2):
        x1 = S("x1", R2)
        assert is_zero(scalar_arith("add", x1, scalar_arith("neg", x1)))

    def test_frequencies_cancel(self, R2):
        assert scalar_arith("mul", S("exp(x1)", R2), S("exp(-x1)", R2)) == R2.one

    def test_division_cross_multiplied(self, R2):
        q = scalar_arith("div", S("x1^2-1", R2), S("x1-1", R2))
        assert is_zero(q - S("x1+1", R2))

    def test_div_by_zero(self, R2):
        with pytest.raises(DivisionByZero):
            scalar_arith("div", S("x1", R2), R2.zero)

    def test_chart_mismatch(self, R2, R3):
        with pytest.raises(ChartMismatch):
            S("x1", R2) + S("x1", R3)

    def test_unknown_op(self, R2):
        with pytest.raises(ValueError):
            scalar_arith("pow", R2.one, R2.one)

    def test_zero_tests(self, R2):
        assert is_zero(S("(x1+1)^2 - x1^2 - 2*x1 - 1", R2))
        assert is_zero(S("exp(x1)*exp(x2) - exp(x1+x2)", R2))
        assert not is_zero(S("x1", R2))

    def test_denominator_leading_coefficient_is_one(self, R2):
        s = S("x1/(3*x1 + 6)", R2)
        assert s.denominator.leading()[1] == 1

    def test_equality_ignores_representation(self, R2):
        assert S("(x1^2 - 1)/(x1 - 1)", R2) == S("x1 + 1", R2)

    @given(seeds, seeds, seeds)
    def test_ring_axioms(self, a, b, c):
        ch = Chart.standard(3)
        x, y, z = (rand_scalar(ch, s) for s in (a, b, c))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert is_zero(x - x)

    @given(seeds, seeds)
    def test_no_zero_divisors(self, a, b):
        ch = Chart.standard(2)
        x, y = rand_scalar(ch, a, zero_prob=0.3), rand_scalar(ch, b, zero_prob=0.3)
        assert is_zero(x * y) == (is_zero(x) or is_zero(y))

    @given(seeds, seeds)
    def test_quotients(self, a, b):
        ch = Chart.standard(2)
        x, y = rand_scalar(ch, a), rand_scalar(ch, b)
        if not is_zero(y):
            assert (x / y) * y == x


class TestDerivative:
    def test_monomial(self, R2):
        assert partial_derivative(S("x1^2*x2", R2), 1) == S("2*x1*x2", R2)

    def test_exponential(self):
        ch = Chart.of("t")
        assert partial_derivative(S("exp(-t)", ch), 1) == S("-exp(-t)", ch)

    def test_quotient(self, R2):
        assert partial_derivative(S("1/x1", R2), 1) == S("-1/x1^2", R2)

    def test_index_range(self, R2):
        with pytest.raises(IndexOutOfRange):
            partial_derivative(R2.one, 3)
        with pytest.raises(IndexOutOfRange):
            partial_derivative(R2.one, 0)

    @given(seeds)
    def test_mixed_partials_commute(self, seed):
        ch = Chart.standard(3)
        s = rand_scalar(ch, seed)
        for i in range(1, 4):
            for j in range(i + 1, 4):
                assert partial_derivative(partial_derivative(s, i), j) == partial_derivative(partial_derivative(s, j), i)

    @given(seeds, seeds)
    def test_product_rule(self, a, b):
        ch = Chart.standard(2)
        f, g = rand_scalar(ch, a), rand_scalar(ch, b)
        assert partial_derivative(f * g, 1) == partial_derivative(f, 1) * g + f * partial_derivative(g, 1)


class TestParser:
    def test_mixed_expression(self):
        ch = Chart.of("x", "t")
        s = S("exp(-t)*(x^2 + 1/2)", ch)
        x, t = ch.coordinates()
        assert s == (x * x + ch.constant("1/2")) * ch.exp([0, -1])

    def test_nonlinear_exponent(self, R2):
        with pytest.raises(NonLinearExponent):
            S("exp(x1*x2)", R2)

    def test_syntax_error_offset(self, R2):
        with pytest.raises(ExpressionSyntaxError) as info:
            S("x1 +", R2)
        assert info.value.offset == 4

    def test_unknown_identifier(self, R2):
        with pytest.raises(UnknownIdentifier):
            S("y + 1", R2)

    @pytest.mark.parametrize("text", ["x1^-1", "x1^(1/2)", "x1^x2"])
    def test_non_natural_exponent(self, R2, text):
        with pytest.raises((NonNaturalExponent, ExpressionSyntaxError)):
            S(text, R2)

    def test_whitespace_insignificant(self, R2):
        assert S(" x1*  x2 ", R2) == S("x1*x2", R2)

    def test_unary_minus(self, R2):
        assert S("-x1 - 2", R2) == R2.zero - S("x1", R2) - R2.constant(2)
        assert S("x2*(-x1)", R2) == -(S("x1*x2", R2))
        with pytest.raises(ExpressionSyntaxError):
            S("x1 + -2", R2)

    def test_rational_linform(self, R2):
        assert S("exp(x1/2 - 3/4*x2)", R2) == R2.exp(["1/2", "-3/4"])

    @given(seeds)
    def test_print_parse_roundtrip(self, seed):
        ch = Chart.standard(3)
        s = rand_scalar(ch, seed)
        assert S(format_scalar(s), ch) == s
        assert S(str(s), ch) == s

    def test_canonical_printing_is_stable(self, R2):
        a = S("x2 + x1 + exp(x1)", R2)
        b = S("exp(x1) + x1 + x2", R2)
        assert str(a) == str(b)


class TestEvalApprox:
    def test_square(self):
        ch = Chart.of("x1")
        assert eval_approx(S("x1^2", ch), [3]) == 9.0

    def test_exponential(self):
        ch = Chart.of("t")
        assert eval_approx(S("exp(-t)", ch), [0]) == 1.0
        assert math.isclose(eval_approx(S("exp(-t)", ch), [1]), math.exp(-1))

    def test_pole(self):
        ch = Chart.of("x1")
        with pytest.raises(PoleAtPoint):
            eval_approx(S("1/x1", ch), [0])


class TestBackends:
    def test_kernels_agree(self):
        compiled = pytest.importorskip("jacobikit.scalar._ckernels")
        from jacobikit.scalar import _pykernels as py

        ch = Chart.standard(3)
        for seed in range(30):
            a = rand_scalar(ch, seed, degree=3, terms=5).numerator.terms
            b = rand_scalar(ch, seed + 1000, degree=3, terms=5).numerator.terms
            for name in ("add", "sub", "mul"):
                assert getattr(py, name)(a, b) == getattr(compiled, name)(a, b)
            assert py.neg(a) == compiled.neg(a)
            for i in range(3):
                assert py.diff(a, i) == compiled.diff(a, i)

    def test_pure_python_fallback(self):
        import subprocess
        import sys

        code = (
            "from jacobikit import BACKEND, Chart, parse_scalar as P\n"
            "c = Chart.standard(2)\n"
            "assert P('(x1+1)^2 - x1^2 - 2*x1 - 1', c).is_zero()\n"
            "print(BACKEND)\n"
        )
        env = {**__import__("os").environ, "JACOBIKIT_PURE_PYTHON": "1"}
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        assert out.stdout.strip() == "python"
