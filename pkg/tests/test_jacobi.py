import random
from itertools import combinations, combinations_with_replacement, product

import pytest
from hypothesis import given, strategies as st

from jacobikit import Chart
from jacobikit.errors import (
    Degenerate,
    HypothesisViolated,
    NameClash,
    NotCompatible,
    NotHomogeneous,
    NotJacobi,
    NotLCS,
)
from jacobikit.jacobi import (
    FieldPair,
    JacobiPair,
    RecursionOperator,
    SectionPair,
    algebroid_bracket,
    anchor,
    check_compatibility,
    check_homogeneous_pn,
    check_anchor_equivalences,
    check_theorem_rec,
    concomitant,
    depoissonize,
    form_bracket,
    hierarchy,
    hierarchy_report,
    is_homogeneous_poisson,
    is_jacobi,
    is_jacobi_pencil,
    is_poisson,
    jacobi_bracket,
    lcs_pencil_identities,
    lcs_recursion_tensor,
    lcs_structure_residuals,
    lcs_to_jacobi,
    poissonize,
    recursion_operator_check,
    star_bracket,
    tilde_anchor,
    verify_conformal_morphism,
)
from jacobikit.jacobi import generators as gen
from jacobikit.tensor import (
    DifferentialForm,
    EndomorphismField,
    MultivectorField,
    basis_form,
    basis_forms,
    basis_vector,
    bivector_apply,
    differential,
    euler_field,
    evaluate,
    exterior_derivative,
    interior_product,
    lie_derivative,
    pair,
    schouten_bracket,
    transpose_apply,
    vector_apply,
    wedge,
)

from conftest import S

seeds = st.integers(0, 10**9)


def d(chart, i):
    return basis_vector(chart, i - 1)


def dx(chart, i):
    return basis_form(chart, i - 1)


def contact():
    return gen.contact_r3()


def so3():
    return gen.so3(("x1", "x2", "x3"))


def lcs_instance(kind):
    """R⁴ LCS structures with Lee form −dx1: F₂ = 2F₁ ("scalar") or e^{x1}(dx1∧dx2 + 2dx3∧dx4) ("mixed")."""
    ch = Chart.standard(4)
    e = ch.exp([1, 0, 0, 0])
    F1 = DifferentialForm(ch, 2, {(0, 1): e, (2, 3): e})
    F2 = DifferentialForm(ch, 2, {(0, 1): e * (2 if kind == "scalar" else 1), (2, 3): e * 2})
    omega = dx(ch, 1) * -1
    return ch, F1, F2, omega


def lcs_pairs(kind="scalar"):
    ch, F1, F2, omega = lcs_instance(kind)
    return lcs_to_jacobi(F1, omega), lcs_to_jacobi(F2, omega), lcs_recursion_tensor(F1, F2), omega


# -- oracles ---------------------------------------------------------------------

def bracket_oracle(p, f, g):
    """{f,g} = Λ(df,dg) + f·E(g) − g·E(f), expanded by hand."""
    return evaluate(p.L, differential(f), differential(g)) + f * vector_apply(p.E, g) - g * vector_apply(p.E, f)


def jacobiator(br, f, g, h):
    return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))


def form_bracket_oracle(L, a, b):
    """{α,β}_Λ = L_{Λα}β − L_{Λβ}α − d(Λ(α,β)) through Cartan's formula."""
    La, Lb = bivector_apply(L, a), bivector_apply(L, b)
    cartan = lambda X, w: exterior_derivative(interior_product(X, w)) + interior_product(X, exterior_derivative(w))  # noqa: E731
    return cartan(La, b) - cartan(Lb, a) - exterior_derivative(DifferentialForm.scalar(evaluate(L, a, b)))


# -- Poisson / Jacobi --------------------------------------------------------------

class TestPoissonJacobi:
    def test_is_poisson_examples(self, R3):
        assert is_poisson(wedge(d(R3, 1), d(R3, 2))).passed
        assert is_poisson(so3()).passed
        pi = wedge(d(R3, 1), d(R3, 2)) * S("x3", R3) + wedge(d(R3, 2), d(R3, 3))
        br = lambda f, g: evaluate(pi, differential(f), differential(g))  # noqa: E731
        oracle = all(jacobiator(br, *t).is_zero() for t in combinations(R3.coordinates(), 3))
        assert is_poisson(pi).passed == oracle

    def test_is_poisson_failure_has_residual(self, R3):
        pi = wedge(d(R3, 1), d(R3, 2)) * S("x2", R3) + wedge(d(R3, 2), d(R3, 3))
        rep = is_poisson(pi)
        assert not rep.passed and rep.residuals

    def test_is_jacobi_examples(self, R3):
        assert is_jacobi(JacobiPair(wedge(d(R3, 1), d(R3, 2)))).passed
        assert is_jacobi(contact()).passed
        rep = is_jacobi(JacobiPair(wedge(d(R3, 1), d(R3, 2)), d(R3, 3)))
        assert rep.status == "fail" and rep.residuals

    def test_contact_bivector_form(self):
        p = contact()
        ch = p.chart
        y = ch.coordinate(1)
        assert p.L == wedge(d(ch, 1) + d(ch, 3) * y, d(ch, 2))

    def test_jacobi_bracket_examples(self):
        p = contact()
        x, y, z = p.chart.coordinates()
        assert jacobi_bracket(p, x, y) == p.chart.one
        assert jacobi_bracket(p, z, p.chart.one) == -p.chart.one
        q = JacobiPair(so3())
        x1, x2, x3 = q.chart.coordinates()
        assert jacobi_bracket(q, x1, x2) == x3

    @given(seeds, st.sampled_from(["contact", "so3", "lcs", "lcs2"]))
    def test_jacobi_identity_random_triples(self, seed, which):
        p = {"contact": contact, "so3": lambda: JacobiPair(so3()),
             "lcs": lambda: lcs_pairs()[0], "lcs2": lambda: lcs_pairs("mixed")[1]}[which]()
        rng = random.Random(seed)
        f, g, h = (gen.random_scalar(p.chart, rng, degree=2, terms=2) for _ in range(3))
        br = lambda u, v: jacobi_bracket(p, u, v)  # noqa: E731
        assert br(f, g) == bracket_oracle(p, f, g)
        assert jacobiator(br, f, g, h).is_zero()

    def test_non_jacobi_breaks_identity(self, R3):
        p = JacobiPair(wedge(d(R3, 1), d(R3, 2)), d(R3, 3))
        br = lambda u, v: jacobi_bracket(p, u, v)  # noqa: E731
        assert not all(jacobiator(br, *t).is_zero() for t in combinations_with_replacement(R3.coordinates() + [R3.one], 3))


class TestPoissonization:
    def test_reeb_on_line(self):
        ch = Chart.standard(1)
        pi = poissonize(JacobiPair(MultivectorField.zero(ch, 2), d(ch, 1)))
        big = ch.extend("t")
        assert pi == wedge(d(big, 2), d(big, 1)) * S("exp(-t)", big)

    def test_symplectic(self, R2):
        pi = poissonize(JacobiPair(wedge(d(R2, 1), d(R2, 2))))
        big = R2.extend("t")
        assert pi == wedge(d(big, 1), d(big, 2)) * S("exp(-t)", big)

    def test_contact(self):
        p = contact()
        pi = poissonize(p)
        big = p.chart.extend("t")
        assert pi == (p.L.lift(big) + wedge(d(big, 4), d(big, 3))) * S("exp(-t)", big)
        assert is_poisson(pi).passed

    def test_name_clash(self):
        ch = Chart.of("x", "t")
        with pytest.raises(NameClash):
            poissonize(JacobiPair(wedge(d(ch, 1), d(ch, 2))), "t")

    def test_depoissonize_examples(self, R2):
        ch = Chart.standard(1)
        big = ch.extend("t")
        assert depoissonize(wedge(d(big, 2), d(big, 1)) * S("exp(-t)", big), "t") == JacobiPair(MultivectorField.zero(ch, 2), d(ch, 1))
        big2 = R2.extend("t")
        assert depoissonize(wedge(d(big2, 1), d(big2, 2)) * S("exp(-t)", big2), "t") == JacobiPair(wedge(d(R2, 1), d(R2, 2)))
        with pytest.raises(NotHomogeneous):
            depoissonize(wedge(d(big2, 1), d(big2, 2)), "t")

    @pytest.mark.parametrize("which", ["contact", "so3", "lcs", "symplectic"])
    def test_roundtrip_and_poisson(self, which):
        p = {"contact": contact, "so3": lambda: JacobiPair(so3()), "lcs": lambda: lcs_pairs("mixed")[1],
             "symplectic": gen.symplectic_r4}[which]()
        pi = poissonize(p)
        assert is_poisson(pi).passed
        assert depoissonize(pi, "t") == p


# -- forms, concomitant, algebroid ------------------------------------------------

class TestFormBracket:
    def test_examples(self, R2, R3):
        L = wedge(d(R2, 1), d(R2, 2))
        assert form_bracket(L, dx(R2, 1), dx(R2, 2)).is_zero()
        assert form_bracket(so3(), dx(R3, 1), dx(R3, 2)) == dx(R3, 3)
        assert form_bracket(L, dx(R2, 1), dx(R2, 2) * S("x1", R2)).is_zero()

    @given(seeds)
    def test_matches_cartan_oracle(self, seed):
        ch = Chart.standard(3)
        rng = random.Random(seed)
        L = gen.random_multivector(ch, 2, rng, degree=1, terms=2)
        a, b = (gen.random_form(ch, 1, rng, degree=1, terms=2) for _ in range(2))
        assert form_bracket(L, a, b) == form_bracket_oracle(L, a, b)

    @given(seeds, st.sampled_from([2, 3, 4]))
    def test_leibniz_in_second_slot(self, seed, n):
        # {α, fβ} = f{α,β} + ((Λα)f)·β
        ch = Chart.standard(n)
        rng = random.Random(seed)
        L = gen.random_multivector(ch, 2, rng, degree=2, terms=2)
        a, b = (gen.random_form(ch, 1, rng, degree=1, terms=2) for _ in range(2))
        f = gen.random_scalar(ch, rng, degree=2, terms=2)
        lhs = form_bracket(L, a, b * f)
        assert lhs == form_bracket(L, a, b) * f + b * vector_apply(bivector_apply(L, a), f)

    def test_exact_forms_match_function_bracket(self, R3):
        L = so3()
        x = R3.coordinates()
        for i, j in combinations(range(3), 2):
            br = evaluate(L, differential(x[i]), differential(x[j]))
            assert form_bracket(L, differential(x[i]), differential(x[j])) == differential(br)


class TestConcomitant:
    def oracle(self, L, J, a, b):
        JL = MultivectorField(L.chart, 2, {})
        # JΛ = J∘Λ built from columns
        n = L.chart.dimension
        comps = {}
        for i, j in combinations(range(n), 2):
            comps[(i, j)] = pair(basis_form(L.chart, j), J.apply(bivector_apply(L, basis_form(L.chart, i))))
        JL = MultivectorField(L.chart, 2, comps)
        tJ = lambda w: transpose_apply(J, w)  # noqa: E731
        fb = form_bracket_oracle
        return fb(JL, a, b) - fb(L, tJ(a), b) - fb(L, a, tJ(b)) + tJ(fb(L, a, b))

    def test_identity_and_constant(self, R3):
        L = so3()
        for J in (EndomorphismField.identity(R3), EndomorphismField.identity(R3) * S("-5/2", R3)):
            for a, b in product(basis_forms(R3), repeat=2):
                assert concomitant(L, J, a, b).is_zero()

    def test_x1_identity_on_plane(self, R2):
        L = wedge(d(R2, 1), d(R2, 2))
        J = EndomorphismField.identity(R2) * S("x1", R2)
        value = concomitant(L, J, dx(R2, 1), dx(R2, 2))
        assert value == self.oracle(L, J, dx(R2, 1), dx(R2, 2))

    @given(seeds)
    def test_random_against_oracle(self, seed):
        ch = Chart.standard(3)
        rng = random.Random(seed)
        L = gen.random_multivector(ch, 2, rng, degree=1, terms=2)
        J = gen.compatible_endomorphism(L, rng, degree=1, terms=1)
        for a, b in combinations(basis_forms(ch), 2):
            assert concomitant(L, J, a, b) == self.oracle(L, J, a, b)


class TestAlgebroid:
    def test_anchor(self):
        p = contact()
        ch = p.chart
        assert anchor(p, SectionPair(dx(ch, 1), 5)) == bivector_apply(p.L, dx(ch, 1)) + d(ch, 3) * 5

    def test_bracket_examples(self, R2):
        p = JacobiPair(wedge(d(R2, 1), d(R2, 2)))
        assert algebroid_bracket(p, SectionPair(dx(R2, 1), 0), SectionPair(dx(R2, 2), 0)) == SectionPair(DifferentialForm.zero(R2, 1), -1)
        q = contact()
        s = SectionPair(dx(q.chart, 2) * q.chart.coordinate(0), q.chart.coordinate(2))
        out = algebroid_bracket(q, s, s)
        assert out.alpha.is_zero() and out.f.is_zero()

    def test_requires_jacobi(self, R3):
        with pytest.raises(NotJacobi):
            anchor(JacobiPair(wedge(d(R3, 1), d(R3, 2)), d(R3, 3)), SectionPair(dx(R3, 1), 0))

    @pytest.mark.parametrize("which", ["contact", "lcs"])
    def test_anchor_is_homomorphism(self, which):
        p = contact() if which == "contact" else lcs_pairs("mixed")[1]
        ch = p.chart
        sections = [SectionPair(a, 0) for a in basis_forms(ch)] + [SectionPair(DifferentialForm.zero(ch, 1), 1)]
        sections.append(SectionPair(dx(ch, 1), ch.coordinate(1)))
        for s1, s2 in combinations(sections, 2):
            lhs = anchor(p, algebroid_bracket(p, s1, s2))
            assert lhs == schouten_bracket(anchor(p, s1), anchor(p, s2))

    def test_star_bracket(self, R2):
        x1 = R2.coordinate(0)
        assert star_bracket(FieldPair(d(R2, 1), 0), FieldPair(d(R2, 2) * x1, 0)) == FieldPair(d(R2, 2), 0)
        assert star_bracket(FieldPair(d(R2, 1), x1), FieldPair(d(R2, 2), 0)).is_zero()
        a = FieldPair(d(R2, 1) * S("x2", R2), S("x1^2", R2))
        assert star_bracket(a, a).is_zero()

    def test_tilde_anchor(self, R3):
        p = contact()
        ch = p.chart
        assert tilde_anchor(p, SectionPair(dx(ch, 3), 0)) == FieldPair(bivector_apply(p.L, dx(ch, 3)), -1)
        E = d(R3, 1) * S("x2", R3)
        g = S("x3", R3)
        q = JacobiPair(MultivectorField.zero(R3, 2), E)
        assert tilde_anchor(q, SectionPair(DifferentialForm.zero(R3, 1), g)) == FieldPair(E * g, 0)
        r = JacobiPair(so3())
        a = dx(R3, 2) * S("x1", R3)
        assert tilde_anchor(r, SectionPair(a, g)) == FieldPair(bivector_apply(so3(), a), 0)


# -- LCS ----------------------------------------------------------------------------

class TestLCS:
    def test_constant_symplectic(self, R2):
        p = lcs_to_jacobi(wedge(dx(R2, 1), dx(R2, 2)), DifferentialForm.zero(R2, 1))
        assert p == JacobiPair(wedge(d(R2, 1), d(R2, 2)))

    def test_plane_with_lee_form(self, R2):
        # E solves i_E F = −ω
        p = lcs_to_jacobi(wedge(dx(R2, 1), dx(R2, 2)), dx(R2, 1))
        assert p == JacobiPair(wedge(d(R2, 1), d(R2, 2)), d(R2, 2))
        assert interior_product(p.E, wedge(dx(R2, 1), dx(R2, 2))) == -dx(R2, 1)

    def test_r4_instance(self):
        ch, F1, F2, omega = lcs_instance("scalar")
        assert not lcs_structure_residuals(F1, omega)
        p = lcs_to_jacobi(F1, omega)
        em = S("exp(-x1)", ch)
        assert p.L == (wedge(d(ch, 1), d(ch, 2)) + wedge(d(ch, 3), d(ch, 4))) * em
        assert p.E == d(ch, 2) * -em
        assert is_jacobi(p).passed
        # the opposite Reeb sign is not a Jacobi pair here
        assert not is_jacobi(JacobiPair(p.L, -p.E)).passed

    @pytest.mark.parametrize("kind", ["scalar", "mixed"])
    def test_pencil_partner(self, kind):
        ch, F1, F2, omega = lcs_instance(kind)
        assert not lcs_structure_residuals(F2, omega)
        p1, p2, J, _ = lcs_pairs(kind)
        assert is_jacobi(p2).passed
        half = ch.constant("1/2")
        expected = [half] * 4 if kind == "scalar" else [ch.one, ch.one, half, half]
        assert J == EndomorphismField.diagonal(ch, expected)
        assert is_jacobi_pencil(p1, p2).passed

    @pytest.mark.parametrize("kind", ["scalar", "mixed"])
    def test_displayed_expansions(self, kind):
        p1, p2, _, omega = lcs_pairs(kind)
        rep = lcs_pencil_identities(p1, p2, omega)
        assert rep.passed, rep.summary()

    def test_degenerate(self, R2):
        with pytest.raises(Degenerate):
            lcs_to_jacobi(DifferentialForm.zero(R2, 2), DifferentialForm.zero(R2, 1))

    def test_not_lcs(self, R4):
        F = wedge(dx(R4, 1), dx(R4, 2)) * S("exp(x3)", R4) + wedge(dx(R4, 3), dx(R4, 4))
        with pytest.raises(NotLCS):
            lcs_to_jacobi(F, DifferentialForm.zero(R4, 1))


# -- compatibility, theorem, pencils, hierarchy -----------------------------------

class TestCompatibility:
    @given(seeds)
    def test_reeb_only_pairs(self, seed):
        ch = Chart.standard(3)
        rng = random.Random(seed)
        E = gen.random_multivector(ch, 1, rng, degree=1, terms=2)
        J = gen.random_endomorphism(ch, rng, degree=1, terms=2)
        assert check_compatibility(JacobiPair(MultivectorField.zero(ch, 2), E), J, 3).passed

    def test_symplectic_identity(self, R2):
        assert check_compatibility(JacobiPair(wedge(d(R2, 1), d(R2, 2))), EndomorphismField.identity(R2), 3).passed

    @pytest.mark.parametrize("kind", ["scalar", "mixed"])
    def test_lcs(self, kind):
        p1, _, J, _ = lcs_pairs(kind)
        rep = check_compatibility(p1, J, 3)
        assert rep.passed
        assert any("k_max=3" in n for n in rep.notes)

    def test_failure_reports_clause(self, R2):
        rep = check_compatibility(JacobiPair(wedge(d(R2, 1), d(R2, 2))), EndomorphismField.diagonal(R2, [1, 2]), 3)
        assert rep.clause("(i)").status == "fail"
        assert not rep.passed


class TestTheorem:
    def test_contact_identity(self):
        p = contact()
        rep = check_theorem_rec(p, EndomorphismField.identity(p.chart))
        assert rep.passed and rep.clause("consistency").passed

    @pytest.mark.parametrize("kind", ["scalar", "mixed"])
    def test_lcs(self, kind):
        p1, _, J, _ = lcs_pairs(kind)
        rep = check_theorem_rec(p1, J)
        assert rep.passed and rep.clause("is_jacobi(JΛ,JE)").passed

    def test_b_fails_consistently(self):
        p = gen.symplectic_r4()
        J = EndomorphismField.identity(p.chart) * p.chart.coordinate(0)
        rep = check_theorem_rec(p, J)
        assert rep.clause("hypotheses").passed
        assert rep.clause("(b)").status == "fail"
        assert rep.clause("is_jacobi(JΛ,JE)").status == "fail"
        assert rep.clause("consistency").passed

    def test_requires_jacobi(self, R3):
        with pytest.raises(NotJacobi):
            check_theorem_rec(JacobiPair(wedge(d(R3, 1), d(R3, 2)), d(R3, 3)), EndomorphismField.identity(R3))

    def test_generated_instances_agree(self):
        outcomes = set()
        for label, p, J in gen.theorem_instances(seed=3, count=12):
            rep = check_theorem_rec(p, J)
            assert rep.status != "error", label
            outcomes.add(rep.passed)
        assert outcomes == {True, False}


class TestPencils:
    def test_self(self):
        p = contact()
        assert is_jacobi_pencil(p, p).passed

    def test_split_planes(self, R4):
        assert is_jacobi_pencil(JacobiPair(wedge(d(R4, 1), d(R4, 2))), JacobiPair(wedge(d(R4, 3), d(R4, 4)))).passed

    def test_contact_vs_reeb(self):
        p = contact()
        q = JacobiPair(MultivectorField.zero(p.chart, 2), p.E)
        rep = is_jacobi_pencil(p, q)
        assert rep.clause("condition (2)").status == "fail"
        assert rep.clause("λ-route").status == "fail"
        assert rep.clause("agreement").passed
        # the residual is E₂∧Λ₁ = ∂z∧Λ_c
        assert any(str(wedge(p.E, p.L)) in r for r in rep.residuals)

    def test_requires_jacobi(self, R3):
        bad = JacobiPair(wedge(d(R3, 1), d(R3, 2)), d(R3, 3))
        with pytest.raises(NotJacobi):
            is_jacobi_pencil(bad, contact())


class TestHierarchy:
    def test_scalar_two(self, R2):
        p = JacobiPair(wedge(d(R2, 1), d(R2, 2)))
        members = hierarchy(p, EndomorphismField.identity(R2) * 2, 3)
        assert members == [p.scaled(2 ** k) for k in range(4)]

    def test_contact_constant(self):
        p = contact()
        assert hierarchy(p, EndomorphismField.identity(p.chart), 3) == [p] * 4

    @pytest.mark.parametrize("kind", ["scalar", "mixed"])
    def test_lcs(self, kind):
        p1, _, J, _ = lcs_pairs(kind)
        rep = hierarchy_report(p1, J, 3)
        assert rep.passed
        assert sum(k.startswith("pencil") for k in rep.clauses) == 6

    def test_not_compatible(self, R2):
        with pytest.raises(NotCompatible):
            hierarchy(JacobiPair(wedge(d(R2, 1), d(R2, 2))), EndomorphismField.diagonal(R2, [1, 2]), 2)


class TestAnchorEquivalences:
    def test_contact(self):
        p = contact()
        assert check_anchor_equivalences(p, EndomorphismField.identity(p.chart)).passed

    @pytest.mark.parametrize("kind", ["scalar", "mixed"])
    def test_lcs(self, kind):
        p1, _, J, _ = lcs_pairs(kind)
        assert check_anchor_equivalences(p1, J).passed


# -- recursion operators -----------------------------------------------------------

class TestRecursion:
    @pytest.mark.parametrize("which", ["contact", "lcs", "symplectic", "reeb"])
    def test_identity_operator(self, which):
        ch1 = Chart.standard(1)
        p = {"contact": contact, "lcs": lambda: lcs_pairs()[0], "symplectic": gen.symplectic_r4,
             "reeb": lambda: JacobiPair(MultivectorField.zero(ch1, 2), d(ch1, 1))}[which]()
        assert recursion_operator_check(p, RecursionOperator.identity(p.chart)).passed

    def test_counterexample_fails_at_commutation_only(self):
        ch = Chart.standard(1)
        p = JacobiPair(MultivectorField.zero(ch, 2), d(ch, 1))
        R = RecursionOperator(EndomorphismField.zero(ch), d(ch, 1), DifferentialForm.zero(ch, 1), 0)
        rep = recursion_operator_check(p, R)
        failed = [k for k, v in rep.clauses.items() if not v.passed]
        assert failed == ["commutation"]
        com = rep.clause("commutation")
        assert [k for k, v in com.clauses.items() if not v.passed] == ["JΛα-ΛᵗJα=(i_Eα)X₀+(i_X₀α)E"]
        assert any("(-2)*D[x1]" in r for r in rep.residuals)

    def test_eigen_reeb(self, R2):
        E = d(R2, 1)
        p = JacobiPair(MultivectorField.zero(R2, 2), E)
        R = RecursionOperator(EndomorphismField.diagonal(R2, [2, 5]), MultivectorField.zero(R2, 1), DifferentialForm.zero(R2, 1), 2)
        assert recursion_operator_check(p, R).passed


# -- homogeneous Poisson ------------------------------------------------------------

class TestHomogeneous:
    def test_examples(self, R3):
        Z = euler_field(R3)
        assert is_homogeneous_poisson(so3(), Z).passed
        L = wedge(d(R3, 1), d(R3, 2))
        assert lie_derivative(Z, L) == L * -2
        assert not is_homogeneous_poisson(L, Z).passed
        assert is_homogeneous_poisson(MultivectorField.zero(R3, 2), d(R3, 2) * S("x1", R3)).passed

    @pytest.mark.parametrize("c", ["1", "3"])
    def test_constant_scalar_pn(self, R3, c):
        rep = check_homogeneous_pn(so3(), euler_field(R3), EndomorphismField.identity(R3) * S(c, R3))
        assert rep.passed
        assert rep.clause("π∘[L_Z,ᵗJ]=0").passed and rep.clause("[Z,Jπ]=-Jπ").passed

    def test_x1_scalar_fails_consistently(self, R3):
        J = EndomorphismField.identity(R3) * S("x1", R3)
        rep = check_homogeneous_pn(so3(), euler_field(R3), J)
        assert rep.clause("π∘[L_Z,ᵗJ]=0").status == "fail"
        assert rep.clause("[Z,Jπ]=-Jπ").status == "fail"
        assert rep.clause("hypotheses").status == "fail"
        with pytest.raises(HypothesisViolated):
            check_homogeneous_pn(so3(), euler_field(R3), J, strict=True)


class TestConformal:
    def test_projection_with_exp_t(self):
        for p in (contact(), lcs_pairs()[0]):
            big = p.chart.extend("t")
            src = JacobiPair(poissonize(p))
            rep = verify_conformal_morphism(src, p, S("exp(t)", big), p.chart.coordinates())
            assert rep.passed

    def test_unit_factor(self):
        p = contact()
        big = p.chart.extend("t")
        assert not verify_conformal_morphism(JacobiPair(poissonize(p)), p, big.one, p.chart.coordinates()).passed
        q = gen.symplectic_r4()
        qbig = q.chart.extend("t")
        assert verify_conformal_morphism(q.lift(qbig), q, qbig.one, q.chart.coordinates()).passed

    def test_empty_tests_warn(self):
        p = contact()
        big = p.chart.extend("t")
        rep = verify_conformal_morphism(JacobiPair(poissonize(p)), p, big.one, [])
        assert rep.passed and rep.notes
