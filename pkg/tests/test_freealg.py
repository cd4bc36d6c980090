"""Rewriting system, parser, automorphisms, truncated quotients."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jordanplane import freealg
from jordanplane.freealg import (AutParams, ExprSyntaxError, NcPolynomial,
                                 check_endomorphism, compose_aut, evaluate,
                                 identity_aut, invert_aut, normal_form,
                                 parse_expr, pbw_basis, quotient_dim,
                                 substitute, word_is_pbw)
from jordanplane.linalg import Mat, Poly
from jordanplane.prng import SplitMix64
from jordanplane.strata import Partition, sample_point

F = Fraction

words = st.text(alphabet="xy", max_size=4)
coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=3)
nc_polys = st.dictionaries(words, coeffs, max_size=4).map(NcPolynomial)


def sample_pairs(count, sizes=(2, 3), seed0=0):
    pairs = []
    seed = seed0
    while len(pairs) < count:
        for n in sizes:
            s = sample_point(Partition((n,)), seed)
            pairs.append((s.X, s.Y))
        seed += 1
    return pairs[:count]


class TestParser:
    def test_defining_relation(self):
        p = parse_expr("x*y - y*x - y^2")
        assert p.terms == {"xy": F(1), "yx": F(-1), "yy": F(-1)}

    def test_juxtaposition_and_rational_coefficient(self):
        p = parse_expr("3/2 y x^2")
        assert p.terms == {"yxx": F(3, 2)}

    def test_distributivity(self):
        assert parse_expr("x*(y+1)") == parse_expr("x*y + x")

    def test_power_of_parenthesized(self):
        assert parse_expr("(x+y)^2") == parse_expr("x^2 + x y + y x + y^2")

    def test_scalar_arithmetic(self):
        assert parse_expr("2^3 - 1/2").terms == {"": F(15, 2)}

    def test_syntax_error_carries_position(self):
        with pytest.raises(ExprSyntaxError) as err:
            parse_expr("x + * y")
        assert err.value.pos == 4

    def test_negative_exponent(self):
        with pytest.raises(ExprSyntaxError, match="negative exponent"):
            parse_expr("x^-1")

    def test_unknown_character(self):
        with pytest.raises(ExprSyntaxError):
            parse_expr("x + z")

    def test_leading_minus(self):
        assert parse_expr("-x + y") == parse_expr("y - x")


class TestNormalForm:
    def test_defining_rewrite(self):
        assert normal_form(parse_expr("x*y")) == parse_expr("y*x + y^2")

    def test_already_normal(self):
        p = parse_expr("y*x")
        assert normal_form(p) == p

    def test_xy2_by_hand(self):
        # x yy -> (yx + yy) y -> y (xy) + y^3 -> y (yx + yy) + y^3 = yyx + 2 y^3
        assert normal_form(parse_expr("x*y^2")) == parse_expr("y^2*x + 2*y^3")

    def test_xy2_against_matrix_evaluation(self):
        lhs = parse_expr("x*y^2")
        rhs = parse_expr("y^2*x + 2*y^3")
        for X, Y in sample_pairs(10):
            assert evaluate(lhs, X, Y) == evaluate(rhs, X, Y)

    def test_output_is_pbw(self):
        nf = normal_form(parse_expr("x^2 y^2 x y"))
        assert all(word_is_pbw(w) for w in nf.terms)

    @settings(max_examples=60, deadline=None)
    @given(nc_polys)
    def test_idempotent(self, p):
        nf = normal_form(p)
        assert normal_form(nf) == nf

    @settings(max_examples=60, deadline=None)
    @given(nc_polys, nc_polys)
    def test_congruence(self, p, q):
        assert normal_form(p * q) == normal_form(normal_form(p) * normal_form(q))

    @settings(max_examples=30, deadline=None)
    @given(nc_polys, nc_polys, nc_polys)
    def test_associativity_of_induced_product(self, p, q, r):
        a, b, c = normal_form(p), normal_form(q), normal_form(r)
        assert (normal_form(normal_form(a * b) * c)
                == normal_form(a * normal_form(b * c)))

    def test_degree_preserved(self):
        p = parse_expr("x^3 y^2")
        assert normal_form(p).degree == p.degree


class TestEvaluate:
    def test_relation_vanishes_on_samples(self):
        rel = parse_expr("x*y - y*x - y^2")
        for X, Y in sample_pairs(6, sizes=(2, 3, 4)):
            assert evaluate(rel, X, Y).is_zero()

    def test_yn_vanishes_on_samples(self):
        for X, Y in sample_pairs(4, sizes=(2, 3)):
            assert evaluate(NcPolynomial.from_term("y" * X.rows), X, Y).is_zero()

    def test_evaluation_factors_through_normal_form(self):
        rng = SplitMix64(5)
        for X, Y in sample_pairs(10):
            terms = {"".join("x" if rng.randint(0, 1) else "y"
                             for _ in range(rng.randint(0, 3))): rng.fraction(4, 2)
                     for _ in range(3)}
            p = NcPolynomial(terms)
            assert evaluate(p, X, Y) == evaluate(normal_form(p), X, Y)

    @settings(max_examples=25, deadline=None)
    @given(nc_polys, nc_polys)
    def test_homomorphism(self, p, q):
        X, Y = sample_pairs(1, sizes=(3,))[0]
        assert evaluate(p * q, X, Y) == evaluate(p, X, Y) * evaluate(q, X, Y)

    def test_constant_term_times_identity(self):
        X, Y = Mat.zeros(2, 2), Mat.zeros(2, 2)
        assert evaluate(parse_expr("5"), X, Y) == Mat.identity(2).scale(F(5))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            evaluate(parse_expr("x"), Mat.zeros(2, 2), Mat.zeros(3, 3))


class TestEndomorphisms:
    def test_shear_is_endomorphism(self):
        assert check_endomorphism(parse_expr("x + y"), parse_expr("y"))

    def test_x_to_x_y_to_x_is_not(self):
        # the relation maps to -x^2, already in normal form and nonzero
        assert not check_endomorphism(parse_expr("x"), parse_expr("x"))

    def test_standard_shape_always_works(self):
        rng = SplitMix64(17)
        for _ in range(50):
            alpha = rng.nonzero_fraction(5, 3)
            poly = Poly.from_coeffs([rng.fraction(5, 3)
                                     for _ in range(rng.randint(1, 4))])
            fx, fy = AutParams(alpha, poly).images()
            assert check_endomorphism(fx, fy)


class TestAutGroup:
    def test_double_shift_adds(self):
        t = Poly.from_coeffs([0, 1])
        phi = AutParams(F(1), t)
        assert compose_aut(phi, phi) == AutParams(F(1), Poly.from_coeffs([0, 2]))

    def test_identity_neutral(self):
        phi = AutParams(F(3), Poly.from_coeffs([1, 0, 2]))
        assert compose_aut(identity_aut(), phi) == phi
        assert compose_aut(phi, identity_aut()) == phi

    def test_compose_matches_substitution(self):
        rng = SplitMix64(23)
        for _ in range(20):
            outer = AutParams(rng.nonzero_fraction(4, 2),
                              Poly.from_coeffs([rng.fraction(4, 2)
                                                for _ in range(rng.randint(1, 3))]))
            inner = AutParams(rng.nonzero_fraction(4, 2),
                              Poly.from_coeffs([rng.fraction(4, 2)
                                                for _ in range(rng.randint(1, 3))]))
            ox, oy = outer.images()
            ix, iy = inner.images()
            oracle = freealg.aut_params_from_images(
                normal_form(substitute(ix, ox, oy)),
                normal_form(substitute(iy, ox, oy)))
            assert oracle == compose_aut(outer, inner)

    def test_inverse_has_standard_shape_and_cancels(self):
        rng = SplitMix64(29)
        for _ in range(25):
            phi = AutParams(rng.nonzero_fraction(4, 2),
                            Poly.from_coeffs([rng.fraction(4, 2)
                                              for _ in range(rng.randint(1, 3))]))
            inv = invert_aut(phi)
            assert compose_aut(phi, inv) == identity_aut()
            assert compose_aut(inv, phi) == identity_aut()

    def test_zero_alpha_rejected(self):
        with pytest.raises(ValueError):
            AutParams(F(0), Poly.zero())


class TestQuotientDim:
    def test_mod_y_leaves_x_powers(self):
        assert quotient_dim([parse_expr("y")], 5) == 6

    def test_maximal_ideal_gives_scalars(self):
        for alpha in (F(0), F(3, 2), F(-7)):
            gens = [parse_expr("y"),
                    parse_expr("x") - NcPolynomial.from_term("", alpha)]
            assert quotient_dim(gens, 4) == 1

    def test_zero_ideal_counts_monomials(self):
        assert quotient_dim([], 3) == 10

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            quotient_dim([], -1)


class TestPbwBasis:
    def test_triangle_counts(self):
        for d in range(11):
            assert len(pbw_basis(d)) == (d + 1) * (d + 2) // 2

    def test_all_normal_and_unique(self):
        basis = pbw_basis(6)
        assert len(set(basis)) == len(basis)
        assert all(word_is_pbw(w) for w in basis)


def test_term_order_display():
    assert str(normal_form(parse_expr("x*y^2"))) == "y^2*x + 2*y^3"
    assert str(parse_expr("1 - y")) == "-y + 1"
    assert str(NcPolynomial.zero()) == "0"
