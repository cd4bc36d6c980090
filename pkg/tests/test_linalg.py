"""Exact linear algebra core: solving, characteristic polynomials, predicates."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jordanplane.linalg import (EchelonSpan, Mat, Poly, char_poly,
                                distinct_eigenvalue_count, is_nilpotent,
                                kernel_basis, parse_rat, poly_gcd, rref,
                                solve_affine)
from jordanplane.prng import SplitMix64

F = Fraction

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def mats(n, m=None):
    m = n if m is None else m
    return st.lists(small_fracs, min_size=n * m, max_size=n * m).map(
        lambda vals: Mat(n, m, vals))


def naive_rank(matrix: Mat) -> int:
    """Independent elimination pass: forward elimination only, no normalization."""
    rows = [row[:] for row in matrix.row_lists()]
    rank = 0
    for col in range(matrix.cols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


class TestSolveAffine:
    def test_identity_system(self):
        sol = solve_affine(Mat.identity(2), [F(1), F(2)])
        assert sol.particular == (F(1), F(2))
        assert sol.kernel_basis == ()

    def test_zero_map(self):
        sol = solve_affine(Mat.zeros(2, 2), [F(0), F(0)])
        assert sol.particular == (F(0), F(0))
        assert len(sol.kernel_basis) == 2

    def test_inconsistent(self):
        # rows are proportional but the right sides are not: hand elimination
        # gives 0 = 1 in the second row
        A = Mat.from_rows([[1, 1], [2, 2]])
        assert solve_affine(A, [F(1), F(3)]) is None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve_affine(Mat.identity(2), [F(1)])

    @settings(max_examples=40, deadline=None)
    @given(mats(3, 4), st.lists(small_fracs, min_size=4, max_size=4),
           st.lists(small_fracs, min_size=8, max_size=8))
    def test_constructed_systems_are_solved(self, A, x, coeffs):
        b = [sum((A[i, j] * x[j] for j in range(4)), F(0)) for i in range(3)]
        sol = solve_affine(A, b)
        assert sol is not None
        vec = list(sol.particular)
        for c, k in zip(coeffs, sol.kernel_basis):
            vec = [v + c * kv for v, kv in zip(vec, k)]
        assert all(
            sum((A[i, j] * vec[j] for j in range(4)), F(0)) == b[i]
            for i in range(3))

    @settings(max_examples=40, deadline=None)
    @given(mats(3, 5))
    def test_rank_nullity(self, A):
        assert naive_rank(A) + len(kernel_basis(A)) == A.cols

    def test_kernel_vectors_annihilated(self):
        A = Mat.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        for k in kernel_basis(A):
            prod = [sum((A[i, j] * k[j] for j in range(3)), F(0)) for i in range(3)]
            assert all(v == 0 for v in prod)


class TestCharPoly:
    def test_repeated_and_simple_eigenvalues(self):
        M = Mat.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
        # (t-1)^2 (t-2) = t^3 - 4t^2 + 5t - 2
        assert char_poly(M).coeffs == (F(-2), F(5), F(-4), F(1))
        assert distinct_eigenvalue_count(M) == 2

    def test_nilpotent_block(self):
        M = Mat.from_rows([[0, 1], [0, 0]])
        assert char_poly(M).coeffs == (F(0), F(0), F(1))
        assert distinct_eigenvalue_count(M) == 1

    def test_companion_of_t3_minus_t(self):
        # t^3 - t = t (t - 1) (t + 1): three distinct roots
        M = Mat.from_rows([[0, 0, 0], [1, 0, 1], [0, 1, 0]])
        assert char_poly(M).coeffs == (F(0), F(-1), F(0), F(1))
        assert distinct_eigenvalue_count(M) == 3

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            char_poly(Mat.zeros(2, 3))

    def test_cayley_hamilton_up_to_6(self):
        rng = SplitMix64(42)
        for n in range(1, 7):
            M = Mat(n, n, [rng.fraction(4, 2) for _ in range(n * n)])
            assert char_poly(M).eval_matrix(M).is_zero()

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 4).flatmap(mats))
    def test_cayley_hamilton_random(self, M):
        assert char_poly(M).eval_matrix(M).is_zero()


class TestNilpotency:
    def test_jordan_block_any_size(self):
        for n in (1, 2, 5):
            e = [[F(1) if j == i + 1 else F(0) for j in range(n)] for i in range(n)]
            assert is_nilpotent(Mat.from_rows(e))

    def test_identity_not_nilpotent(self):
        assert not is_nilpotent(Mat.identity(3))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 4).flatmap(mats))
    def test_agrees_with_power_route(self, M):
        assert is_nilpotent(M) == (M ** M.rows).is_zero()


class TestPoly:
    def test_gcd_and_squarefree(self):
        p = Poly.from_coeffs([0, -1, 0, 1])  # t^3 - t
        g = poly_gcd(p, p.derivative())
        assert g.coeffs == (F(1),)

    def test_division(self):
        p = Poly.from_coeffs([-2, 5, -4, 1])
        q, r = divmod(p, Poly.from_coeffs([-1, 1]))
        assert r.is_zero()
        assert q.coeffs == (F(2), F(-3), F(1))

    def test_scale_arg(self):
        p = Poly.from_coeffs([1, 1, 1])
        assert p.scale_arg(F(2)).coeffs == (F(1), F(2), F(4))


class TestSerialization:
    def test_rational_strings(self):
        assert parse_rat("3/2") == F(3, 2)
        assert parse_rat("-7") == F(-7)
        assert str(F(3, 2)) == "3/2" and str(F(5)) == "5"
        with pytest.raises(ValueError):
            parse_rat("1.5")

    def test_matrix_roundtrip(self):
        M = Mat.from_rows([[F(1, 2), 0], [3, F(-4, 5)]])
        obj = M.to_json()
        assert obj["entries"][0][0] == "1/2"
        assert Mat.from_json(obj) == M


class TestEchelonSpan:
    def test_basis_is_order_independent(self):
        vectors = [(F(1), F(2), F(0)), (F(0), F(1), F(1)), (F(1), F(3), F(1))]
        s1 = EchelonSpan(3)
        s2 = EchelonSpan(3)
        for v in vectors:
            s1.add(v)
        for v in reversed(vectors):
            s2.add(v)
        assert s1.basis_rows() == s2.basis_rows()
        assert s1.dim == 2

    def test_membership(self):
        span = EchelonSpan(2)
        span.add((F(1), F(1)))
        assert span.contains((F(2), F(2)))
        assert not span.contains((F(1), F(0)))


def test_rref_is_idempotent():
    rows = [[F(2), F(4)], [F(1), F(3)]]
    once, piv1 = rref([r[:] for r in rows])
    twice, piv2 = rref([r[:] for r in once])
    assert once == twice and piv1 == piv2
