"""Image algebras: closure, dimension bound, quiver data, presentations."""

from fractions import Fraction
from itertools import product

import pytest

from jordanplane import freealg
from jordanplane.imgalg import (dimension_bound, extract_presentation,
                                free_truncated_quotient_dim,
                                generated_subalgebra, image_report,
                                word_span_dim)
from jordanplane.linalg import Mat, rref
from jordanplane.repmod import Representation, direct_sum, simple_module
from jordanplane.strata import Partition, partitions, sample_point

F = Fraction


def full_block_rep(n, seed=1):
    s = sample_point(Partition((n,)), seed)
    return Representation(n, s.X, s.Y)


def word_span_bruteforce(X, Y, maxlen):
    """Evaluate every word of length <= maxlen explicitly; rank by RREF."""
    n = X.rows
    rows = []
    for length in range(maxlen + 1):
        for letters in product("xy", repeat=length):
            m = Mat.identity(n)
            for ch in letters:
                m = m * (X if ch == "x" else Y)
            rows.append(list(m.vec()))
    _, pivots = rref(rows)
    return len(pivots)


class TestGeneratedSubalgebra:
    def test_simple_is_one_dimensional(self):
        rep = simple_module(F(7, 3))
        assert generated_subalgebra(rep.X, rep.Y).dim == 1

    def test_full_block_n2(self):
        rep = full_block_rep(2)
        alg = generated_subalgebra(rep.X, rep.Y)
        assert alg.dim == 2
        assert alg.dim == word_span_bruteforce(rep.X, rep.Y, 4)

    def test_full_block_n3(self):
        rep = full_block_rep(3)
        alg = generated_subalgebra(rep.X, rep.Y)
        assert alg.dim == 4 == dimension_bound(3)
        assert alg.dim == word_span_bruteforce(rep.X, rep.Y, 6)

    def test_contains_identity_and_closed(self):
        from jordanplane.linalg import EchelonSpan
        rep = full_block_rep(4, seed=2)
        alg = generated_subalgebra(rep.X, rep.Y)
        span = EchelonSpan(16)
        for b in alg.basis:
            span.add(b.vec())
        assert span.contains(Mat.identity(4).vec())
        for a in alg.basis:
            for b in alg.basis:
                assert span.contains((a * b).vec())

    def test_rad2_bounded_by_radical(self):
        rep = full_block_rep(5, seed=2)
        alg = generated_subalgebra(rep.X, rep.Y)
        assert alg.rad2_dim <= len(alg.radical_basis)


class TestWordSpan:
    def test_maxlen_zero(self):
        rep = full_block_rep(3)
        assert word_span_dim(rep.X, rep.Y, 0) == 1

    def test_zero_generators(self):
        assert word_span_dim(Mat.zeros(3, 3), Mat.zeros(3, 3), 5) == 1

    def test_matches_bruteforce_enumeration(self):
        for n, seed in ((2, 0), (2, 5), (3, 1), (3, 7)):
            rep = full_block_rep(n, seed)
            for maxlen in (1, 2, 4):
                assert (word_span_dim(rep.X, rep.Y, maxlen)
                        == word_span_bruteforce(rep.X, rep.Y, maxlen))

    def test_matches_closure_at_2n(self):
        for p in partitions(4):
            s = sample_point(p, 13)
            assert (word_span_dim(s.X, s.Y, 8)
                    == generated_subalgebra(s.X, s.Y).dim)


class TestDimensionBound:
    def test_paper_values(self):
        assert dimension_bound(2) == 2
        assert dimension_bound(5) == 9
        assert dimension_bound(6) == 12

    def test_formula_split(self):
        for n in range(1, 12):
            if n % 2 == 0:
                assert dimension_bound(n) == n * (n + 2) // 4
            else:
                assert dimension_bound(n) == (n + 1) ** 2 // 4


class TestImageReport:
    def test_simple(self):
        r = image_report(simple_module(4))
        assert (r.image_dim, r.eigenvalue_count, r.semisimple_dim) == (1, 1, 1)
        assert r.basic and r.loops == 0

    def test_full_block_n2(self):
        r = image_report(full_block_rep(2))
        assert r.image_dim == 2 == r.bound
        assert r.semisimple_dim == 1 and r.loops == 1

    def test_full_block_n3(self):
        r = image_report(full_block_rep(3))
        assert r.image_dim == 4 == r.bound
        assert r.semisimple_dim == 1 and r.loops == 2

    def test_split_module_not_local(self):
        rep = direct_sum(simple_module(1), simple_module(2))
        r = image_report(rep)
        assert r.semisimple_dim == 2 and r.loops is None
        assert r.basic  # two eigenvalues, two field summands

    def test_bound_on_all_partitions_of_4(self):
        for p in partitions(4):
            for seed in range(5):
                s = sample_point(p, seed)
                r = image_report(Representation(4, s.X, s.Y))
                assert r.within_bound and r.basic


class TestPresentation:
    def test_simple_module_kills_both_generators(self):
        pres = extract_presentation(simple_module(F(5, 2)), 2)
        degree_one = pres.relations_by_degree[1]
        assert {r.to_string(("u", "v")) for r in degree_one} == {"u", "v"}

    def test_full_block_n2_shape(self):
        rep = full_block_rep(2)
        pres = extract_presentation(rep, 3)
        deg1 = pres.relations_by_degree[1]
        assert len(deg1) == 1
        words = set(deg1[0].terms)
        assert words <= {"x", "y"} and "x" in words  # u proportional to v
        deg2 = [r.to_string(("u", "v")) for r in pres.relations_by_degree[2]]
        assert "v^2" in deg2
        # quotient is k[t]/(t^2)
        assert free_truncated_quotient_dim(pres.all_relations(), 3) == 2

    def test_full_block_n3_no_linear_relations(self):
        rep = full_block_rep(3)
        pres = extract_presentation(rep, 3)
        assert 1 not in pres.relations_by_degree
        # 7 words of degree <= 2 minus image dimension 4 leaves 3 relations
        assert len(pres.relations_by_degree[2]) == 3

    def test_relations_evaluate_to_zero(self):
        for n in (2, 3, 4):
            rep = full_block_rep(n, seed=3)
            pres = extract_presentation(rep, n)
            U = rep.X - Mat.identity(n).scale(pres.alpha)
            for rels in pres.relations_by_degree.values():
                for r in rels:
                    assert freealg.evaluate(r, U, rep.Y).is_zero()

    def test_truncated_quotient_reproduces_image_dim(self):
        # generators are nilpotent of index <= n here, so the degree-n
        # truncation of the presented algebra matches the image algebra
        for n in (2, 3, 4):
            rep = full_block_rep(n, seed=5)
            alg_dim = generated_subalgebra(rep.X, rep.Y).dim
            if word_span_dim(rep.X, rep.Y, n) != alg_dim:
                continue
            pres = extract_presentation(rep, n)
            assert free_truncated_quotient_dim(pres.all_relations(), n) == alg_dim

    def test_non_local_rejected(self):
        rep = direct_sum(simple_module(1), simple_module(2))
        with pytest.raises(ValueError, match="local"):
            extract_presentation(rep, 3)

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            extract_presentation(full_block_rep(2), 1)

    def test_json_serialization(self):
        pres = extract_presentation(full_block_rep(2), 2)
        obj = pres.to_json()
        assert obj["generators"] == ["u", "v"]
        assert all(isinstance(r, str) for rels in obj["relations"].values()
                   for r in rels)
