"""Acceptance criteria, one test per criterion.

Runs every criterion at its stated range and tolerance (all checks are
exact) and prints one line per criterion; run with `pytest -s` or `-v` to
see them.  The heavy sampled surveys are shared through a session fixture.
"""

import time
from fractions import Fraction

import pytest

from jordanplane import freealg, repmod, strata
from jordanplane.verify import ClaimSuite, RunConfig, partition_count_recurrence

F = Fraction

EXPECTED_COUNTS = [1, 2, 3, 5, 7, 11, 15]  # partitions of 1..7


@pytest.fixture(scope="session")
def suite():
    return ClaimSuite(RunConfig(seed=0, max_n=7, samples_per_stratum=20))


def report(number: int, result, elapsed: float) -> None:
    status = "PASS" if result.passed else "FAIL"
    print(f"\ncriterion {number:>2} [{status}] ({elapsed:.1f}s) "
          f"{result.name}: {result.witness}")
    assert result.passed, result.witness


def timed(fn):
    start = time.monotonic()
    result = fn()
    return result, time.monotonic() - start


def test_criterion_01_component_census(suite):
    result, elapsed = timed(suite.claim_component_census)
    for n in range(1, 8):
        assert len(strata.strata_table(n)) == EXPECTED_COUNTS[n - 1]
        assert partition_count_recurrence(n) == EXPECTED_COUNTS[n - 1]
    report(1, result, elapsed)
    assert elapsed < 10


def test_criterion_02_equidimensionality(suite):
    result, elapsed = timed(suite.claim_equidimensional)
    report(2, result, elapsed)
    assert elapsed < 60


def test_criterion_03_fiber_equals_centralizer(suite):
    result, elapsed = timed(suite.claim_fiber_centralizer)
    for n in range(1, 8):
        for p in strata.partitions(n):
            assert (len(strata.solve_fiber(p).kernel)
                    == sum(min(a, b) for a in p.parts for b in p.parts))
    report(3, result, elapsed)


def test_criterion_04_nilpotency(suite):
    result, elapsed = timed(suite.claim_nilpotency)
    report(4, result, elapsed)


def test_criterion_05_ext_vanishing(suite):
    result, elapsed = timed(suite.claim_ext_vanishing)
    assert repmod.ext1(repmod.simple_module(1), repmod.simple_module(2)).dim == 0
    assert repmod.ext1(repmod.simple_module(1), repmod.simple_module(1)).dim == 2
    report(5, result, elapsed)


def test_criterion_06_automorphisms(suite):
    result, elapsed = timed(suite.claim_automorphisms)
    report(6, result, elapsed)


def test_criterion_07_dimension_bound(suite):
    result, elapsed = timed(suite.claim_dimension_bound)
    report(7, result, elapsed)
    assert elapsed < 300


def test_criterion_08_generic_indecomposability(suite):
    result, elapsed = timed(suite.claim_indecomposability)
    report(8, result, elapsed)


def test_criterion_09_basicness(suite):
    result, elapsed = timed(suite.claim_basicness)
    report(9, result, elapsed)


def test_criterion_10_oracle_equivalence(suite):
    result, elapsed = timed(suite.claim_oracles)
    for d in range(11):
        assert len(freealg.pbw_basis(d)) == (d + 1) * (d + 2) // 2
    report(10, result, elapsed)


def test_criterion_11_kernel_ideal_shapes(suite):
    result, elapsed = timed(suite.claim_kernel_ideals)
    for d in range(7):
        assert freealg.quotient_dim([freealg.NcPolynomial.from_term("y")], d) == d + 1
    report(11, result, elapsed)
