"""Claim-by-claim verification suite.

Each claim re-checks one computationally falsifiable statement about the
algebra k<x,y>/(xy - yx - y^2) at desk scale: stratum census and
dimensions, nilpotency of Y, Ext vanishing between distinct simples, the
automorphism group law, the image-algebra dimension bound with its
attainment, basicness, generic indecomposability, rewriting-oracle
agreement, and the shape of the kernel ideals of the simples.  Everything
is exact and deterministic given the configured seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import freealg, imgalg, repmod, strata
from .linalg import InvariantViolation, Poly, is_nilpotent
from .prng import SplitMix64, stream_for

PARTITION_COUNTS = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)  # p(0) .. p(10)


def partition_count_recurrence(n: int) -> int:
    """Independent partition count via the bounded-largest-part recurrence."""
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        table[0][k] = 1
    for total in range(1, n + 1):
        for largest in range(1, n + 1):
            table[total][largest] = table[total][largest - 1]
            if total >= largest:
                table[total][largest] += table[total - largest][largest]
    return table[n][n]


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    max_n: int = 6
    samples_per_stratum: int = 20
    entry_bound: int = 3
    output_mode: str = "text"  # "text" | "json"

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")
        if self.samples_per_stratum < 1:
            raise ValueError("samples_per_stratum must be >= 1")


@dataclass(frozen=True)
class ClaimResult:
    number: int
    name: str
    passed: bool
    witness: str

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name,
                "passed": self.passed, "witness": self.witness}


@dataclass
class _SurveyRow:
    sample: strata.SamplePoint
    report: imgalg.ImageReport
    word_dim: int


class ClaimSuite:
    """Runs the eleven claims; the image survey is shared between claims."""

    def __init__(self, config: RunConfig):
        self.config = config
        self._survey: dict[tuple[int, strata.Partition], list[_SurveyRow]] | None = None

    # -- shared sampled data -----------------------------------------------

    def survey(self) -> dict[tuple[int, strata.Partition], list[_SurveyRow]]:
        if self._survey is not None:
            return self._survey
        cfg = self.config
        count = max(20, cfg.samples_per_stratum)
        out: dict[tuple[int, strata.Partition], list[_SurveyRow]] = {}
        for n in range(1, min(6, cfg.max_n) + 1):
            for p in strata.partitions(n):
                rows = []
                for i in range(count):
                    sample = strata.sample_point(p, cfg.seed + i, cfg.entry_bound)
                    rep = repmod.Representation(n, sample.X, sample.Y)
                    rows.append(_SurveyRow(
                        sample,
                        imgalg.image_report(rep),
                        imgalg.word_span_dim(sample.X, sample.Y, 2 * n)))
                out[(n, p)] = rows
        self._survey = out
        return out

    # -- individual claims ----------------------------------------------------

    def claim_component_census(self) -> ClaimResult:
        top = min(7, self.config.max_n)
        counts = []
        ok = True
        for n in range(1, top + 1):
            table_rows = len(strata.strata_table(n))
            enumerated = len(strata.partitions(n))
            recurrence = partition_count_recurrence(n)
            counts.append(table_rows)
            if not (table_rows == enumerated == recurrence == PARTITION_COUNTS[n]):
                ok = False
        return ClaimResult(1, "component census", ok,
                           f"strata per n=1..{top}: {counts}")

    def claim_equidimensional(self) -> ClaimResult:
        top = min(7, self.config.max_n)
        checked = 0
        try:
            for n in range(1, top + 1):
                for stratum in strata.strata_table(n):
                    checked += 1
                    if stratum.total_dim != n * n:
                        return ClaimResult(
                            2, "equidimensionality", False,
                            f"partition {stratum.partition}: total {stratum.total_dim} != {n * n}")
        except InvariantViolation as exc:
            return ClaimResult(2, "equidimensionality", False, str(exc))
        return ClaimResult(2, "equidimensionality", True,
                           f"{checked} strata up to n={top}, all of dimension n^2")

    def claim_fiber_centralizer(self) -> ClaimResult:
        top = min(7, self.config.max_n)
        checked = 0
        for n in range(1, top + 1):
            for p in strata.partitions(n):
                checked += 1
                solver_dim = len(strata.solve_fiber(p).kernel)
                formula = strata.centralizer_dim(p)
                if solver_dim != formula:
                    return ClaimResult(
                        3, "fiber = centralizer", False,
                        f"partition {p}: solver {solver_dim} != formula {formula}")
        return ClaimResult(3, "fiber = centralizer", True,
                           f"{checked} partitions up to n={top} match sum(min(ni, nj))")

    def claim_nilpotency(self) -> ClaimResult:
        cfg = self.config
        top = min(6, cfg.max_n)
        total = 0
        for n in range(1, top + 1):
            parts = strata.partitions(n)
            for i in range(100):
                p = parts[i % len(parts)]
                sample = strata.sample_point(p, cfg.seed + i, cfg.entry_bound)
                total += 1
                if not repmod.check_relation(sample.X, sample.Y):
                    return ClaimResult(4, "nilpotency of Y", False,
                                       f"relation fails for {p} seed {cfg.seed + i}")
                if not is_nilpotent(sample.Y):
                    return ClaimResult(4, "nilpotency of Y", False,
                                       f"Y not nilpotent for {p} seed {cfg.seed + i}")
        return ClaimResult(4, "nilpotency of Y", True,
                           f"{total} samples: relation holds and Y is nilpotent")

    def claim_ext_vanishing(self) -> ClaimResult:
        rng = stream_for(self.config.seed, 105)
        for _ in range(20):
            a = rng.fraction(num_bound=9, den_bound=4)
            b = rng.fraction(num_bound=9, den_bound=4)
            while b == a:
                b = rng.fraction(num_bound=9, den_bound=4)
            dim = repmod.ext1(repmod.simple_module(a), repmod.simple_module(b)).dim
            if dim != 0:
                return ClaimResult(5, "Ext vanishing", False,
                                   f"ext1(S_{a}, S_{b}) = {dim} != 0")
        for _ in range(20):
            a = rng.fraction(num_bound=9, den_bound=4)
            dim = repmod.ext1(repmod.simple_module(a), repmod.simple_module(a)).dim
            if dim != 2:
                return ClaimResult(5, "Ext vanishing", False,
                                   f"ext1(S_{a}, S_{a}) = {dim} != 2")
        return ClaimResult(5, "Ext vanishing", True,
                           "20 distinct pairs give 0, 20 self-extensions give 2")

    def _random_aut(self, rng: SplitMix64) -> freealg.AutParams:
        alpha = rng.nonzero_fraction(num_bound=5, den_bound=3)
        degree = rng.randint(0, 3)
        coeffs = [rng.fraction(num_bound=5, den_bound=3) for _ in range(degree + 1)]
        return freealg.AutParams(alpha, Poly.from_coeffs(coeffs))

    def claim_automorphisms(self) -> ClaimResult:
        rng = stream_for(self.config.seed, 106)
        identity = freealg.identity_aut()
        for _ in range(50):
            params = self._random_aut(rng)
            fx, fy = params.images()
            if not freealg.check_endomorphism(fx, fy):
                return ClaimResult(6, "automorphism group law", False,
                                   f"substitution {params} breaks the relation")
            inverse = freealg.invert_aut(params)
            if (freealg.compose_aut(params, inverse) != identity
                    or freealg.compose_aut(inverse, params) != identity):
                return ClaimResult(6, "automorphism group law", False,
                                   f"inverse of {params} fails to compose to identity")
        for _ in range(20):
            outer = self._random_aut(rng)
            inner = self._random_aut(rng)
            composed = freealg.compose_aut(outer, inner)
            ox, oy = outer.images()
            ix, iy = inner.images()
            sub_x = freealg.substitute(ix, ox, oy)
            sub_y = freealg.substitute(iy, ox, oy)
            oracle = freealg.aut_params_from_images(
                freealg.normal_form(sub_x), freealg.normal_form(sub_y))
            if oracle != composed:
                return ClaimResult(6, "automorphism group law", False,
                                   "compose_aut disagrees with substitution")
        return ClaimResult(6, "automorphism group law", True,
                           "50 substitutions valid and invertible; 20 compositions match")

    def claim_dimension_bound(self) -> ClaimResult:
        top = min(6, self.config.max_n)
        attained = {n: False for n in range(2, top + 1)}
        total = 0
        for (n, p), rows in self.survey().items():
            for row in rows:
                total += 1
                if not row.report.within_bound:
                    return ClaimResult(
                        7, "image dimension bound", False,
                        f"partition {p} seed {row.sample.seed}: dim "
                        f"{row.report.image_dim} > bound {row.report.bound}")
                if p.is_full_block and row.report.image_dim == row.report.bound:
                    attained[n] = True
        missing = [n for n, hit in attained.items() if not hit]
        if missing:
            return ClaimResult(7, "image dimension bound", False,
                               f"bound never attained for n in {missing}")
        return ClaimResult(7, "image dimension bound", True,
                           f"{total} samples within bound; full block attains it "
                           f"for every n in 2..{top}")

    def claim_indecomposability(self) -> ClaimResult:
        cfg = self.config
        top = min(5, cfg.max_n)
        summaries = []
        for n in range(2, top + 1):
            for p in strata.partitions(n):
                hits = 0
                for i in range(50):
                    sample = strata.sample_point(p, cfg.seed + i, cfg.entry_bound)
                    rep = repmod.Representation(n, sample.X, sample.Y)
                    cls = repmod.indecomposability_class(rep)
                    if p.is_full_block == cls.absolutely_indecomposable:
                        hits += 1
                rate = Fraction(hits, 50)
                if rate < Fraction(9, 10):
                    expected = ("indecomposable" if p.is_full_block
                                else "decomposable")
                    return ClaimResult(
                        8, "generic indecomposability", False,
                        f"partition {p}: only {hits}/50 samples {expected}")
                summaries.append(f"{p}:{hits}/50")
        return ClaimResult(8, "generic indecomposability", True,
                           "; ".join(summaries) if summaries else "no strata in range")

    def claim_basicness(self) -> ClaimResult:
        total = 0
        for (n, p), rows in self.survey().items():
            for row in rows:
                total += 1
                if not row.report.basic:
                    return ClaimResult(
                        9, "basic image algebras", False,
                        f"partition {p} seed {row.sample.seed}: eigenvalue count "
                        f"{row.report.eigenvalue_count} != semisimple dim "
                        f"{row.report.semisimple_dim}")
        return ClaimResult(9, "basic image algebras", True,
                           f"{total} samples with eigenvalue count = semisimple dim")

    def claim_oracles(self) -> ClaimResult:
        for (n, p), rows in self.survey().items():
            for row in rows:
                if row.report.image_dim != row.word_dim:
                    return ClaimResult(
                        10, "oracle equivalence", False,
                        f"partition {p} seed {row.sample.seed}: closure dim "
                        f"{row.report.image_dim} != word span {row.word_dim}")
        for d in range(11):
            basis = freealg.pbw_basis(d)
            if len(basis) != (d + 1) * (d + 2) // 2:
                return ClaimResult(10, "oracle equivalence", False,
                                   f"PBW count wrong at degree {d}")
            if not all(freealg.word_is_pbw(w) for w in basis):
                return ClaimResult(10, "oracle equivalence", False,
                                   f"non-normal monomial listed at degree {d}")
        rng = stream_for(self.config.seed, 110)
        for _ in range(200):
            p = _random_nc_poly(rng)
            q = _random_nc_poly(rng)
            left = freealg.normal_form(p * q)
            right = freealg.normal_form(
                freealg.normal_form(p) * freealg.normal_form(q))
            if left != right:
                return ClaimResult(10, "oracle equivalence", False,
                                   "congruence failure in normal_form")
        for _ in range(200):
            a = freealg.normal_form(_random_nc_poly(rng))
            b = freealg.normal_form(_random_nc_poly(rng))
            c = freealg.normal_form(_random_nc_poly(rng))
            left = freealg.normal_form(freealg.normal_form(a * b) * c)
            right = freealg.normal_form(a * freealg.normal_form(b * c))
            if left != right:
                return ClaimResult(10, "oracle equivalence", False,
                                   "associativity failure on normal forms")
        return ClaimResult(10, "oracle equivalence", True,
                           "closure = word span on all samples; PBW counts and "
                           "rewriting congruence/associativity hold")

    def claim_kernel_ideals(self) -> ClaimResult:
        gen_y = freealg.NcPolynomial.from_term("y")
        for d in range(7):
            dim = freealg.quotient_dim([gen_y], d)
            if dim != d + 1:
                return ClaimResult(11, "kernel ideal shapes", False,
                                   f"quotient by (y) at degree {d} has dim {dim}")
        rng = stream_for(self.config.seed, 111)
        for _ in range(10):
            alpha = rng.fraction(num_bound=9, den_bound=4)
            gens = [gen_y,
                    freealg.NcPolynomial.from_term("x")
                    - freealg.NcPolynomial.from_term("", alpha)]
            if freealg.quotient_dim(gens, 4) != 1:
                return ClaimResult(11, "kernel ideal shapes", False,
                                   f"quotient by (y, x - {alpha}) not 1-dimensional")
            if not repmod.kernel_ideal_check(alpha, 4):
                return ClaimResult(11, "kernel ideal shapes", False,
                                   f"ideal (y, x - {alpha}) fails to annihilate S_{alpha}")
        return ClaimResult(11, "kernel ideal shapes", True,
                           "quotient by (y) has dim d+1; (y, x - a) gives the "
                           "kernel of S_a for 10 random a")

    CLAIMS = (
        (1, "component census", "claim_component_census"),
        (2, "equidimensionality", "claim_equidimensional"),
        (3, "fiber = centralizer", "claim_fiber_centralizer"),
        (4, "nilpotency of Y", "claim_nilpotency"),
        (5, "Ext vanishing", "claim_ext_vanishing"),
        (6, "automorphism group law", "claim_automorphisms"),
        (7, "image dimension bound", "claim_dimension_bound"),
        (8, "generic indecomposability", "claim_indecomposability"),
        (9, "basic image algebras", "claim_basicness"),
        (10, "oracle equivalence", "claim_oracles"),
        (11, "kernel ideal shapes", "claim_kernel_ideals"),
    )

    def run(self) -> list[ClaimResult]:
        """All claims in order; a claim that raises is reported as failed."""
        results = []
        for number, name, method in self.CLAIMS:
            try:
                results.append(getattr(self, method)())
            except (ValueError, ArithmeticError, InvariantViolation) as exc:
                results.append(ClaimResult(number, name, False, f"error: {exc}"))
        return results


def _random_nc_poly(rng: SplitMix64, max_terms: int = 4,
                    max_len: int = 3) -> freealg.NcPolynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(0, max_len)
        word = "".join("x" if rng.randint(0, 1) else "y" for _ in range(length))
        terms[word] = terms.get(word, Fraction(0)) + rng.fraction(5, 3)
    return freealg.NcPolynomial(terms)


def verify_suite(config: RunConfig) -> tuple[list[ClaimResult], int]:
    """Run every claim; exit code 0 iff all pass, 2 otherwise."""
    results = ClaimSuite(config).run()
    code = 0 if all(r.passed for r in results) else 2
    return results, code
