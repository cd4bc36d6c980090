"""Partition-indexed strata of relation-satisfying matrix pairs.

A stratum is indexed by a partition P of n: it consists of the pairs
(X, Y) with Y conjugate to the nilpotent Jordan matrix J_P and
X Y - Y X = Y^2.  With Y = J_P fixed, the X's form an affine subspace (the
fiber); its homogeneous part is the centralizer of J_P.  Dimension
bookkeeping: orbit of J_P under conjugation plus fiber.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import InvariantViolation, Mat, solve_affine
from .prng import SplitMix64, stream_for


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; indexes a nilpotent Jordan form."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("partition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def is_full_block(self) -> bool:
        return len(self.parts) == 1

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma form, e.g. "3,2,1"."""
        try:
            parts = tuple(int(piece) for piece in text.split(","))
        except ValueError:
            raise ValueError(f"bad partition text {text!r}")
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order ((n) first)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[Partition] = []

    def descend(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            descend(remaining - part, part, prefix + (part,))

    descend(n, n, ())
    return out


def centralizer_dim(p: Partition) -> int:
    """Closed form sum of min(n_i, n_j) over all ordered part pairs."""
    return sum(min(a, b) for a in p.parts for b in p.parts)


def jordan_nilpotent(p: Partition) -> Mat:
    """Block-diagonal nilpotent Jordan matrix with block sizes parts(p)."""
    blocks = []
    for size in p.parts:
        e = [Fraction(0)] * (size * size)
        for i in range(size - 1):
            e[i * size + i + 1] = Fraction(1)
        blocks.append(Mat(size, size, e))
    return Mat.block_diag(blocks)


def relation_system(Y: Mat) -> tuple[Mat, tuple[Fraction, ...]]:
    """Linear system on vec(X) expressing X Y - Y X = Y^2.

    The commutator operator is materialized once as the n^2 x n^2 matrix
    (Y^T kron I) - (I kron Y) acting on the column-major vectorization.
    """
    if not Y.is_square():
        raise ValueError("Y must be square")
    n = Y.rows
    eye = Mat.identity(n)
    operator = Y.transpose().kron(eye) - eye.kron(Y)
    rhs = (Y * Y).vec()
    return operator, rhs


@dataclass(frozen=True)
class FiberSolution:
    """Affine description of all X with X J - J X = J^2 for a fixed J."""

    x0: Mat
    kernel: tuple[Mat, ...]


@lru_cache(maxsize=None)
def solve_fiber(p: Partition) -> FiberSolution:
    """Particular X plus a basis of the centralizer of J_p.

    Inconsistency would falsify nonemptiness of the stratum, so it raises
    InvariantViolation rather than returning a sentinel.
    """
    n = p.n
    operator, rhs = relation_system(jordan_nilpotent(p))
    solution = solve_affine(operator, rhs)
    if solution is None:
        raise InvariantViolation(
            f"fiber system inconsistent for partition {p}; stratum would be empty")
    x0 = Mat.unvec(solution.particular, n, n)
    kernel = tuple(Mat.unvec(v, n, n) for v in solution.kernel_basis)
    return FiberSolution(x0, kernel)


@dataclass(frozen=True)
class Stratum:
    """Dimension record for one partition: orbit + fiber accounting."""

    partition: Partition
    orbit_dim: int
    fiber_dim: int
    total_dim: int

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "orbit_dim": self.orbit_dim,
            "fiber_dim": self.fiber_dim,
            "total_dim": self.total_dim,
        }


def strata_table(n: int) -> list[Stratum]:
    """One stratum per partition of n; fiber dimension from the exact solver."""
    table = []
    for p in partitions(n):
        fiber = len(solve_fiber(p).kernel)
        orbit = n * n - fiber
        table.append(Stratum(p, orbit, fiber, orbit + fiber))
    return table


@dataclass(frozen=True)
class SamplePoint:
    """Seeded point of a stratum; the pair satisfies the relation exactly."""

    partition: Partition
    seed: int
    X: Mat
    Y: Mat

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "seed": self.seed,
            "n": self.partition.n,
            "X": self.X.to_json(),
            "Y": self.Y.to_json(),
        }


def _random_invertible(rng: SplitMix64, n: int, entry_bound: int) -> Mat:
    bound = entry_bound
    attempts = 0
    while True:
        g = Mat(n, n, [Fraction(rng.randint(-bound, bound)) for _ in range(n * n)])
        if g.rank() == n:
            return g
        attempts += 1
        if attempts % 64 == 0:
            bound += 1  # widen the box after a long singular streak


def sample_point(p: Partition, seed: int, entry_bound: int = 3) -> SamplePoint:
    """Deterministic stratum point: conjugate a random fiber element.

    Draw order is fixed (conjugator entries row-major, then one rational
    coefficient per centralizer basis element), so the output depends only
    on (p, seed, entry_bound).
    """
    if entry_bound < 1:
        raise ValueError("entry_bound must be >= 1")
    fiber = solve_fiber(p)
    rng = stream_for(seed, p.n, len(p.parts), *p.parts)
    g = _random_invertible(rng, p.n, entry_bound)
    g_inv = g.inverse()
    x = fiber.x0
    for basis_mat in fiber.kernel:
        x = x + basis_mat.scale(rng.fraction(num_bound=9, den_bound=3))
    X = g * x * g_inv
    Y = g * jordan_nilpotent(p) * g_inv
    if not (X * Y - Y * X - Y * Y).is_zero():
        raise InvariantViolation("sampled pair violates the defining relation")
    return SamplePoint(p, seed, X, Y)


def blockwise_toeplitz(m: Mat, p: Partition) -> bool:
    """True when every partition block of m is constant along its diagonals.

    Reported for observed structure only; centralizer basis elements always
    have this banded Toeplitz shape, particular solutions need not.
    """
    offsets = []
    start = 0
    for size in p.parts:
        offsets.append((start, size))
        start += size
    for r0, rs in offsets:
        for c0, cs in offsets:
            for i in range(rs - 1):
                for j in range(cs - 1):
                    if m[r0 + i, c0 + j] != m[r0 + i + 1, c0 + j + 1]:
                        return False
    return True
