"""Representation-level analysis: endomorphism rings, radicals, Ext groups.

A representation is a pair of square matrices (X, Y) with
X Y - Y X - Y^2 = 0.  The one-dimensional simples act by (alpha, 0); every
other structural question here reduces to exact nullspace and trace-form
computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import EchelonSpan, Mat, kernel_basis, rat
from . import freealg


def check_relation(X: Mat, Y: Mat) -> bool:
    """True iff X Y - Y X - Y^2 is exactly the zero matrix."""
    if not X.is_square() or X.shape != Y.shape:
        raise ValueError("relation check needs square matrices of equal size")
    return (X * Y - Y * X - Y * Y).is_zero()


@dataclass(frozen=True)
class Representation:
    """Checked pair of matrices satisfying the defining relation."""

    n: int
    X: Mat
    Y: Mat

    def __post_init__(self):
        if self.X.shape != (self.n, self.n) or self.Y.shape != (self.n, self.n):
            raise ValueError("matrix sizes disagree with the stated dimension")
        if self.n > 0 and not check_relation(self.X, self.Y):
            raise ValueError("matrices do not satisfy the defining relation")

    def to_json(self) -> dict:
        return {"n": self.n, "X": self.X.to_json(), "Y": self.Y.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "Representation":
        try:
            n = obj["n"]
            X = Mat.from_json(obj["X"])
            Y = Mat.from_json(obj["Y"])
        except (KeyError, TypeError):
            raise ValueError("representation JSON needs 'n', 'X', 'Y'")
        return cls(n, X, Y)


def simple_module(alpha) -> Representation:
    """The one-dimensional module where x acts by alpha and y by zero."""
    a = rat(alpha)
    return Representation(1, Mat(1, 1, (a,)), Mat(1, 1, (Fraction(0),)))


def zero_module() -> Representation:
    return Representation(0, Mat.zeros(0, 0), Mat.zeros(0, 0))


def direct_sum(rep1: Representation, rep2: Representation) -> Representation:
    return Representation(rep1.n + rep2.n,
                          Mat.block_diag([rep1.X, rep2.X]),
                          Mat.block_diag([rep1.Y, rep2.Y]))


# -- endomorphism algebras -----------------------------------------------------


@dataclass(frozen=True)
class EndoAlgebra:
    """Commutant of (X, Y) with its radical split off.

    basis is echelon-reduced with the identity placed first; semisimple_dim
    is len(basis) - len(radical_basis).
    """

    ambient_n: int
    basis: tuple[Mat, ...]
    radical_basis: tuple[Mat, ...]
    semisimple_dim: int


def _commutant_basis(X: Mat, Y: Mat) -> list[Mat]:
    """Solve Z X = X Z, Z Y = Y Z by stacking the two commutator operators."""
    n = X.rows
    eye = Mat.identity(n)
    op_x = X.transpose().kron(eye) - eye.kron(X)
    op_y = Y.transpose().kron(eye) - eye.kron(Y)
    stacked = Mat(2 * n * n, n * n, op_x.entries + op_y.entries)
    return [Mat.unvec(v, n, n) for v in kernel_basis(stacked)]


def _identity_first(mats: list[Mat], n: int) -> list[Mat]:
    """Reorder a spanning set so the basis starts with the identity matrix."""
    span = EchelonSpan(n * n)
    ordered = [Mat.identity(n)]
    span.add(ordered[0].vec())
    for m in mats:
        if span.add(m.vec()):
            ordered.append(m)
    return ordered


def endomorphism_algebra(rep: Representation) -> EndoAlgebra:
    n = rep.n
    commutant = _commutant_basis(rep.X, rep.Y)
    basis = _identity_first(commutant, n)
    radical = algebra_radical(basis)
    return EndoAlgebra(n, tuple(basis), tuple(radical),
                       len(basis) - len(radical))


def algebra_radical(basis: list[Mat]) -> list[Mat]:
    """Radical of a unital matrix algebra via the trace bilinear form.

    In characteristic zero the radical is {a : trace(a b) = 0 for all b in
    the algebra}, so one Gram-matrix nullspace suffices.  The input must be
    closed under multiplication and contain the identity; both are checked.
    """
    if not basis:
        return []
    n = basis[0].rows
    span = EchelonSpan(n * n)
    for m in basis:
        span.add(m.vec())
    if not span.contains(Mat.identity(n).vec()):
        raise ValueError("algebra basis does not span a unital algebra")
    for a in basis:
        for b in basis:
            if not span.contains((a * b).vec()):
                raise ValueError("algebra basis is not closed under products")
    k = len(basis)
    gram = Mat(k, k, [(a * b).trace() for a in basis for b in basis])
    radical_span = EchelonSpan(n * n)
    for coeffs in kernel_basis(gram):
        elem = Mat.zeros(n, n)
        for c, b in zip(coeffs, basis):
            if c:
                elem = elem + b.scale(c)
        radical_span.add(elem.vec())
    return [Mat.unvec(row, n, n) for row in radical_span.basis_rows()]


@dataclass(frozen=True)
class Classification:
    """Indecomposability verdict over the algebraic closure."""

    absolutely_indecomposable: bool
    semisimple_dim: int

    @property
    def tag(self) -> str:
        return ("AbsolutelyIndecomposable" if self.absolutely_indecomposable
                else "NotAbsolutelyIndecomposable")

    def to_json(self) -> dict:
        return {"class": self.tag, "semisimple_dim": self.semisimple_dim}


def indecomposability_class(rep: Representation) -> Classification:
    """Absolutely indecomposable iff End(rep) is local with residue field k.

    Detected by semisimple dimension 1 of the endomorphism algebra; larger
    values mean the module splits, possibly only after field extension.
    """
    endo = endomorphism_algebra(rep)
    return Classification(endo.semisimple_dim == 1, endo.semisimple_dim)


# -- extensions ------------------------------------------------------------------


@dataclass(frozen=True)
class ExtResult:
    """Ext^1 data: dimension plus a basis of the cocycle space."""

    dim: int
    cocycle_basis: tuple[tuple[Mat, Mat], ...]


def ext1(M: Representation, N: Representation) -> ExtResult:
    """Ext^1(M, N) via block-triangular extensions.

    An extension puts (theta_X, theta_Y) in the upper-right block; the
    relation for the big pair is linear in the thetas, so cocycles are a
    nullspace.  Coboundaries come from block conjugation by t: M -> N and
    the Ext dimension is the difference.
    """
    m, n = M.n, N.n
    size = n * m
    eye_m = Mat.identity(m)
    eye_n = Mat.identity(n)
    # vec is column-major: vec(A t B) = (B^T kron A) vec(t) for t an n x m block
    coeff_theta_x = M.Y.transpose().kron(eye_n) - eye_m.kron(N.Y)
    coeff_theta_y = (eye_m.kron(N.X) - M.X.transpose().kron(eye_n)
                     - eye_m.kron(N.Y) - M.Y.transpose().kron(eye_n))
    rows = []
    for i in range(size):
        row = [coeff_theta_x[i, j] for j in range(size)]
        row += [coeff_theta_y[i, j] for j in range(size)]
        rows.append(row)
    cocycles = kernel_basis(Mat(size, 2 * size, [v for row in rows for v in row]))

    coboundaries = EchelonSpan(2 * size)
    cob_dim = 0
    for j in range(size):
        t = Mat.unvec([Fraction(1 if i == j else 0) for i in range(size)], n, m)
        bx = t * M.X - N.X * t
        by = t * M.Y - N.Y * t
        if coboundaries.add(bx.vec() + by.vec()):
            cob_dim += 1
    basis_pairs = tuple(
        (Mat.unvec(v[:size], n, m), Mat.unvec(v[size:], n, m)) for v in cocycles)
    return ExtResult(len(cocycles) - cob_dim, basis_pairs)


def extension_is_cocycle(M: Representation, N: Representation,
                         theta_x: Mat, theta_y: Mat) -> bool:
    """Direct check that a block pair satisfies the extension equation."""
    lhs = (N.X * theta_y + theta_x * M.Y - N.Y * theta_x - theta_y * M.X
           - N.Y * theta_y - theta_y * M.Y)
    return lhs.is_zero()


# -- kernel ideals of the simples -------------------------------------------------


def kernel_ideal_check(alpha, max_degree: int) -> bool:
    """Does the ideal (y, x - alpha) annihilate S_alpha with quotient k?

    Checks every truncated spanning element against the one-dimensional
    action and that the truncated quotient has dimension exactly 1.
    """
    if max_degree < 1:
        raise ValueError("degree must be >= 1")
    a = rat(alpha)
    gen_y = freealg.NcPolynomial.from_term("y")
    gen_x_minus = (freealg.NcPolynomial.from_term("x")
                   - freealg.NcPolynomial.from_term("", a))
    generators = [gen_y, gen_x_minus]
    simple = simple_module(a)
    for element in freealg.ideal_truncation_span(generators, max_degree):
        if not freealg.evaluate(element, simple.X, simple.Y).is_zero():
            return False
    return freealg.quotient_dim(generators, max_degree) == 1
