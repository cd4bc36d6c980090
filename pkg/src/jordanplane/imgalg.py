"""Image algebras of representations: dimensions, quiver data, presentations.

The image algebra of (X, Y) is the unital subalgebra of n x n matrices
generated by X and Y.  Its dimension obeys the two-generator analogue of
the commuting-matrices bound, it is basic (semisimple part a product of
copies of the field), and in the local case its quiver has one vertex and
loop count dim rad / rad^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (EchelonSpan, Mat, distinct_eigenvalue_count, is_nilpotent,
                     kernel_basis)
from .repmod import Representation, algebra_radical
from . import freealg


@dataclass(frozen=True)
class MatrixAlgebra:
    """Echelon-reduced basis of a unital matrix algebra plus radical data."""

    ambient_n: int
    basis: tuple[Mat, ...]
    contains_identity: bool
    radical_basis: tuple[Mat, ...]
    rad2_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def semisimple_dim(self) -> int:
        return len(self.basis) - len(self.radical_basis)


def generated_subalgebra(X: Mat, Y: Mat) -> MatrixAlgebra:
    """Smallest unital subalgebra containing X and Y.

    Fixpoint closure: seed with {I, X, Y}, keep multiplying the newly found
    basis elements on the right by the two generators, stop when the span
    stabilizes.  Right products alone suffice since every word grows one
    letter at a time from the empty word.
    """
    if not X.is_square() or X.shape != Y.shape:
        raise ValueError("generators must be square matrices of equal size")
    n = X.rows
    span = EchelonSpan(n * n)
    frontier: list[Mat] = []
    for m in (Mat.identity(n), X, Y):
        if span.add(m.vec()):
            frontier.append(m)
    while frontier:
        fresh = []
        for m in frontier:
            for g in (X, Y):
                candidate = m * g
                if span.add(candidate.vec()):
                    fresh.append(candidate)
        frontier = fresh
    basis = [Mat.unvec(row, n, n) for row in span.basis_rows()]
    radical = algebra_radical(basis)
    rad2 = EchelonSpan(n * n)
    for a in radical:
        for b in radical:
            rad2.add((a * b).vec())
    return MatrixAlgebra(n, tuple(basis), True, tuple(radical), rad2.dim)


def word_span_dim(X: Mat, Y: Mat, maxlen: int) -> int:
    """Dimension of the span of all words in {X, Y} of length <= maxlen.

    Breadth-first by word length with span pruning: a word whose matrix is
    linearly dependent on shorter-or-equal words contributes nothing new
    through its extensions either, so it need not be expanded.
    """
    if maxlen < 0:
        raise ValueError("maxlen must be >= 0")
    if not X.is_square() or X.shape != Y.shape:
        raise ValueError("word span needs square matrices of equal size")
    n = X.rows
    span = EchelonSpan(n * n)
    layer = []
    if span.add(Mat.identity(n).vec()):
        layer.append(Mat.identity(n))
    for _ in range(maxlen):
        nxt = []
        for m in layer:
            for g in (X, Y):
                candidate = m * g
                if span.add(candidate.vec()):
                    nxt.append(candidate)
        if not nxt:
            break
        layer = nxt
    return span.dim


def dimension_bound(n: int) -> int:
    """Largest possible image-algebra dimension in ambient size n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * (n + 2) // 4 if n % 2 == 0 else (n + 1) ** 2 // 4


@dataclass(frozen=True)
class ImageReport:
    """Image-algebra invariants of one representation."""

    n: int
    image_dim: int
    bound: int
    within_bound: bool
    eigenvalue_count: int      # distinct eigenvalues of X over the closure
    semisimple_dim: int
    basic: bool                # eigenvalue_count == semisimple_dim
    loops: int | None          # dim rad/rad^2 when the algebra is local

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "image_dim": self.image_dim,
            "bound": self.bound,
            "within_bound": self.within_bound,
            "eigenvalue_count": self.eigenvalue_count,
            "semisimple_dim": self.semisimple_dim,
            "basic": self.basic,
            "loops": self.loops,
        }


def image_report(rep: Representation) -> ImageReport:
    algebra = generated_subalgebra(rep.X, rep.Y)
    dim = algebra.dim
    bound = dimension_bound(rep.n)
    r1 = distinct_eigenvalue_count(rep.X)
    r2 = algebra.semisimple_dim
    loops = None
    if r2 == 1:
        loops = len(algebra.radical_basis) - algebra.rad2_dim
    return ImageReport(rep.n, dim, bound, dim <= bound, r1, r2, r1 == r2, loops)


# -- presentation extraction -----------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    """Minimal defining relations of a local image algebra, degree by degree.

    Generators are u = X - alpha*I and v = Y; relations at each degree are
    reduced modulo one- and two-sided multiples of the lower-degree ones.
    """

    num_generators: int
    relations_by_degree: dict[int, tuple[freealg.NcPolynomial, ...]]
    degree_bound: int
    alpha: Fraction

    def relation_strings(self) -> dict[int, list[str]]:
        return {deg: [r.to_string(names=("u", "v")) for r in rels]
                for deg, rels in sorted(self.relations_by_degree.items())}

    def all_relations(self) -> list[freealg.NcPolynomial]:
        out = []
        for deg in sorted(self.relations_by_degree):
            out.extend(self.relations_by_degree[deg])
        return out

    def to_json(self) -> dict:
        return {
            "generators": ["u", "v"],
            "degree_bound": self.degree_bound,
            "relations": {str(d): rels
                          for d, rels in self.relation_strings().items()},
        }


def _words_up_to(length: int) -> list[str]:
    """All words over {x, y} of length <= length, shortest first, y before x."""
    words = [""]
    layer = [""]
    for _ in range(length):
        layer = [w + ch for w in layer for ch in ("y", "x")]
        words.extend(layer)
    return words


def local_eigenvalue(X: Mat) -> Fraction:
    """The unique eigenvalue of X when X - (trace/n) I is nilpotent."""
    n = X.rows
    alpha = X.trace() / n
    if not is_nilpotent(X - Mat.identity(n).scale(alpha)):
        raise ValueError("X does not have a single rational eigenvalue")
    return alpha


def extract_presentation(rep: Representation, max_degree: int) -> Presentation:
    """Defining relations of the image algebra in u = X - alpha I, v = Y.

    For each degree e the kernel of evaluation on words of length <= e is
    computed exactly; relations already implied by lower degrees (their
    one- and two-sided word multiples) are quotiented away and whatever is
    left is reported as new at degree e.
    """
    if max_degree < 2:
        raise ValueError("degree bound must be >= 2")
    algebra = generated_subalgebra(rep.X, rep.Y)
    if algebra.semisimple_dim != 1:
        raise ValueError("image algebra is not local; no single-vertex presentation")
    alpha = local_eigenvalue(rep.X)
    n = rep.n
    U = rep.X - Mat.identity(n).scale(alpha)
    V = rep.Y

    relations: list[freealg.NcPolynomial] = []
    by_degree: dict[int, tuple[freealg.NcPolynomial, ...]] = {}
    for e in range(1, max_degree + 1):
        words = _words_up_to(e)
        index = {w: i for i, w in enumerate(words)}
        columns = []
        for w in words:
            m = Mat.identity(n)
            for ch in w:
                m = m * (U if ch == "x" else V)
            columns.append(m.vec())
        ev_matrix = Mat(n * n, len(words),
                        [columns[j][i] for i in range(n * n)
                         for j in range(len(words))])
        kernel = kernel_basis(ev_matrix)

        consequences = EchelonSpan(len(words))
        for r in relations:
            room = e - r.degree
            for w1 in _words_up_to(room):
                for w2 in _words_up_to(room - len(w1)):
                    shifted = (freealg.NcPolynomial.from_term(w1) * r
                               * freealg.NcPolynomial.from_term(w2))
                    row = [Fraction(0)] * len(words)
                    for word, coeff in shifted.terms.items():
                        row[index[word]] = coeff
                    consequences.add(row)
        new_here = []
        for vec in kernel:
            if consequences.add(vec):
                poly = freealg.NcPolynomial(
                    {words[i]: c for i, c in enumerate(vec) if c})
                new_here.append(poly)
        if new_here:
            by_degree[e] = tuple(new_here)
            relations.extend(new_here)
    return Presentation(2, by_degree, max_degree, alpha)


def free_truncated_quotient_dim(relations: list[freealg.NcPolynomial],
                                max_degree: int) -> int:
    """Dimension of the degree-truncated quotient of the free algebra on u, v.

    Words of length <= max_degree modulo the span of all word multiples of
    the given relations that fit inside the truncation.  Used to cross-check
    extracted presentations against the image-algebra dimension.
    """
    words = _words_up_to(max_degree)
    index = {w: i for i, w in enumerate(words)}
    span = EchelonSpan(len(words))
    for r in relations:
        room = max_degree - r.degree
        if room < 0:
            continue
        for w1 in _words_up_to(room):
            for w2 in _words_up_to(room - len(w1)):
                shifted = (freealg.NcPolynomial.from_term(w1) * r
                           * freealg.NcPolynomial.from_term(w2))
                row = [Fraction(0)] * len(words)
                for word, coeff in shifted.terms.items():
                    row[index[word]] = coeff
                span.add(row)
    return len(words) - span.dim
