"""Exact dense linear algebra over the rationals.

Everything in this package runs on `fractions.Fraction`; no floating point
anywhere.  Matrices are immutable, row-major tuples of Fractions, so all
values are hashable and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class InvariantViolation(RuntimeError):
    """A computation contradicted a structural claim the toolkit verifies.

    Distinct from ValueError (bad input): this means the mathematics came
    out wrong, which callers may want to surface loudly (CLI exit code 2).
    """


def rat(value) -> Fraction:
    """Coerce an int, string or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise ValueError(f"cannot interpret {value!r} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse the "p/q" (or bare "p") wire format. Rejects decimals."""
    s = text.strip()
    if not _RAT_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(s)


def format_rat(q: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(q)


class Mat:
    """Immutable dense matrix of Fractions.

    `entries` is stored flat in row-major order.  Arithmetic is exact and
    always returns a new matrix.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Fraction]):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Mat":
        data = [[rat(v) for v in row] for row in rows]
        r = len(data)
        c = len(data[0]) if r else 0
        if any(len(row) != c for row in data):
            raise ValueError("ragged rows")
        return cls(r, c, [v for row in data for v in row])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        e = [Fraction(0)] * (n * n)
        for i in range(n):
            e[i * n + i] = Fraction(1)
        return cls(n, n, e)

    @classmethod
    def block_diag(cls, blocks: Sequence["Mat"]) -> "Mat":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        e = [Fraction(0)] * (n * m)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    e[(r0 + i) * m + (c0 + j)] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls(n, m, e)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "Mat") -> "Mat":
        self._require_same_shape(other)
        return Mat(self.rows, self.cols,
                   [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._require_same_shape(other)
        return Mat(self.rows, self.cols,
                   [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, Mat):
            return self._matmul(other)
        return self.scale(rat(other))

    def __rmul__(self, other):
        return self.scale(rat(other))

    def scale(self, c: Fraction) -> "Mat":
        return Mat(self.rows, self.cols, [c * a for a in self.entries])

    def _matmul(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [Fraction(0)] * (n * m)
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            orow = out
            base = i * m
            for t in range(k):
                av = arow[t]
                if av:
                    brow = b[t * m:(t + 1) * m]
                    for j in range(m):
                        bv = brow[j]
                        if bv:
                            orow[base + j] += av * bv
        return Mat(n, m, out)

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square() or k < 0:
            raise ValueError("matrix power needs a square base and k >= 0")
        result = Mat.identity(self.rows)
        for _ in range(k):
            result = result * self
        return result

    def transpose(self) -> "Mat":
        e = [Fraction(0)] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                e[j * self.rows + i] = self.entries[i * self.cols + j]
        return Mat(self.cols, self.rows, e)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product self (x) other."""
        ra, ca, rb, cb = self.rows, self.cols, other.rows, other.cols
        e = [Fraction(0)] * (ra * rb * ca * cb)
        width = ca * cb
        for i in range(ra):
            for j in range(ca):
                a = self[i, j]
                if not a:
                    continue
                for p in range(rb):
                    for q in range(cb):
                        e[(i * rb + p) * width + (j * cb + q)] = a * other[p, q]
        return Mat(ra * rb, ca * cb, e)

    def vec(self) -> tuple[Fraction, ...]:
        """Column-major vectorization (stack of columns)."""
        return tuple(self.entries[r * self.cols + c]
                     for c in range(self.cols) for r in range(self.rows))

    @classmethod
    def unvec(cls, values: Sequence[Fraction], rows: int, cols: int) -> "Mat":
        """Inverse of vec(): rebuild a rows x cols matrix from column stack."""
        if len(values) != rows * cols:
            raise ValueError("wrong length for unvec")
        e = [Fraction(0)] * (rows * cols)
        for c in range(cols):
            for r in range(rows):
                e[r * cols + c] = values[c * rows + r]
        return cls(rows, cols, e)

    def rank(self) -> int:
        reduced, pivots = rref(self.row_lists())
        return len(pivots)

    def inverse(self) -> "Mat":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [row + [Fraction(1 if i == j else 0) for j in range(n)]
               for i, row in enumerate(self.row_lists())]
        reduced, pivots = rref(aug)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Mat(n, n, [v for row in reduced for v in row[n:]])

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rat(self[i, j]) for j in range(self.cols)]
                        for i in range(self.rows)],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Mat":
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except (KeyError, TypeError):
            raise ValueError("matrix JSON needs 'rows', 'cols', 'entries'")
        if len(entries) != rows:
            raise ValueError("matrix JSON has wrong number of rows")
        return cls.from_rows(entries)

    def __str__(self) -> str:
        cells = [[format_rat(self[i, j]) for j in range(self.cols)]
                 for i in range(self.rows)]
        widths = [max((len(cells[i][j]) for i in range(self.rows)), default=1)
                  for j in range(self.cols)]
        lines = []
        for i in range(self.rows):
            line = " ".join(cells[i][j].rjust(widths[j]) for j in range(self.cols))
            lines.append("[ " + line + " ]")
        return "\n".join(lines) if lines else "[ ]"

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols})"

    def _require_same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form, in place.

    Pivot selection is deterministic: columns are scanned left to right and
    the first row with a nonzero entry becomes the pivot row.  Returns the
    (mutated) rows and the list of pivot columns.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != 1:
            inv = Fraction(1) / pv
            rows[r] = [v * inv for v in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


class EchelonSpan:
    """Incrementally maintained row space in reduced echelon form.

    Because the fully reduced echelon form of a row space is unique, the
    basis reported by `basis_rows` is canonical: it does not depend on the
    order vectors were added.
    """

    def __init__(self, width: int):
        self.width = width
        self._rows: dict[int, list[Fraction]] = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Fraction]) -> list[Fraction]:
        """Remainder of `vector` after reduction against the current span."""
        w = list(vector)
        for p in sorted(self._rows):
            coeff = w[p]
            if coeff:
                row = self._rows[p]
                w = [a - coeff * b for a, b in zip(w, row)]
        return w

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return not any(self.reduce(vector))

    def add(self, vector: Sequence[Fraction]) -> bool:
        """Add a vector; True iff it enlarged the span."""
        w = self.reduce(vector)
        pivot = next((i for i, v in enumerate(w) if v), None)
        if pivot is None:
            return False
        pv = w[pivot]
        if pv != 1:
            inv = Fraction(1) / pv
            w = [v * inv for v in w]
        for p, row in self._rows.items():
            if row[pivot]:
                f = row[pivot]
                self._rows[p] = [a - f * b for a, b in zip(row, w)]
        self._rows[pivot] = w
        return True

    def basis_rows(self) -> list[list[Fraction]]:
        return [list(self._rows[p]) for p in sorted(self._rows)]


@dataclass(frozen=True)
class AffineSolution:
    """Solution set of A x = b: `particular` plus the span of `kernel_basis`."""
    particular: tuple[Fraction, ...]
    kernel_basis: tuple[tuple[Fraction, ...], ...]


def kernel_basis(A: Mat) -> list[tuple[Fraction, ...]]:
    """Basis of the nullspace of A, derived from the RREF.

    One basis vector per free column, ordered by ascending free column
    index, with a 1 in the free coordinate.
    """
    reduced, pivots = rref(A.row_lists())
    return _kernel_from_rref(reduced, pivots, A.cols)


def _kernel_from_rref(reduced, pivots, ncols) -> list[tuple[Fraction, ...]]:
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced[row_idx][f]
        basis.append(tuple(v))
    return basis


def solve_affine(A: Mat, b: Sequence[Fraction]) -> AffineSolution | None:
    """Solve A x = b exactly; None when the system is inconsistent.

    The full solution set is particular + span(kernel_basis).
    """
    if len(b) != A.rows:
        raise ValueError(f"b has length {len(b)}, expected {A.rows}")
    k = A.cols
    aug = [row + [rat(bv)] for row, bv in zip(A.row_lists(), b)]
    if not aug:  # zero-row system: any x works
        return AffineSolution(tuple([Fraction(0)] * k),
                              tuple(_kernel_from_rref([], [], k)))
    reduced, pivots = rref(aug)
    if pivots and pivots[-1] == k:
        return None
    particular = [Fraction(0)] * k
    for row_idx, pc in enumerate(pivots):
        particular[pc] = reduced[row_idx][k]
    a_part = [row[:k] for row in reduced]
    kernel = _kernel_from_rref(a_part, pivots, k)
    return AffineSolution(tuple(particular), tuple(kernel))


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over the rationals, coefficients low to high.

    The zero polynomial stores an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "Poly":
        cs = [rat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Poly":
        c = rat(coeff)
        if not c:
            return cls.zero()
        return cls(tuple([Fraction(0)] * degree + [c]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return Poly.from_coeffs(x + y for x, y in zip(a, b))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return Poly.from_coeffs(out)
        return self.scale(rat(other))

    def __rmul__(self, other):
        return self.scale(rat(other))

    def scale(self, c: Fraction) -> "Poly":
        if not c:
            return Poly.zero()
        return Poly(tuple(c * a for a in self.coeffs))

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, M: Mat) -> Mat:
        """Horner evaluation at a square matrix (constant term times I)."""
        if not M.is_square():
            raise ValueError("polynomial evaluation needs a square matrix")
        acc = Mat.zeros(M.rows, M.rows)
        for c in reversed(self.coeffs):
            acc = acc * M + Mat.identity(M.rows).scale(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly.from_coeffs(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return self if lead == 1 else self.scale(Fraction(1) / lead)

    def scale_arg(self, alpha: Fraction) -> "Poly":
        """p(alpha * t) as a polynomial in t."""
        a = rat(alpha)
        return Poly.from_coeffs(c * a ** i for i, c in enumerate(self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        qlen = max(0, len(rem) - len(den) + 1)
        quo = [Fraction(0)] * qlen
        inv_lead = Fraction(1) / den[-1]
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(den) - 1] * inv_lead
            if c:
                quo[i] = c
                for j, d in enumerate(den):
                    rem[i + j] -= c * d
        return Poly.from_coeffs(quo), Poly.from_coeffs(rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def expr_str(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                body = format_rat(abs(c))
            else:
                pw = var if i == 1 else f"{var}^{i}"
                body = pw if abs(c) == 1 else f"{format_rat(abs(c))}*{pw}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def char_poly(M: Mat) -> Poly:
    """Characteristic polynomial det(t I - M), monic of degree n.

    Uses the Faddeev-LeVerrier recurrence: exact over the rationals with
    no pivoting involved.
    """
    if not M.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = M.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    B = Mat.identity(n)
    for k in range(1, n + 1):
        MB = M * B
        c = -MB.trace() / k
        coeffs[n - k] = c
        B = MB + Mat.identity(n).scale(c)
    return Poly(tuple(coeffs))


def is_nilpotent(M: Mat) -> bool:
    """True iff M^n = 0, i.e. the characteristic polynomial is t^n."""
    if not M.is_square():
        raise ValueError("nilpotency check needs a square matrix")
    p = char_poly(M)
    return all(not c for c in p.coeffs[:-1])


def distinct_eigenvalue_count(M: Mat) -> int:
    """Number of distinct eigenvalues over the algebraic closure.

    Equals the degree of the squarefree part p / gcd(p, p') of the
    characteristic polynomial; no root-finding needed.
    """
    p = char_poly(M)
    if p.degree <= 0:
        return 0
    g = poly_gcd(p, p.derivative())
    return p.degree - g.degree
