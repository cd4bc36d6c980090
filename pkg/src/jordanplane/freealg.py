"""Noncommutative polynomials in x, y and the rewriting system xy -> yx + y^2.

Words are plain strings over the alphabet {'x', 'y'}; '' is the unit.  A
word is in PBW form when no x precedes a y, i.e. it equals y^a x^b, and the
rewriting rule drives every polynomial to a unique combination of such
monomials.  Rewriting fires at the leftmost inversion; it terminates
because each step either removes an x from the word or keeps the number of
x's and lowers the count of (x, y) inversions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import EchelonSpan, Mat, Poly, format_rat, rat

Word = str

ALPHABET = ("x", "y")


def word_is_pbw(word: Word) -> bool:
    return "xy" not in word


def pbw_word(y_power: int, x_power: int) -> Word:
    return "y" * y_power + "x" * x_power


def term_key(word: Word) -> tuple:
    """Deterministic term order: degree first, then lexicographic with y < x."""
    return (len(word), tuple(0 if ch == "y" else 1 for ch in word))


def pbw_basis(max_degree: int) -> list[Word]:
    """All PBW monomials y^a x^b with a + b <= max_degree, in term order."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    words = [pbw_word(a, d - a) for d in range(max_degree + 1) for a in range(d, -1, -1)]
    words.sort(key=term_key)
    return words


class NcPolynomial:
    """Finite rational combination of words; zero coefficients never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Word, Fraction] | None = None):
        clean = {w: c for w, c in (terms or {}).items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NcPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "NcPolynomial":
        return cls({})

    @classmethod
    def one(cls) -> "NcPolynomial":
        return cls({"": Fraction(1)})

    @classmethod
    def from_term(cls, word: Word, coeff=1) -> "NcPolynomial":
        return cls({word: rat(coeff)})

    @classmethod
    def gens(cls) -> tuple["NcPolynomial", "NcPolynomial"]:
        return cls.from_term("x"), cls.from_term("y")

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Maximum word length; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        """Terms in descending term order (leading term first)."""
        return sorted(self.terms.items(), key=lambda t: term_key(t[0]), reverse=True)

    def coefficient(self, word: Word) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, NcPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "NcPolynomial") -> "NcPolynomial":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return NcPolynomial(out)

    def __sub__(self, other: "NcPolynomial") -> "NcPolynomial":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) - c
        return NcPolynomial(out)

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPolynomial):
            out: dict[Word, Fraction] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, Fraction(0)) + c1 * c2
            return NcPolynomial(out)
        return self.scale(rat(other))

    def __rmul__(self, other):
        return self.scale(rat(other))

    def scale(self, c: Fraction) -> "NcPolynomial":
        if not c:
            return NcPolynomial.zero()
        return NcPolynomial({w: c * v for w, v in self.terms.items()})

    # -- rendering -----------------------------------------------------------

    def to_string(self, names: tuple[str, str] = ("x", "y")) -> str:
        if self.is_zero():
            return "0"
        rename = {"x": names[0], "y": names[1]}
        pieces = []
        for word, coeff in self.sorted_terms():
            mono = _render_word(word, rename)
            mag = abs(coeff)
            if not word:
                body = format_rat(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rat(mag)}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"NcPolynomial({self.to_string()})"


def _render_word(word: Word, rename: dict[str, str]) -> str:
    runs = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = rename[word[i]]
        runs.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(runs)


# -- parsing ------------------------------------------------------------------


class ExprSyntaxError(ValueError):
    """Raised on malformed expression input; carries the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN_KINDS = {"+", "-", "*", "^", "/", "(", ")"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch in ("x", "y"):
            tokens.append(("name", ch, i))
            i += 1
        elif ch in _TOKEN_KINDS:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent for the expression grammar.

    expr   := '-'? term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := primary ('^' nat)*
    primary:= rational | 'x' | 'y' | '(' expr ')'
    rational := int ('/' nat)?
    """

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def advance(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> NcPolynomial:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected trailing {tok[1]!r}", tok[2])
        return result

    def expr(self) -> NcPolynomial:
        negate = False
        if self.peek()[0] == "-":
            self.advance()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> NcPolynomial:
        acc = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.advance()
                acc = acc * self.factor()
            elif kind in ("int", "name", "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> NcPolynomial:
        acc = self.primary()
        while self.peek()[0] == "^":
            self.advance()
            tok = self.peek()
            if tok[0] == "-":
                raise ExprSyntaxError("negative exponent", tok[2])
            exp_tok = self.expect("int")
            power = int(exp_tok[1])
            result = NcPolynomial.one()
            for _ in range(power):
                result = result * acc
            acc = result
        return acc

    def primary(self) -> NcPolynomial:
        tok = self.advance()
        kind, value, pos = tok
        if kind == "int":
            num = int(value)
            if self.peek()[0] == "/":
                self.advance()
                den_tok = self.expect("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ExprSyntaxError("zero denominator", den_tok[2])
                return NcPolynomial.from_term("", Fraction(num, den))
            return NcPolynomial.from_term("", Fraction(num))
        if kind == "name":
            return NcPolynomial.from_term(value)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ExprSyntaxError(f"unexpected {value!r}", pos)


def parse_expr(text: str) -> NcPolynomial:
    """Parse an expression in x, y; juxtaposition and '*' both multiply."""
    return _Parser(text).parse()


# -- normal form and evaluation -----------------------------------------------


def normal_form(p: NcPolynomial) -> NcPolynomial:
    """Unique PBW normal form of p modulo the two-sided ideal of xy - yx - y^2.

    Every occurrence of the factor xy is replaced by yx + yy until all
    words have the shape y^a x^b.  Like terms merge as rewriting proceeds,
    so intermediate blowup stays bounded by the monomial count at each
    degree (the rule is homogeneous).
    """
    out: dict[Word, Fraction] = {}
    work = dict(p.terms)
    while work:
        word, coeff = work.popitem()
        if not coeff:
            continue
        i = word.find("xy")
        if i < 0:
            val = out.get(word, Fraction(0)) + coeff
            if val:
                out[word] = val
            elif word in out:
                del out[word]
            continue
        swapped = word[:i] + "yx" + word[i + 2:]
        doubled = word[:i] + "yy" + word[i + 2:]
        work[swapped] = work.get(swapped, Fraction(0)) + coeff
        work[doubled] = work.get(doubled, Fraction(0)) + coeff
    return NcPolynomial(out)


def evaluate(p: NcPolynomial, X: Mat, Y: Mat) -> Mat:
    """Substitute matrices for x and y; the empty word contributes coeff * I."""
    if not X.is_square() or X.shape != Y.shape:
        raise ValueError("evaluation needs square matrices of equal size")
    n = X.rows
    acc = Mat.zeros(n, n)
    for word, coeff in p.terms.items():
        m = Mat.identity(n)
        for ch in word:
            m = m * (X if ch == "x" else Y)
        acc = acc + m.scale(coeff)
    return acc


def substitute(p: NcPolynomial, image_x: NcPolynomial,
               image_y: NcPolynomial) -> NcPolynomial:
    """Apply the substitution homomorphism x -> image_x, y -> image_y."""
    acc = NcPolynomial.zero()
    for word, coeff in p.terms.items():
        m = NcPolynomial.one()
        for ch in word:
            m = m * (image_x if ch == "x" else image_y)
        acc = acc + m.scale(coeff)
    return acc


def check_endomorphism(image_x: NcPolynomial, image_y: NcPolynomial) -> bool:
    """True iff x -> image_x, y -> image_y sends the defining relation to zero."""
    rel = image_x * image_y - image_y * image_x - image_y * image_y
    return normal_form(rel).is_zero()


# -- automorphisms -------------------------------------------------------------


@dataclass(frozen=True)
class AutParams:
    """Automorphism data: x -> alpha*x + p(y), y -> alpha*y with alpha != 0."""

    alpha: Fraction
    poly: Poly

    def __post_init__(self):
        if not self.alpha:
            raise ValueError("automorphism scale must be nonzero")

    def images(self) -> tuple[NcPolynomial, NcPolynomial]:
        fx = NcPolynomial.from_term("x", self.alpha)
        for i, c in enumerate(self.poly.coeffs):
            if c:
                fx = fx + NcPolynomial.from_term("y" * i, c)
        fy = NcPolynomial.from_term("y", self.alpha)
        return fx, fy

    def __str__(self) -> str:
        return (f"x -> {format_rat(self.alpha)}*x + {self.poly.expr_str('y')},"
                f" y -> {format_rat(self.alpha)}*y")


def identity_aut() -> AutParams:
    return AutParams(Fraction(1), Poly.zero())


def compose_aut(outer: AutParams, inner: AutParams) -> AutParams:
    """Parameters of outer o inner (apply inner first).

    With outer = (a, p) and inner = (b, q):
    x -> ab*x + (b*p(y) + q(a*y)),  y -> ab*y.
    """
    alpha = outer.alpha * inner.alpha
    poly = outer.poly.scale(inner.alpha) + inner.poly.scale_arg(outer.alpha)
    return AutParams(alpha, poly)


def invert_aut(params: AutParams) -> AutParams:
    """The inverse automorphism, again of the same shape."""
    inv = Fraction(1) / params.alpha
    return AutParams(inv, params.poly.scale_arg(inv).scale(-inv))


def aut_params_from_images(image_x: NcPolynomial,
                           image_y: NcPolynomial) -> AutParams:
    """Read (alpha, p) back off substitution images; ValueError if not that shape."""
    y_terms = image_y.terms
    if set(y_terms) != {"y"}:
        raise ValueError("y-image is not a scalar multiple of y")
    alpha = y_terms["y"]
    coeffs: dict[int, Fraction] = {}
    for word, coeff in image_x.terms.items():
        if word == "x":
            if coeff != alpha:
                raise ValueError("x-image scale disagrees with y-image scale")
        elif set(word) <= {"y"}:
            coeffs[len(word)] = coeff
        else:
            raise ValueError(f"unexpected monomial {word!r} in x-image")
    if "x" not in image_x.terms:
        raise ValueError("x-image has no x term")
    size = max(coeffs, default=-1) + 1
    poly = Poly.from_coeffs(coeffs.get(i, Fraction(0)) for i in range(size))
    return AutParams(alpha, poly)


def poly_in_y(p: NcPolynomial) -> Poly:
    """Convert a polynomial supported on pure y-powers to a Poly; else ValueError."""
    coeffs: dict[int, Fraction] = {}
    for word, coeff in p.terms.items():
        if set(word) <= {"y"}:
            coeffs[len(word)] = coeff
        else:
            raise ValueError(f"not a polynomial in y: contains {word!r}")
    size = max(coeffs, default=-1) + 1
    return Poly.from_coeffs(coeffs.get(i, Fraction(0)) for i in range(size))


# -- truncated quotients --------------------------------------------------------


def ideal_truncation_span(generators: Sequence[NcPolynomial],
                          max_degree: int) -> list[NcPolynomial]:
    """Spanning set of the degree-truncated two-sided ideal inside the algebra.

    Products m * g * m' over PBW monomials m, m' with
    deg(m) + deg(g) + deg(m') <= max_degree, not yet normal-formed.
    """
    elements = []
    for g in generators:
        dg = g.degree
        if dg < 0 or dg > max_degree:
            continue
        for left in pbw_basis(max_degree - dg):
            room = max_degree - dg - len(left)
            for right in pbw_basis(room):
                elements.append(
                    NcPolynomial.from_term(left) * g * NcPolynomial.from_term(right))
    return elements


def quotient_dim(generators: Sequence[NcPolynomial], max_degree: int) -> int:
    """Dimension of the degree <= max_degree slice of the quotient by an ideal.

    Computed as (number of PBW monomials of degree <= d) minus the rank of
    the normal-formed truncated ideal span.
    """
    if max_degree < 0:
        raise ValueError("degree must be >= 0")
    basis = pbw_basis(max_degree)
    index = {w: i for i, w in enumerate(basis)}
    span = EchelonSpan(len(basis))
    for element in ideal_truncation_span(generators, max_degree):
        nf = normal_form(element)
        row = [Fraction(0)] * len(basis)
        for word, coeff in nf.terms.items():
            row[index[word]] = coeff
        span.add(row)
    return len(basis) - span.dim
