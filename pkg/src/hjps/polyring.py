"""Exact sparse multivariate polynomials over the rationals.

A :class:`Polynomial` lives in ``Q[x0, ..., x{n-1}]`` and stores a map from
dense exponent tuples to nonzero :class:`fractions.Fraction` coefficients.
Values are immutable; every operation returns a new polynomial.

Text form (whitespace insignificant)::

    poly   := ['-'] term (('+'|'-') term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    coeff  := integer ['/' positive-integer]
    factor := 'x' index ['^' positive-integer]

Canonical output uses the same grammar with terms in descending graded
lexicographic order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class ParseError(ValueError):
    """Raised on malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def grlex_key(exponent: Exponent) -> tuple[int, Exponent]:
    return sum(exponent), exponent


class Polynomial:
    """Element of ``Q[x0, ..., x{n-1}]`` with dense exponent vectors."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object] | None = None):
        if n < 1:
            raise ValueError("variable count must be positive")
        clean: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {n}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = clean.get(exp, Fraction(0)) + _as_fraction(coeff)
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self._n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponent, Fraction]) -> Polynomial:
        # trusted constructor: terms already normalized
        p = object.__new__(cls)
        p._n = n
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, value=1) -> Polynomial:
        c = _as_fraction(value)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, n: int, i: int) -> Polynomial:
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        exp = [0] * n
        exp[i] = 1
        return cls._raw(n, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff=1) -> Polynomial:
        return cls(len(exponent), {tuple(exponent): coeff})

    # -- basic accessors ----------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Exponent]:
        return sorted(self._terms, key=grlex_key, reverse=True)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other._n != self._n:
                raise ValueError(f"variable count mismatch: {self._n} vs {other._n}")
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(self._n, other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(self._n, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self._n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            c = _as_fraction(other)
            if not c:
                return Polynomial.zero(self._n)
            return Polynomial._raw(self._n, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return Polynomial._raw(self._n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self._n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == Polynomial.constant(self._n, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({self._n}, {format_poly(self)!r})"

    # -- calculus and substitution ------------------------------------

    def diff(self, i: int) -> Polynomial:
        return partial_derivative(self, i)

    def __call__(self, *point):
        return evaluate(self, point)

    def embed(self, n: int, offset: int = 0) -> Polynomial:
        """Same polynomial in a larger ring, variable ``x_i`` renamed ``x_{i+offset}``."""
        if offset < 0 or offset + self._n > n:
            raise ValueError("embedding does not fit")
        pad_left, pad_right = (0,) * offset, (0,) * (n - offset - self._n)
        return Polynomial._raw(n, {pad_left + e + pad_right: c for e, c in self._terms.items()})

    def permute(self, perm: Sequence[int]) -> Polynomial:
        """Rename ``x_i`` to ``x_{perm[i]}``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError(f"{perm} is not a permutation of range({self._n})")
        out = {}
        for e, c in self._terms.items():
            new = [0] * self._n
            for i, a in enumerate(e):
                new[perm[i]] = a
            out[tuple(new)] = c
        return Polynomial._raw(self._n, out)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.n != b.n:
        raise ValueError(f"variable count mismatch: {a.n} vs {b.n}")
    return a * b


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < p.n:
        raise IndexError(f"variable index {i} out of range for n={p.n}")
    out = {}
    for e, c in p.items():
        if e[i]:
            new = list(e)
            new[i] -= 1
            out[tuple(new)] = c * e[i]
    return Polynomial._raw(p.n, out)


def evaluate(p: Polynomial, point: Sequence):
    """Substitute ``point`` for the variables.

    Exact for rational points; float points give a float (used only by the
    numeric dual-curve code).
    """
    if len(point) != p.n:
        raise ValueError(f"point has length {len(point)}, expected {p.n}")
    total = Fraction(0)
    for e, c in p.items():
        term = c
        for x, a in zip(point, e):
            if a:
                term = term * x**a
        total = total + term
    return total


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient ``a / b``; raises ``ArithmeticError`` unless ``b`` divides ``a``."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_b = max(b._terms)
    cb = b._terms[lead_b]
    rem = dict(a._terms)
    quot: dict[Exponent, Fraction] = {}
    while rem:
        lead = max(rem)
        q_exp = tuple(x - y for x, y in zip(lead, lead_b))
        if min(q_exp) < 0:
            raise ArithmeticError("polynomial division is not exact")
        q_c = rem[lead] / cb
        quot[q_exp] = q_c
        for eb, c in b._terms.items():
            e = tuple(x + y for x, y in zip(q_exp, eb))
            v = rem.get(e, 0) - q_c * c
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return Polynomial._raw(a.n, quot)


# -- text form ------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(e: Exponent) -> str:
    return "*".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e) if a)


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for e in p.monomials():
        c = p.coefficient(e)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = _format_monomial(e)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += sign + body
    return out


class _Parser:
    def __init__(self, text: str, n: int):
        # keep original offsets for error reporting
        self.chars = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
        self.pos = 0
        self.n = n
        self.end = len(text)

    def peek(self) -> str | None:
        return self.chars[self.pos][1] if self.pos < len(self.chars) else None

    def offset(self) -> int:
        return self.chars[self.pos][0] if self.pos < len(self.chars) else self.end

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek()
            raise ParseError(f"expected {ch!r}, found {found!r}" if found else f"expected {ch!r}, found end of input", self.offset())
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.peek() is not None and self.peek().isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected digits", self.offset())
        return int("".join(ch for _, ch in self.chars[start:self.pos]))

    def factor(self, exp: list[int]):
        self.expect("x")
        at = self.offset()
        index = self.integer()
        if index >= self.n:
            raise ParseError(f"variable x{index} out of range for n={self.n}", at)
        power = 1
        if self.peek() == "^":
            self.pos += 1
            at = self.offset()
            power = self.integer()
            if power < 1:
                raise ParseError("exponent must be a positive integer", at)
        exp[index] += power

    def term(self) -> tuple[Exponent, Fraction]:
        exp = [0] * self.n
        coeff = Fraction(1)
        if self.peek() is not None and self.peek().isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                at = self.offset()
                den = self.integer()
                if den == 0:
                    raise ParseError("zero denominator", at)
            coeff = Fraction(num, den)
        else:
            self.factor(exp)
        while self.peek() == "*":
            self.pos += 1
            self.factor(exp)
        return tuple(exp), coeff

    def poly(self) -> Polynomial:
        if not self.chars:
            raise ParseError("empty polynomial", 0)
        terms: dict[Exponent, Fraction] = {}
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        while True:
            exp, c = self.term()
            terms[exp] = terms.get(exp, 0) + sign * c
            nxt = self.peek()
            if nxt is None:
                break
            if nxt not in "+-":
                raise ParseError(f"unexpected {nxt!r}", self.offset())
            sign = 1 if nxt == "+" else -1
            self.pos += 1
        return Polynomial(self.n, terms)


def parse_poly(text: str, n: int) -> Polynomial:
    """Parse ``text`` into a polynomial in ``n`` variables."""
    return _Parser(text, n).poly()


# -- matrices -------------------------------------------------------------


class PolyMatrix:
    """Row-major matrix of polynomials sharing one ambient ring."""

    __slots__ = ("rows", "cols", "n", "_entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one entry")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged matrix")
        n = rows[0][0].n
        if any(p.n != n for r in rows for p in r):
            raise ValueError("matrix entries live in different rings")
        self.rows, self.cols, self.n = len(rows), cols, n
        self._entries = tuple(tuple(r) for r in rows)

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self._entries[i][j]

    def to_lists(self) -> list[list[Polynomial]]:
        return [list(r) for r in self._entries]

    def swap_rows(self, i: int, j: int) -> PolyMatrix:
        rows = self.to_lists()
        rows[i], rows[j] = rows[j], rows[i]
        return PolyMatrix(rows)


def cofactor_det(rows: list[list[Polynomial]]) -> Polynomial:
    """Laplace expansion along the first row."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Polynomial.zero(rows[0][0].n)
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_det(rows: list[list[Polynomial]]) -> Polynomial:
    """Fraction-free elimination; every division is exact in the polynomial ring."""
    m = [list(r) for r in rows]
    size = len(m)
    n = m[0][0].n
    sign = 1
    prev = Polynomial.constant(n, 1)
    for k in range(size - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not m[i][k].is_zero()), None)
            if swap is None:
                return Polynomial.zero(n)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = exact_divide(num, prev) if num else num
        prev = pivot
    det = m[-1][-1]
    return det if sign > 0 else -det


def matrix_det(m: PolyMatrix | Sequence[Sequence[Polynomial]]) -> Polynomial:
    if not isinstance(m, PolyMatrix):
        m = PolyMatrix(m)
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    rows = m.to_lists()
    if m.rows <= 4:
        return cofactor_det(rows)
    return bareiss_det(rows)


def variables(n: int) -> list[Polynomial]:
    return [Polynomial.variable(n, i) for i in range(n)]


def monomials_of_degree(n: int, d: int) -> Iterable[Exponent]:
    """All exponent vectors of length ``n`` and total degree ``d``, in lex order."""
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exp = []
        for b in bars:
            exp.append(b - prev - 1)
            prev = b
        exp.append(d + n - 2 - prev)
        yield tuple(exp)
