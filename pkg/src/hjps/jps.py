"""Jacobian Poisson brackets built from Casimir polynomials.

Given ``Q_1, ..., Q_{n-2}`` in ``n`` variables,

    {f, g} = det(grad f, grad g, grad Q_1, ..., grad Q_{n-2})

with rows in that order and columns in variable order.  The Casimir order is
part of the structure: swapping two Casimirs flips the sign of every bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .polyring import Polynomial, matrix_det, parse_poly, partial_derivative


@dataclass(frozen=True)
class CasimirSet:
    n: int
    casimirs: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "casimirs", tuple(self.casimirs))
        if self.n < 3:
            raise ValueError("a Jacobian structure needs at least 3 variables")
        if len(self.casimirs) != self.n - 2:
            raise ValueError(f"need {self.n - 2} Casimirs for n={self.n}, got {len(self.casimirs)}")
        for q in self.casimirs:
            if q.n != self.n:
                raise ValueError(f"Casimir {q} lives in {q.n} variables, expected {self.n}")

    def product(self) -> Polynomial:
        out = Polynomial.constant(self.n, 1)
        for q in self.casimirs:
            out = out * q
        return out


class BracketTable:
    """Antisymmetric table of generator brackets ``{x_i, x_j}``; stores ``i < j`` only."""

    __slots__ = ("n", "_upper")

    def __init__(self, n: int, upper: Mapping[tuple[int, int], Polynomial]):
        self.n = n
        self._upper: dict[tuple[int, int], Polynomial] = {}
        for i in range(n):
            for j in range(i + 1, n):
                p = upper.get((i, j), Polynomial.zero(n))
                if p.n != n:
                    raise ValueError(f"entry ({i}, {j}) lives in {p.n} variables, expected {n}")
                self._upper[i, j] = p
        extra = set(upper) - set(self._upper)
        if extra:
            raise ValueError(f"entries outside the strict upper triangle: {sorted(extra)}")

    def get(self, i: int, j: int) -> Polynomial:
        if i == j:
            return Polynomial.zero(self.n)
        if i < j:
            return self._upper[i, j]
        return -self._upper[j, i]

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        return self.get(*ij)

    def pairs(self) -> Iterator[tuple[int, int]]:
        return iter(self._upper)

    def items(self):
        return self._upper.items()

    def scale(self, factor) -> BracketTable:
        return BracketTable(self.n, {ij: p * factor for ij, p in self._upper.items()})

    def __add__(self, other: BracketTable) -> BracketTable:
        return BracketTable(self.n, {ij: p + other._upper[ij] for ij, p in self._upper.items()})

    def mul_poly(self, q: Polynomial) -> BracketTable:
        return BracketTable(self.n, {ij: p * q for ij, p in self._upper.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, BracketTable) and self.n == other.n and self._upper == other._upper

    def __repr__(self) -> str:
        body = ", ".join(f"{{x{i},x{j}}}={p}" for (i, j), p in self._upper.items())
        return f"BracketTable(n={self.n}: {body})"


def gradient(p: Polynomial) -> list[Polynomial]:
    return [partial_derivative(p, i) for i in range(p.n)]


def jacobian_bracket(c: CasimirSet, f: Polynomial, g: Polynomial) -> Polynomial:
    if f.n != c.n or g.n != c.n:
        raise ValueError("bracket arguments must share the Casimir ring")
    rows = [gradient(f), gradient(g)] + [gradient(q) for q in c.casimirs]
    return matrix_det(rows)


def bracket_table(c: CasimirSet) -> BracketTable:
    grads = [gradient(q) for q in c.casimirs]
    upper = {}
    for i in range(c.n):
        for j in range(i + 1, c.n):
            # rows i, j are unit vectors: expand them away and take the complementary minor
            rest = [k for k in range(c.n) if k not in (i, j)]
            minor = matrix_det([[g[k] for k in rest] for g in grads])
            # det(e_i, e_j, M) = (-1)^(i + j - 1) * det(M restricted to the other columns)
            upper[i, j] = minor if (i + j - 1) % 2 == 0 else -minor
    return BracketTable(c.n, upper)


def jps3_table(P: Polynomial) -> BracketTable:
    """``{x_i, x_j} = dP/dx_k`` for cyclic ``(i, j, k)``."""
    if P.n != 3:
        raise ValueError(f"jps3_table needs a polynomial in 3 variables, got {P.n}")
    d0, d1, d2 = gradient(P)
    return BracketTable(3, {(0, 1): d2, (1, 2): d0, (0, 2): -d1})


def hamiltonian_action(t: BracketTable, i: int, q: Polynomial) -> Polynomial:
    """``{x_i, q}`` by the biderivation rule ``sum_m dq/dx_m * {x_i, x_m}``."""
    out = Polynomial.zero(t.n)
    for m in range(t.n):
        if m == i:
            continue
        dq = partial_derivative(q, m)
        if dq:
            out = out + dq * t.get(i, m)
    return out


def bracket_from_table(t: BracketTable, f: Polynomial, g: Polynomial) -> Polynomial:
    """``{f, g} = sum_{a,b} df/dx_a dg/dx_b {x_a, x_b}``."""
    out = Polynomial.zero(t.n)
    df = gradient(f)
    dg = gradient(g)
    for a in range(t.n):
        if not df[a]:
            continue
        for b in range(t.n):
            if a != b and dg[b]:
                out = out + df[a] * dg[b] * t.get(a, b)
    return out


def check_jacobi(t: BracketTable) -> tuple[bool, tuple[int, int, int, Polynomial] | None]:
    """Jacobi identity on generator triples; returns ``(ok, witness)``."""
    n = t.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = (
                    hamiltonian_action(t, i, t.get(j, k))
                    + hamiltonian_action(t, j, t.get(k, i))
                    + hamiltonian_action(t, k, t.get(i, j))
                )
                if total:
                    return False, (i, j, k, total)
    return True, None


def check_casimir(c: CasimirSet, t: BracketTable) -> bool:
    for q in c.casimirs:
        dq = gradient(q)
        for j in range(c.n):
            s = Polynomial.zero(c.n)
            for i in range(c.n):
                if i != j and dq[i]:
                    s = s + dq[i] * t.get(i, j)
            if s:
                return False
    return True


def product_rule_check(P: Polynomial, Q: Polynomial) -> bool:
    lhs = jps3_table(P * Q)
    rhs = jps3_table(Q).mul_poly(P) + jps3_table(P).mul_poly(Q)
    return lhs == rhs


def parse_casimir_file(text: str) -> CasimirSet:
    """First non-blank line ``n=<int>``, then one polynomial per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty Casimir file")
    head = lines[0].replace(" ", "")
    if not head.startswith("n="):
        raise ValueError(f"first line must be 'n=<int>', got {lines[0]!r}")
    try:
        n = int(head[2:])
    except ValueError:
        raise ValueError(f"bad variable count in {lines[0]!r}") from None
    polys = [parse_poly(ln, n) for ln in lines[1:]]
    return CasimirSet(n, tuple(polys))


def format_casimir_file(c: CasimirSet) -> str:
    return "\n".join([f"n={c.n}"] + [str(q) for q in c.casimirs]) + "\n"
