"""Lattice-point counts behind the dimensions of the invariant Casimir spaces.

Two parametrizations of admissible exponent vectors are implemented
independently and compared in the tests:

* n = 3: points ``(x, y)`` of the triangle ``T_r`` mapped by
  ``alpha = (4r - 2x - y, -2r + x + 2y, r + x - y)``;
* any n: compositions ``s`` of ``N = n(n-1)r/2 - l`` with cyclic difference
  bounds ``s_{j+1} <= s_j + r``, mapped by ``alpha_i = s_{n-i-1} - s_{n-i} + r``.

The monomial filter (all degree-``nr`` monomials whose cyclic tau rows are
``= l mod n``) is the brute-force oracle for both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polyring import monomials_of_degree

MAX_FILTER_DEGREE = 24
MAX_SEARCH_NODES = 5_000_000


class EnumerationLimitError(RuntimeError):
    pass


# -- dimension 3 ------------------------------------------------------------


def _in_triangle(x: int, y: int, r: int) -> bool:
    return x + y <= 3 * r and 2 * x + y <= 4 * r and x + 2 * y >= 2 * r and -x + y <= r


def triangle_lattice_points(r: int) -> list[tuple[int, int]]:
    if r < 1:
        raise ValueError("r must be >= 1")
    # the triangle has vertices (0, r), (r, 2r), (2r, 0)
    return [(x, y) for x in range(2 * r + 1) for y in range(3 * r + 1) if _in_triangle(x, y, r)]


def triangle_column_count(r: int, x: int) -> int:
    """Closed-form number of triangle points with first coordinate ``x``."""
    if 0 <= x <= r:
        return x + 1 + x // 2
    if r < x <= 2 * r:
        return 3 * r + 1 - 2 * x + x // 2
    return 0


def card_s1(r: int) -> int:
    """Points of ``T_r`` with ``0 <= x <= r``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    num = 3 * r * r + 6 * r + (4 if r % 2 == 0 else 3)
    return num // 4


def card_s2(r: int) -> int:
    """Points of ``T_r`` with ``r < x <= 2r``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    num = 3 * r * r + (0 if r % 2 == 0 else 1)
    return num // 4


def dim_h3(s: int) -> int:
    """``3/2 s^2 + 9/2 s + 4``, the dimension in degree ``3(1 + s)``; 1 for ``s = -1``."""
    if s < -1:
        raise ValueError("s must be >= -1")
    return (3 * s * s + 9 * s + 8) // 2


def series_coefficients(numerator: Sequence[int], denominator: Sequence[int], order: int) -> list[int]:
    """First ``order + 1`` power-series coefficients of ``numerator / denominator``.

    Polynomials are coefficient lists in ascending powers; ``denominator[0]``
    must be +-1 so the expansion stays integral.
    """
    if not denominator or denominator[0] not in (1, -1):
        raise ValueError("constant term of the denominator must be +-1")
    out: list[int] = []
    for k in range(order + 1):
        acc = numerator[k] if k < len(numerator) else 0
        for j in range(1, min(k, len(denominator) - 1) + 1):
            acc -= denominator[j] * out[k - j]
        out.append(acc * denominator[0])
    return out


def _poly_power(p: list[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        nxt = [0] * (len(out) + len(p) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(p):
                nxt[i + j] += a * b
        out = nxt
    return out


POINCARE_SERIES = "(1+t^3+t^6)/(1-t^3)^3"


def poincare_series(order: int) -> list[int]:
    """Coefficients of ``(1 + t^3 + t^6) / (1 - t^3)^3`` up to ``t^order``."""
    num = [1, 0, 0, 1, 0, 0, 1]
    den = _poly_power([1, 0, 0, -1], 3)
    return series_coefficients(num, den, order)


def poincare_coeffs(max_r: int) -> list[int]:
    """Coefficients at ``t^(3r)`` for ``r = 0 .. max_r``."""
    if max_r < 0:
        raise ValueError("max_r must be >= 0")
    return poincare_series(3 * max_r)[::3]


def triangle_to_exponents(r: int, x: int, y: int) -> tuple[int, int, int]:
    alpha = (4 * r - 2 * x - y, -2 * r + x + 2 * y, r + x - y)
    if min(alpha) < 0:
        raise ValueError(f"({x}, {y}) lies outside T_{r}")
    return alpha


# -- any dimension ----------------------------------------------------------


def cyclic_offset(n: int) -> int:
    """Target tau-degree ``l``: ``n/2`` for even ``n``, 0 for odd ``n``."""
    return n // 2 if n % 2 == 0 else 0


def weight_target(n: int, r: int) -> int:
    return n * (n - 1) * r // 2 - cyclic_offset(n)


@dataclass(frozen=True)
class ConstraintSystem:
    """Rows ``(c_-1, c_0, ..., c_{n-1})`` meaning ``c_-1 + sum c_j * lam_j >= 0``."""

    rows: tuple[tuple[int, ...], ...]
    weight: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("all constraint rows must have the same length")
        if self.weight is not None and self.weight < 0:
            raise ValueError("weight target must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.rows[0]) - 1

    def satisfied(self, point: Sequence) -> bool:
        return all(row[0] + sum(c * v for c, v in zip(row[1:], point)) >= 0 for row in self.rows)


def constraint_system(n: int, r: int) -> ConstraintSystem:
    """Cyclic rows ``s_{n-i-1} - s_{n-i} + r >= 0`` and weight ``n(n-1)r/2 - l``."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if r < 1:
        raise ValueError("r must be >= 1")
    rows = []
    for i in range(n):
        row = [r] + [0] * n
        row[1 + (n - i - 1) % n] += 1
        row[1 + (n - i) % n] -= 1
        rows.append(tuple(row))
    return ConstraintSystem(tuple(rows), weight_target(n, r))


def enumerate_compositions(n: int, r: int) -> list[tuple[int, ...]]:
    """Compositions of ``N`` satisfying the cyclic bounds, in lex order."""
    system = constraint_system(n, r)
    total = system.weight
    out: list[tuple[int, ...]] = []
    s = [0] * n

    def place(k: int, remaining: int):
        if k == n - 1:
            s[k] = remaining
            # closing bounds: s_{n-1} <= s_{n-2} + r and s_0 <= s_{n-1} + r
            if remaining <= s[k - 1] + r and s[0] <= remaining + r:
                out.append(tuple(s))
            return
        hi = remaining if k == 0 else min(remaining, s[k - 1] + r)
        for v in range(hi + 1):
            s[k] = v
            place(k + 1, remaining - v)

    place(0, total)
    return out


def compositions_to_exponents(n: int, r: int, s: Sequence[int]) -> tuple[int, ...]:
    if len(s) != n:
        raise ValueError(f"composition has length {len(s)}, expected {n}")
    alpha = tuple(s[(n - i - 1) % n] - s[(n - i) % n] + r for i in range(n))
    if min(alpha) < 0:
        raise ValueError(f"{tuple(s)} violates the cyclic constraints (exponents {alpha})")
    return alpha


def monomial_filter_oracle(n: int, r: int) -> list[tuple[int, ...]]:
    """Every degree-``nr`` exponent whose n cyclic weighted rows are ``= l mod n``."""
    if n < 3 or r < 1:
        raise ValueError("need n >= 3 and r >= 1")
    if n * r > MAX_FILTER_DEGREE:
        raise EnumerationLimitError(f"degree n*r = {n * r} exceeds the guard {MAX_FILTER_DEGREE}")
    l = cyclic_offset(n)
    out = []
    for alpha in monomials_of_degree(n, n * r):
        # row k has coefficient (i + k) mod n on alpha_i
        if all(sum(((i + k) % n) * a for i, a in enumerate(alpha)) % n == l for k in range(n)):
            out.append(alpha)
    return sorted(out)


def generating_coefficient(c: ConstraintSystem, N: int, max_nodes: int = MAX_SEARCH_NODES) -> int:
    """Number of nonnegative solutions of weight ``N``: the ``q^N`` coefficient of ``F_C(q, ..., q)``.

    Generic bounded search; a row is tested as soon as all of its variables are set.
    """
    if N < 0:
        return 0
    n = c.n
    # index after which each row becomes decidable
    last = [max((j for j, v in enumerate(row[1:]) if v), default=-1) for row in c.rows]
    ready = [[row for row, k in zip(c.rows, last) if k == idx] for idx in range(n)]
    always = [row for row, k in zip(c.rows, last) if k == -1]
    if any(row[0] < 0 for row in always):
        return 0
    lam = [0] * n
    nodes = 0
    count = 0

    def ok(rows) -> bool:
        return all(row[0] + sum(a * b for a, b in zip(row[1:], lam)) >= 0 for row in rows)

    def place(k: int, remaining: int):
        nonlocal nodes, count
        nodes += 1
        if nodes > max_nodes:
            raise EnumerationLimitError(f"search exceeded {max_nodes} nodes")
        if k == n - 1:
            lam[k] = remaining
            if ok(ready[k]):
                count += 1
            return
        for v in range(remaining + 1):
            lam[k] = v
            if ok(ready[k]):
                place(k + 1, remaining - v)
        lam[k] = 0

    place(0, N)
    return count


# -- eliminated form and vertex checks -----------------------------------


def eliminated_system(n: int, r: int) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
    """Constraints on ``(s_0, ..., s_{n-2})`` after substituting ``s_{n-1} = N - sum``.

    Each item ``(const, coeffs)`` means ``const + coeffs . s >= 0``.  The list is
    the cyclic rows plus ``s_{n-1} >= 0``; nonnegativity of the kept
    coordinates is not part of the polytope.
    """
    system = constraint_system(n, r)
    N = system.weight
    out = []
    for row in system.rows:
        last = row[n]
        out.append((Fraction(row[0] + last * N), tuple(Fraction(row[1 + j] - last) for j in range(n - 1))))
    out.append((Fraction(N), tuple(Fraction(-1) for _ in range(n - 1))))
    return out


def _vertex_ok(rows, point: Sequence[Fraction], n: int) -> bool:
    active = 0
    for const, coeffs in rows:
        v = const + sum(a * b for a, b in zip(coeffs, point))
        if v < 0:
            return False
        if v == 0:
            active += 1
    return active >= n - 1


def find_vertex_axis_order(n: int, r: int, vertices: Sequence[Sequence]) -> tuple[int, ...] | None:
    """First coordinate permutation under which every point is a vertex of the eliminated polytope."""
    pts = [tuple(Fraction(v) for v in p) for p in vertices]
    if any(len(p) != n - 1 for p in pts):
        raise ValueError(f"vertices must have {n - 1} coordinates")
    rows = eliminated_system(n, r)
    for perm in itertools.permutations(range(n - 1)):
        if all(_vertex_ok(rows, [p[k] for k in perm], n) for p in pts):
            return perm
    return None


def check_polytope_vertices(n: int, r: int, vertices: Sequence[Sequence]) -> bool:
    return find_vertex_axis_order(n, r, vertices) is not None


# -- counting front end -----------------------------------------------------

METHODS = ("closed-form", "triangle-brute", "compositions", "monomial-filter")


@dataclass(frozen=True)
class CountReport:
    n: int
    r: int
    method: str
    count: int


def count(n: int, r: int, method: str) -> CountReport:
    if method == "triangle":
        method = "triangle-brute"
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method in ("closed-form", "triangle-brute") and n != 3:
        raise ValueError(f"method {method!r} only exists for n = 3")
    if method == "closed-form":
        value = card_s1(r) + card_s2(r)
    elif method == "triangle-brute":
        value = len(triangle_lattice_points(r))
    elif method == "compositions":
        value = len(enumerate_compositions(n, r))
    else:
        value = len(monomial_filter_oracle(n, r))
    return CountReport(n, r, method, value)


def composition_monomials(n: int, r: int) -> list[tuple[int, ...]]:
    return sorted(compositions_to_exponents(n, r, s) for s in enumerate_compositions(n, r))


def triangle_monomials(r: int) -> list[tuple[int, int, int]]:
    return sorted(triangle_to_exponents(r, x, y) for x, y in triangle_lattice_points(r))
