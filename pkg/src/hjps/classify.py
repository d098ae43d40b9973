"""Bases of the invariant Casimir spaces and the named families.

Two dimensions are reported for each degree ``n*r``: the number of admissible
monomials (what the dimension formula counts) and the number of sigma-orbits
among them (the sigma-invariant polynomials).  Orbit sums carry coefficient 1
on every member.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .enumeration import cyclic_offset, monomial_filter_oracle
from .heisenberg import sigma_exponent
from .jps import CasimirSet
from .polyring import Exponent, Polynomial, parse_poly


@dataclass(frozen=True)
class HBasisReport:
    n: int
    r: int
    monomials: tuple[Exponent, ...]
    orbits: tuple[tuple[Exponent, ...], ...]

    @property
    def degree(self) -> int:
        return self.n * self.r

    @property
    def monomial_dimension(self) -> int:
        return len(self.monomials)

    @property
    def orbit_dimension(self) -> int:
        return len(self.orbits)

    @property
    def tau_target(self) -> int:
        return cyclic_offset(self.n)

    def orbit_sums(self) -> list[Polynomial]:
        return [Polynomial(self.n, {e: 1 for e in orbit}) for orbit in self.orbits]

    def orbit_combination(self, coeffs: Sequence) -> Polynomial:
        if len(coeffs) != len(self.orbits):
            raise ValueError(f"need {len(self.orbits)} coefficients")
        return Polynomial(self.n, {e: c for orbit, c in zip(self.orbits, coeffs) for e in orbit})

    def orbit_coordinates(self, p: Polynomial) -> list[Fraction] | None:
        """Coefficients of ``p`` in the orbit-sum basis, or ``None`` if ``p`` is outside the span."""
        if p.n != self.n:
            return None
        index = {e: k for k, orbit in enumerate(self.orbits) for e in orbit}
        if any(e not in index for e, _ in p.items()):
            return None
        coords = []
        for orbit in self.orbits:
            values = {p.coefficient(e) for e in orbit}
            if len(values) != 1:
                return None
            coords.append(values.pop())
        return coords


def sigma_orbit(e: Exponent) -> tuple[Exponent, ...]:
    seen = [tuple(e)]
    cur = sigma_exponent(e)
    while cur != seen[0]:
        seen.append(cur)
        cur = sigma_exponent(cur)
    return tuple(seen)


def h_basis(n: int, r: int) -> HBasisReport:
    monos = monomial_filter_oracle(n, r)
    remaining = set(monos)
    orbits = []
    for e in monos:
        if e not in remaining:
            continue
        orbit = sigma_orbit(e)
        if not remaining.issuperset(orbit):
            raise AssertionError(f"admissible set not closed under rotation at {e}")
        remaining.difference_update(orbit)
        orbits.append(tuple(sorted(orbit, reverse=True)))
    orbits.sort(key=lambda o: o[0], reverse=True)
    return HBasisReport(n, r, tuple(monos), tuple(orbits))


# -- named families ---------------------------------------------------------


def ast_cubic(gamma=0) -> Polynomial:
    """``x0^3 + x1^3 + x2^3 + gamma*x0*x1*x2``."""
    return parse_poly("x0^3+x1^3+x2^3", 3) + Polynomial.monomial((1, 1, 1), Fraction(gamma))


def dual_sextic(a, b, c, d) -> Polynomial:
    """``a/6 sum x_i^6 + b/3 sum x_i^3 x_j^3 + c sum x_i^4 x_j x_k + d/2 x0^2 x1^2 x2^2``."""
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    terms = {}
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 6
        terms[tuple(e)] = a / 6
        e = [1, 1, 1]
        e[i] = 4
        terms[tuple(e)] = c
    for i, j in ((0, 1), (0, 2), (1, 2)):
        e = [0, 0, 0]
        e[i] = e[j] = 3
        terms[tuple(e)] = b / 3
    terms[(2, 2, 2)] = d / 2
    return Polynomial(3, terms)


def sklyanin_casimirs(k=1) -> CasimirSet:
    k = Fraction(k)
    half = Fraction(1, 2)
    q1 = Polynomial(4, {(2, 0, 0, 0): half, (0, 0, 2, 0): half, (0, 1, 0, 1): k})
    q2 = Polynomial(4, {(0, 2, 0, 0): half, (0, 0, 0, 2): half, (1, 0, 1, 0): k})
    return CasimirSet(4, (q1, q2))


def brieskorn_pham_5(alpha: Sequence, beta: Sequence, gamma: Sequence) -> CasimirSet:
    """Linear form and two diagonal quadrics in five variables."""
    if not (len(alpha) == len(beta) == len(gamma) == 5):
        raise ValueError("each coefficient vector needs 5 entries")
    unit = lambda i, power: tuple(power if k == i else 0 for k in range(5))  # noqa: E731
    p1 = Polynomial(5, {unit(i, 1): Fraction(a) for i, a in enumerate(alpha)})
    p2 = Polynomial(5, {unit(i, 2): Fraction(b) for i, b in enumerate(beta)})
    p3 = Polynomial(5, {unit(i, 2): Fraction(g) for i, g in enumerate(gamma)})
    return CasimirSet(5, (p1, p2, p3))


def weighted_cubic(gamma=1) -> Polynomial:
    """AST cubic rewritten in weighted coordinates of weights (2, 1, 3)."""
    return parse_poly("x0^3+x1^3*x2+x2^2", 3) + Polynomial.monomial((1, 1, 1), Fraction(gamma))


def wp112_curve(k=1) -> Polynomial:
    """``1/3 (z2^2 + z0^2 z2 + z0 z1^3) + k z0 z1 z2`` in weights (1, 1, 2)."""
    return parse_poly("1/3*x2^2+1/3*x0^2*x2+1/3*x0*x1^3", 3) + Polynomial.monomial((1, 1, 1), Fraction(k))


def weighted_examples(gamma=1, k=1) -> list[tuple[Polynomial, tuple[int, int, int]]]:
    return [(weighted_cubic(gamma), (2, 1, 3)), (wp112_curve(k), (1, 1, 2))]
