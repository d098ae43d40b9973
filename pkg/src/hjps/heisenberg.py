"""Finite Heisenberg group action on ``Q[x0, ..., x{n-1}]`` and invariance checks.

``sigma`` shifts indices (``x_i -> x_{i+1}`` mod n).  ``tau`` scales ``x_i`` by
``eps**i`` with ``eps`` a primitive n-th root of unity; it acts on a monomial by
``eps**(tau-degree)``, so every tau condition reduces to a congruence on
tau-degrees and no roots of unity are ever formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .polyring import Exponent, Polynomial, partial_derivative


def sigma_exponent(e: Sequence[int]) -> Exponent:
    """Exponent of ``x_i`` moves to ``x_{i+1 mod n}``."""
    return (e[-1],) + tuple(e[:-1])


def sigma_poly(p: Polynomial, times: int = 1) -> Polynomial:
    times %= p.n
    if times == 0:
        return p
    return Polynomial(p.n, {e[-times:] + e[:-times]: c for e, c in p.items()})


def monomial_tau_degree(e: Sequence[int]) -> int:
    n = len(e)
    return sum(i * a for i, a in enumerate(e)) % n


def tau_degree(p: Polynomial) -> int | None:
    """Largest monomial tau-degree, representatives ``0 < 1 < ... < n-1``.

    ``None`` stands for the bottom element of the zero polynomial.
    """
    return max((monomial_tau_degree(e) for e, _ in p.items()), default=None)


def tau_degrees(p: Polynomial) -> set[int]:
    return {monomial_tau_degree(e) for e, _ in p.items()}


def is_tau_homogeneous(p: Polynomial) -> bool:
    return len(tau_degrees(p)) <= 1


@dataclass
class InvarianceReport:
    sigma_ok: bool = True
    tau_ok: bool = True
    degree_signature_ok: bool = True
    failures: list[tuple[int, int, str, Polynomial]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.sigma_ok and self.tau_ok and self.degree_signature_ok


def _pairs(n: int):
    return ((i, j) for i in range(n) for j in range(i + 1, n))


def check_h_invariance(t) -> InvarianceReport:
    """Check ``{x_{i+1}, x_{j+1}} = sigma{x_i, x_j}`` and the tau congruence for all pairs.

    Failures carry a witness: the offending difference for sigma, the
    offending monomials for tau.  The degree signature flag is filled in too
    so a report covers every Heisenberg condition at once.
    """
    n = t.n
    report = InvarianceReport()
    for i, j in _pairs(n):
        entry = t.get(i, j)
        shifted = t.get((i + 1) % n, (j + 1) % n)
        diff = shifted - sigma_poly(entry)
        if diff:
            report.sigma_ok = False
            report.failures.append((i, j, "sigma", diff))
        bad = {e: c for e, c in entry.items() if monomial_tau_degree(e) != (i + j) % n}
        if bad:
            report.tau_ok = False
            report.failures.append((i, j, "tau", Polynomial(n, bad)))
        bad = {e: c for e, c in entry.items() if (sum(e) - 2) % n}
        if bad:
            report.degree_signature_ok = False
            report.failures.append((i, j, "degree", Polynomial(n, bad)))
    return report


def check_degree_signature(t) -> bool:
    """Every monomial of every bracket has total degree ``2 + s*n``."""
    return all((sum(e) - 2) % t.n == 0 for i, j in _pairs(t.n) for e, _ in t.get(i, j).items())


class _AnyDegree:
    def __repr__(self) -> str:
        return "ANY_DEGREE"


ANY_DEGREE = _AnyDegree()


def is_weighted_homogeneous(p: Polynomial, weights: Sequence[int]):
    """Weighted degree ``D`` if every monomial has ``sum(w_i * a_i) == D``.

    Returns ``None`` when degrees differ and ``ANY_DEGREE`` for the zero polynomial.
    """
    if len(weights) != p.n or any(w < 1 for w in weights):
        raise ValueError(f"need {p.n} positive weights, got {weights}")
    degrees = {sum(w * a for w, a in zip(weights, e)) for e, _ in p.items()}
    if not degrees:
        return ANY_DEGREE
    if len(degrees) == 1:
        return degrees.pop()
    return None


def check_toric_invariance(t, weights: Sequence[int]) -> bool:
    """Bracket has weight zero under ``x_i -> lam**w_i * x_i``."""
    for i, j in _pairs(t.n):
        entry = t.get(i, j)
        if entry and is_weighted_homogeneous(entry, weights) != weights[i] + weights[j]:
            return False
    return True


def sigma_derivative_commutation(p: Polynomial, i: int) -> bool:
    lhs = sigma_poly(partial_derivative(p, i))
    rhs = partial_derivative(sigma_poly(p), (i + 1) % p.n)
    return lhs == rhs
