"""Numeric check that the dual of the AST cubic lies in the invariant sextic family.

The dual curve is the closure of the set of tangent lines.  We sample real
tangent lines of ``x0^3 + x1^3 + x2^3 + gamma*x0*x1*x2 = 0`` and fit them by a
least-squares null vector inside the four-parameter family spanned by the
sigma-orbit sextics.  Floating point is confined to this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .classify import dual_sextic
from .polyring import Polynomial, matrix_det, partial_derivative

POINT_TOL = 1e-12
FIT_TOL = 1e-8


class SingularCurveError(ValueError):
    pass


class DegenerateSampleError(ValueError):
    pass


def bordered_hessian(P: Polynomial) -> Polynomial:
    """``det [[0, p], [p^T, Hess P]]`` in the ring ``Q[x0, x1, x2, p0, p1, p2]``."""
    if P.n != 3:
        raise ValueError(f"bordered_hessian needs a polynomial in 3 variables, got {P.n}")
    hess = [[partial_derivative(partial_derivative(P, i), j).embed(6) for j in range(3)] for i in range(3)]
    p = [Polynomial.variable(6, 3 + i) for i in range(3)]
    zero = Polynomial.zero(6)
    rows = [[zero] + p] + [[p[i]] + hess[i] for i in range(3)]
    return matrix_det(rows)


def numeric_evaluator(p: Polynomial):
    """Vectorized float evaluation ``points (m, n) -> values (m,)``."""
    exps = np.array([e for e, _ in p.items()], dtype=float).reshape(-1, p.n)
    coeffs = np.array([float(c) for _, c in p.items()])

    def f(points):
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return np.prod(pts[:, None, :] ** exps[None, :, :], axis=2) @ coeffs

    return f


@dataclass(frozen=True)
class TangentSample:
    point: tuple[float, float, float]
    line: tuple[float, float, float]


@dataclass(frozen=True)
class SexticFit:
    coeffs: tuple[float, float, float, float]
    residual: float
    singular_values: tuple[float, ...]


def _cubic_value(x, gamma):
    return x[0] ** 3 + x[1] ** 3 + x[2] ** 3 + gamma * x[0] * x[1] * x[2]


def _cubic_grad(x, gamma):
    return np.array(
        [
            3 * x[0] ** 2 + gamma * x[1] * x[2],
            3 * x[1] ** 2 + gamma * x[0] * x[2],
            3 * x[2] ** 2 + gamma * x[0] * x[1],
        ]
    )


def _refine(x: np.ndarray, gamma: float, tol: float, steps: int = 50) -> np.ndarray | None:
    # safeguarded Newton in x2 with x0, x1 fixed
    for _ in range(steps):
        f = _cubic_value(x, gamma)
        if abs(f) < tol * 1e-2:
            break
        df = 3 * x[2] ** 2 + gamma * x[0] * x[1]
        if abs(df) < 1e-8:
            return None
        step = f / df
        if abs(step) > 1.0:
            step = math.copysign(1.0, step)
        x = x.copy()
        x[2] -= step
    x = x / np.linalg.norm(x)
    return x if abs(_cubic_value(x, gamma)) < tol else None


def sample_tangents(gamma: float, count: int, seed: int = 0, tol: float = POINT_TOL, max_tries: int = 100) -> list[TangentSample]:
    """Real points of the cubic with their unit gradient lines.

    Each point fixes a random direction ``(cos t, sin t)`` for ``(x0, x1)`` and
    solves the cubic for ``x2`` from the companion-matrix roots.
    """
    gamma = float(gamma)
    if abs(gamma**3 + 27.0) < 1e-9:
        raise SingularCurveError(f"the cubic is singular for gamma = {gamma}")
    rng = np.random.default_rng(seed)
    out: list[TangentSample] = []
    while len(out) < count:
        for _ in range(max_tries):
            theta = rng.uniform(0.0, 2 * math.pi)
            x0, x1 = math.cos(theta), math.sin(theta)
            roots = np.roots([1.0, 0.0, gamma * x0 * x1, x0**3 + x1**3])
            real = sorted(z.real for z in roots if abs(z.imag) < 1e-7 * max(1.0, abs(z)))
            if not real:
                continue
            x2 = real[rng.integers(len(real))]
            x = _refine(np.array([x0, x1, x2]), gamma, tol)
            if x is None:
                continue
            g = _cubic_grad(x, gamma)
            norm = np.linalg.norm(g)
            if norm < 1e-6:
                continue
            out.append(TangentSample(tuple(float(v) for v in x), tuple(float(v) for v in g / norm)))
            break
        else:
            raise RuntimeError(f"root finding failed {max_tries} times in a row; try another seed")
    return out


def perturb_samples(samples: Sequence[TangentSample], sigma: float, seed: int = 0) -> list[TangentSample]:
    """Add Gaussian noise of size ``sigma`` to each line and renormalize."""
    rng = np.random.default_rng(seed)
    out = []
    for s in samples:
        line = np.array(s.line) + sigma * rng.standard_normal(3)
        out.append(TangentSample(s.point, tuple(float(v) for v in line / np.linalg.norm(line))))
    return out


# basis of the family in the a, b, c, d normalization of dual_sextic
_FAMILY = [dual_sextic(*row) for row in np.eye(4, dtype=int).tolist()]
_FAMILY_EVAL = [numeric_evaluator(p) for p in _FAMILY]


def design_matrix(lines: np.ndarray) -> np.ndarray:
    return np.column_stack([f(lines) for f in _FAMILY_EVAL])


def fit_dual_sextic(samples: Sequence[TangentSample]) -> SexticFit:
    """Unit null vector ``(a, b, c, d)`` of the sample evaluation matrix.

    The residual is the largest ``|P(line)| / |row|`` over samples.  Sign is
    fixed so the first non-negligible coefficient is positive.
    """
    if len(samples) < 8:
        raise ValueError(f"need at least 8 samples, got {len(samples)}")
    lines = np.array([s.line for s in samples])
    m = design_matrix(lines)
    scale = np.linalg.norm(m, axis=1)
    scale[scale == 0] = 1.0
    m = m / scale[:, None]
    _, sv, vt = np.linalg.svd(m, full_matrices=False)
    rank = int(np.sum(sv > sv[0] * 1e-10))
    if rank < 3:
        raise DegenerateSampleError(f"sample matrix has rank {rank}")
    c = vt[-1]
    lead = next(v for v in c if abs(v) > 1e-9)
    if lead < 0:
        c = -c
    residual = float(np.max(np.abs(m @ c)))
    return SexticFit(tuple(float(v) for v in c), residual, tuple(float(v) for v in sv))


def fit_to_exact(fit: SexticFit, max_denominator: int = 12) -> Polynomial:
    """Round fitted coefficients to small rationals after scaling the leading one to 1."""
    c = np.array(fit.coeffs)
    c = c / next(v for v in c if abs(v) > 1e-9)
    return dual_sextic(*(Fraction(float(v)).limit_denominator(max_denominator) for v in c))


def direction_error(fit: SexticFit, expected: Sequence[float]) -> float:
    """Distance between unit coefficient vectors, insensitive to overall sign."""
    e = np.asarray(expected, dtype=float)
    e = e / np.linalg.norm(e)
    c = np.asarray(fit.coeffs)
    return float(min(np.linalg.norm(c - e), np.linalg.norm(c + e)))
