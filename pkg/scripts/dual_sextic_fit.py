"""Fit sampled tangent lines of the AST cubic into the sextic family and report residuals.

The last rows are a negative control: the same lines with Gaussian noise added.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from hjps.dualcurve import fit_dual_sextic, fit_to_exact, perturb_samples, sample_tangents
from hjps.polyring import format_poly


@dataclass
class Config:
    gammas: list[float] = field(default_factory=lambda: [0.0, 0.5, 1.0, 2.0, -1.0, 5.0])
    samples: int = 24
    seed: int = 0
    noise: float = 1e-3


def main(cfg: Config) -> None:
    print(f"{'gamma':>6} {'residual':>10}  {'(a, b, c, d)':<44} rounded")
    for g in cfg.gammas:
        fit = fit_dual_sextic(sample_tangents(g, cfg.samples, cfg.seed))
        coeffs = ", ".join(f"{c:+.6f}" for c in fit.coeffs)
        rounded = format_poly(fit_to_exact(fit)) if g == 0.0 else ""
        print(f"{g:>6g} {fit.residual:>10.2e}  ({coeffs})  {rounded}")
    print(f"noisy control, sigma = {cfg.noise:g}")
    for g in cfg.gammas:
        noisy = perturb_samples(sample_tangents(g, cfg.samples, cfg.seed), cfg.noise, cfg.seed + 1)
        print(f"{g:>6g} {fit_dual_sextic(noisy).residual:>10.2e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--noise", type=float, default=Config.noise)
    a = ap.parse_args()
    main(Config(samples=a.samples, seed=a.seed, noise=a.noise))
