"""Dimension table for n = 3: triangle count, closed forms and Poincare coefficients side by side."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from hjps import enumeration as en


@dataclass
class Config:
    max_r: int = 20


def main(cfg: Config) -> int:
    series = en.poincare_coeffs(cfg.max_r)
    print(f"{'r':>3} {'degree':>6} {'|T_r|':>7} {'S1':>6} {'S2':>6} {'formula':>8} {'series':>8}")
    bad = 0
    for r in range(1, cfg.max_r + 1):
        brute = len(en.triangle_lattice_points(r))
        s1, s2 = en.card_s1(r), en.card_s2(r)
        formula = en.dim_h3(r - 1)
        ok = brute == s1 + s2 == formula == series[r]
        bad += not ok
        flag = "" if ok else "  MISMATCH"
        print(f"{r:>3} {3 * r:>6} {brute:>7} {s1:>6} {s2:>6} {formula:>8} {series[r]:>8}{flag}")
    print("all rows agree" if not bad else f"{bad} rows disagree")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-r", type=int, default=Config.max_r)
    raise SystemExit(main(Config(ap.parse_args().max_r)))
