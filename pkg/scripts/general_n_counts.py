"""Admissible-monomial counts for n >= 4, three ways: compositions, generic constraint search, monomial filter."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from hjps import enumeration as en
from hjps.classify import h_basis


@dataclass
class Config:
    cases: list[tuple[int, int]] = field(default_factory=lambda: [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (6, 1), (7, 1)])


def main(cfg: Config) -> int:
    print(f"{'n':>2} {'r':>2} {'N':>4} {'compositions':>12} {'search':>7} {'filter':>7} {'orbits':>6} {'sec':>6}")
    bad = 0
    for n, r in cfg.cases:
        t0 = time.perf_counter()
        system = en.constraint_system(n, r)
        comp = len(en.enumerate_compositions(n, r))
        search = en.generating_coefficient(system, system.weight)
        try:
            filt = str(len(en.monomial_filter_oracle(n, r)))
            orbits = str(h_basis(n, r).orbit_dimension)
        except en.EnumerationLimitError:
            filt = orbits = "-"
        ok = comp == search and filt in ("-", str(comp))
        bad += not ok
        dt = time.perf_counter() - t0
        print(f"{n:>2} {r:>2} {system.weight:>4} {comp:>12} {search:>7} {filt:>7} {orbits:>6} {dt:>6.2f}" + ("" if ok else "  MISMATCH"))
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--case", action="append", metavar="N,R", help="repeatable; default is a fixed table")
    args = ap.parse_args()
    cfg = Config() if not args.case else Config([tuple(int(v) for v in c.split(",")) for c in args.case])
    raise SystemExit(main(cfg))
