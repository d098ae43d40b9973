"""Write the polytope SVGs: T_2 (n = 3) and the n = 4 lattice projection at r = 2."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from hjps.plot import plot_polytope


@dataclass
class Config:
    out_dir: Path = Path("figures")


def main(cfg: Config) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for n, r, view in ((3, 2, "2d"), (3, 2, "3d"), (4, 2, "3d"), (4, 4, "3d")):
        path = plot_polytope(n, r, cfg.out_dir / f"polytope_n{n}_r{r}_{view}.svg", view)
        print(path)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Config.out_dir)
    main(Config(ap.parse_args().out_dir))
