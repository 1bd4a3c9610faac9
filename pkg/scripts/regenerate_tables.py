"""Write the strong / weak-lower / weak-upper grids as CSV for several n."""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from hypercolor.bounds import bounds_table, table_csv


@dataclass
class Config:
    d_max: int = 8
    k_max: int = 7
    sizes: list[int] = field(default_factory=lambda: [10, 100, 1000])
    out_dir: Path = Path("tables")


def run(cfg: Config) -> list[Path]:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for n in cfg.sizes:
        path = cfg.out_dir / f"bounds_n{n}.csv"
        path.write_text(table_csv(bounds_table(cfg.d_max, cfg.k_max, n)))
        written.append(path)
    return written


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out-dir", type=Path, default=Config.out_dir)
    p.add_argument("--sizes", type=int, nargs="+")
    args = p.parse_args()
    cfg = Config(out_dir=args.out_dir)
    if args.sizes:
        cfg.sizes = args.sizes
    for path in run(cfg):
        print(path)
