"""Certify every family instance both combinatorially and geometrically, with timings."""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from hypercolor.constructions import FAMILIES
from hypercolor.geometry import verify_embedding
from hypercolor.momentcurve import MomentOrder, certify_order


@dataclass
class Config:
    instances: list = field(default_factory=lambda: [
        ("F", {"m": m}) for m in range(1, 6)
    ] + [("Fprime", {"m": m}) for m in range(2, 5)] + [
        ("H", {"m": 3}), ("H", {"m": 4}),
        ("Hd", {"m": 3, "d": 4}), ("Hd", {"m": 3, "d": 5}),
        ("sqrt", {"m": 5}), ("complete", {"n": 6, "k": 3}),
    ])
    geometry: bool = True
    workers: int | None = None


def run(cfg: Config) -> list[dict]:
    rows = []
    for family, params in cfg.instances:
        fam = FAMILIES[family](**params)
        row = {"family": family, "params": params, "vertices": fam.hypergraph.n, "edges": len(fam.hypergraph.edges)}
        if isinstance(fam.certificate, MomentOrder):
            t0 = time.monotonic()
            cert = certify_order(fam.hypergraph, fam.certificate, escalate=fam.meta.get("escalate_default", False))
            row.update(order_valid=cert.valid, order_pairs=cert.checked_pairs, order_seconds=time.monotonic() - t0)
        if cfg.geometry:
            t0 = time.monotonic()
            verdict = verify_embedding(fam.hypergraph, fam.coordinates, workers=cfg.workers)
            row.update(geometry_valid=verdict.valid, geometry_seconds=time.monotonic() - t0)
        rows.append(row)
        print(json.dumps(row))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--no-geometry", action="store_true")
    p.add_argument("--workers", type=int)
    args = p.parse_args()
    cfg = Config(geometry=not args.no_geometry, workers=args.workers)
    print(json.dumps({"config": asdict(cfg)}))
    rows = run(cfg)
    ok = all(r.get("order_valid", True) and r.get("geometry_valid", True) for r in rows)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
