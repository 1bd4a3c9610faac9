"""Exact chromatic numbers of the small family members next to their predicted values."""

import argparse
import json
from dataclasses import dataclass

from hypercolor.chromatic import strong_chromatic_number, weak_chromatic_number
from hypercolor.constructions import construct_F, construct_F_prime, construct_H, construct_H_d


@dataclass
class Config:
    f_max: int = 5
    h_max: int = 4
    deadline: float = 600.0


def run(cfg: Config) -> list[dict]:
    rows = []
    for m in range(1, cfg.f_max + 1):
        res = strong_chromatic_number(construct_F(m).hypergraph, cfg.deadline)
        rows.append({"family": "F", "m": m, "strong": res.value, "predicted": 2 * m + 1})
    for m in range(2, cfg.f_max + 1):
        res = strong_chromatic_number(construct_F_prime(m).hypergraph, cfg.deadline)
        rows.append({"family": "Fprime", "m": m, "strong": res.value, "predicted": 2 * m})
    for m in range(2, cfg.h_max + 1):
        res = weak_chromatic_number(construct_H(m).hypergraph, cfg.deadline)
        rows.append({"family": "H", "m": m, "weak": res.value, "interval": [res.lower, res.upper],
                     "refuted": res.refuted, "nodes": res.nodes, "predicted": m})
    for m, d in [(3, 4), (3, 5)]:
        res = weak_chromatic_number(construct_H_d(m, d).hypergraph, cfg.deadline)
        rows.append({"family": "Hd", "m": m, "d": d, "weak": res.value, "predicted_lower": m})
    return rows


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--deadline", type=float, default=Config.deadline)
    args = p.parse_args()
    for row in run(Config(deadline=args.deadline)):
        print(json.dumps(row))
