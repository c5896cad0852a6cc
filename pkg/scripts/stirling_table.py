"""Sweep permutation counts of random configurations against the Stirling bound.

Generic configurations (no repeated difference directions up to scaling,
affinely spanning) should attain the bound; degenerate ones fall below it.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from sweepscope import matroidflats as mf
from sweepscope import pointconfig as pc


@dataclass
class Config:
    n: int = 5
    dim: int = 2
    trials: int = 50
    coord_range: int = 20
    seed: int = 0


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally: Counter = Counter()
    for _ in range(cfg.trials):
        pts = [tuple(rng.randint(-cfg.coord_range, cfg.coord_range) for _ in range(cfg.dim))
               for _ in range(cfg.n)]
        M = pc.sweep_om(pc.PointConfiguration(pts))
        bound = mf.stirling_bound(cfg.n, M.rank)
        count = len(M.topes)
        assert count <= bound, (pts, count, bound)
        tally[(M.rank, count, bound)] += 1
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for f, v in Config().__dict__.items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    print(f"n={cfg.n} dim={cfg.dim} trials={cfg.trials}")
    print("rank  sweep-perms  bound  configs")
    for (r, c, b), k in sorted(run(cfg).items()):
        print(f"{r:<5} {c:<12} {b:<6} {k}")


if __name__ == "__main__":
    main()
