"""How many maximal pseudo-sweeps of random planar configurations are not sweeps.

Counts use both enumerators (cellular strings of the little OM, and k-set
prefixes) and stop with an error if they disagree.
"""

import argparse
import random
from dataclasses import dataclass

from sweepscope import pointconfig as pc
from sweepscope import pseudosweep as ps
from sweepscope.sweep import SweepOrientedMatroid


@dataclass
class Config:
    n: int = 6
    trials: int = 20
    coord_range: int = 10
    seed: int = 1
    show_examples: int = 3


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for f, v in Config().__dict__.items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    print("sweeps  pseudo  extra  example")
    for _ in range(cfg.trials):
        pts = set()
        while len(pts) < cfg.n:
            pts.add((rng.randint(-cfg.coord_range, cfg.coord_range),
                     rng.randint(-cfg.coord_range, cfg.coord_range)))
        A = pc.PointConfiguration(sorted(pts))
        S = SweepOrientedMatroid(pc.sweep_om(A), check=False)
        sweeps = {p.as_permutation() for p in S.sweep_permutations() if p.is_permutation()}
        maximal = {p.as_permutation() for p in ps.enumerate_maximal(pc.little_om(A))}
        if maximal != ps.pseudo_sweep_permutations_by_ksets(A):
            raise SystemExit(f"enumerators disagree on {A.points}")
        extra = sorted(maximal - sweeps)
        ex = extra[0] if extra and cfg.show_examples > 0 else ""
        if extra:
            cfg.show_examples -= 1
        print(f"{len(sweeps):<7} {len(maximal):<7} {len(extra):<6} {ex}")


if __name__ == "__main__":
    main()
