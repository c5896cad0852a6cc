"""Random centrally symmetric permutation sets: allowable-graph and characterization verdicts.

A harness for searching sweep acycloids that are not oriented matroids: any
allowable graph whose three verdicts disagree, or whose tope set is a sweep
acycloid without being an OM, is printed.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass
from itertools import permutations

from sweepscope import allowable as al


@dataclass
class Config:
    n: int = 4
    trials: int = 2000
    keep: float = 0.5
    seed: int = 2


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for f, v in Config().__dict__.items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=type(v), default=v)
    cfg = Config(**vars(ap.parse_args()))
    rng = random.Random(cfg.seed)
    half = [p for p in permutations(range(1, cfg.n + 1)) if p < p[::-1]]
    tally: Counter = Counter()
    for _ in range(cfg.trials):
        chosen = [p for p in half if rng.random() < cfg.keep]
        if not chosen:
            continue
        perms = chosen + [p[::-1] for p in chosen]
        rep = al.is_allowable_graph(perms)
        if not rep.ok:
            tally["rejected P2" if not rep.p2 else "rejected P3"] += 1
            continue
        c = al.characterization_report(perms)
        tally[f"allowable om={c.om} potential={c.potential_equals_sweeps} "
              f"contractions={c.contractions_allowable}"] += 1
        sweep_acycloid = al.is_sweep_acycloid(al.topes_from_permutations(perms)).ok
        if not c.agree or (sweep_acycloid and not c.om):
            print("interesting:", sorted(perms), c)
    for k, v in sorted(tally.items()):
        print(f"{v:6d}  {k}")


if __name__ == "__main__":
    main()
