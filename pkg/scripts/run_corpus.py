"""Summary table of the bundled corpus: sweep, big, little and pseudo-sweep counts."""

import argparse
import time
from dataclasses import dataclass, field

from sweepscope import bigom, io
from sweepscope import matroidflats as mf
from sweepscope import pointconfig as pc
from sweepscope import pseudosweep as ps
from sweepscope.sweep import SweepOrientedMatroid


@dataclass
class Config:
    names: list[str] = field(default_factory=lambda: list(io.CORPUS_CONFIGS))
    verify_axioms: bool = False


def row(name: str, cfg: Config) -> dict:
    t0 = time.perf_counter()
    A = io.load_config(name)
    S = SweepOrientedMatroid(pc.sweep_om(A), check=False)
    B = bigom.big_om(S)
    L = pc.little_om(A)
    out = {
        "name": name, "n": A.n, "rank": S.rank,
        "sweeps": len(S.om), "perms": len(S.om.topes),
        "bound": mf.stirling_bound(S.n, S.rank),
        "big": len(B), "little_topes": len(L.topes),
        "pseudo": len(ps.enumerate_pseudo_sweeps(L)),
        "max_pseudo": len(ps.enumerate_maximal(L)),
        "dilworth": mf.is_dilworth(S, L).ok,
    }
    if cfg.verify_axioms:
        from sweepscope.orientedmatroid import verify_covector_axioms

        out["big_axioms"] = verify_covector_axioms(B).ok
    out["secs"] = round(time.perf_counter() - t0, 2)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*")
    ap.add_argument("--verify-axioms", action="store_true")
    args = ap.parse_args()
    cfg = Config(args.names or list(io.CORPUS_CONFIGS), args.verify_axioms)
    rows = [row(name, cfg) for name in cfg.names]
    keys = list(rows[0])
    widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
    print("  ".join(k.ljust(widths[k]) for k in keys))
    for r in rows:
        print("  ".join(str(r[k]).ljust(widths[k]) for k in keys))


if __name__ == "__main__":
    main()
