"""Command-line interface: ``sweepscope <command> ...`` prints JSON."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import allowable as al
from . import bigom, matroidflats as mf, pointconfig as pc, pseudosweep as ps
from . import io
from .orientedmatroid import (
    CapExceeded,
    InvalidOrientedMatroid,
    OrientedMatroid,
    Poset,
    order_complex_euler,
    verify_covector_axioms,
)
from .signvec import parse_label
from .sweep import SweepOrientedMatroid, is_sweep_om, poset_of_sweeps


class ValidationFailure(Exception):
    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


# --------------------------------------------------------------------------
# helpers

def _sweep_source(path: str) -> tuple[SweepOrientedMatroid, pc.PointConfiguration | None]:
    obj = io.load(path)
    if isinstance(obj, pc.PointConfiguration):
        return SweepOrientedMatroid(pc.sweep_om(obj), check=False), obj
    if isinstance(obj, OrientedMatroid):
        rep = is_sweep_om(obj)
        if not rep.ok:
            raise ValidationFailure("input is not a sweep oriented matroid",
                                    {"witness": str(rep.witness), "triple": rep.triple})
        return SweepOrientedMatroid(obj, check=False), None
    raise io.FormatError("expected a configuration or a sweep oriented matroid")


def _om(path: str, big: bool = False) -> OrientedMatroid:
    obj = io.load(path)
    if big and isinstance(obj, pc.PointConfiguration):
        return bigom.big_om(pc.sweep_om(obj))
    if not isinstance(obj, OrientedMatroid):
        raise io.FormatError("expected an oriented matroid file")
    return obj


def _config(path: str) -> pc.PointConfiguration:
    obj = io.load(path)
    if not isinstance(obj, pc.PointConfiguration):
        raise io.FormatError("expected a point configuration")
    return obj


def _frac(x: Fraction) -> str:
    return str(x)


def _poset_json(P: Poset) -> dict:
    return P.to_json()


# --------------------------------------------------------------------------
# commands

def cmd_sweeps(a) -> dict:
    S, _ = _sweep_source(a.input)
    P = poset_of_sweeps(S)
    return {"n": S.n, "rank": S.rank, "covectors": len(S.om), "topes": len(S.om.topes),
            "sweep_permutations": [str(p) for p in S.sweep_permutations()],
            "poset": _poset_json(P)}


def cmd_littleom(a) -> dict:
    obj = io.load(a.input)
    if isinstance(obj, pc.PointConfiguration):
        return io.om_to_json(pc.little_om(obj), a.kind)
    S, _ = _sweep_source(a.input)
    return io.om_to_json(bigom.little_om(S), a.kind)


def cmd_bigom(a) -> dict:
    obj = io.load(a.input)
    if isinstance(obj, pc.PointConfiguration):
        M = bigom.big_om(pc.sweep_om(obj))
    else:
        S, _ = _sweep_source(a.input)
        M = bigom.big_om(S)
    return io.om_to_json(M, a.kind)


def cmd_check_om(a) -> dict:
    text = io.read_text(a.input)
    try:
        S = io.covector_set_from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise io.FormatError(str(exc)) from None
    rep = verify_covector_axioms(S)
    out = {"axioms": rep.to_json()}
    try:
        n = S.ground.pairs_n()
    except ValueError:
        n = None
    if n is not None and rep.ok:
        t = is_sweep_om(OrientedMatroid(S.ground, S.covectors, check=False))
        out["sweep"] = {"ok": t.ok, "witness": str(t.witness) if t.witness else None,
                        "triple": t.triple}
    if not rep.ok:
        raise ValidationFailure("covector axioms fail", out)
    return out


def cmd_recognize_big(a) -> dict:
    M = _om(a.input, big=True)
    try:
        r = bigom.recognize_big_om(M)
    except ValueError as exc:
        raise io.FormatError(str(exc)) from None
    out = {"ok": r.ok, "reorientation": sorted(str(x) for x in r.reorientation), "reason": r.reason}
    if not r.ok:
        raise ValidationFailure("not a big oriented matroid", out)
    return out


def _flat_arg(M: OrientedMatroid, spec: str) -> list[int]:
    if spec == "pairs":
        return [i for i, lab in enumerate(M.ground) if str(lab).startswith("e:")]
    try:
        labels = json.loads(spec)
    except json.JSONDecodeError:
        labels = spec.split(";")
    return [M.ground.index(parse_label(str(lab))) for lab in labels]


def cmd_modular(a) -> dict:
    M = _om(a.input, big=True)
    try:
        F = _flat_arg(M, a.flat)
    except ValueError as exc:
        raise io.FormatError(str(exc)) from None
    if not bigom.is_hyperplane(M, F):
        raise ValidationFailure("flat is not a hyperplane", {"flat": [str(M.ground[i]) for i in F]})
    return {"flat": [str(M.ground[i]) for i in F],
            "modular": bigom.is_modular_hyperplane(M, F),
            "tight": bigom.is_tight_modular_hyperplane(M, F)}


def cmd_dilworth(a) -> dict:
    S, A = _sweep_source(a.input)
    little = pc.little_om(A) if A is not None else bigom.little_om(S)
    N = mf.UnorientedMatroid.of(little)
    T = mf.UnorientedMatroid.of(S.om)
    D = mf.DilworthTruncation(N)
    flats = []
    for f, r in zip(T.lattice.flats, T.lattice.ranks):
        flats.append({"flat": sorted(str(x) for x in T.lattice.flat_sets()[T.lattice.flats.index(f)]),
                      "sweep_rank": r, "dilworth_rank": D.rank_of(f)})
    w = mf.weak_map_check(D, T)
    v = mf.is_dilworth(S, little)
    return {"flats": flats,
            "is_dilworth": {"ok": v.ok, "witness": sorted(str(x) for x in v.witness) if v.witness else None},
            "weak_map": {"ok": w.ok,
                         "witness": sorted(str(x) for x in w.witness) if w.witness else None,
                         "strict_drops": [sorted(str(x) for x in d) for d in w.strict_drops]}}


def cmd_bound(a) -> dict:
    try:
        if a.rank is not None:
            return {"n": a.n, "rank": a.rank, "bound": mf.stirling_bound(a.n, a.rank)}
        return {"n": a.n, "bounds": {str(r): mf.stirling_bound(a.n, r) for r in range(a.n)}}
    except ValueError as exc:
        raise io.FormatError(str(exc)) from None


def _count(M: OrientedMatroid) -> dict:
    L = M.flat_lattice()
    lvz = mf.tope_count(L)
    return {"rank": L.rank, "characteristic_polynomial": mf.characteristic_polynomial(L),
            "lvz": lvz, "topes": len(M.topes), "agree": lvz == len(M.topes)}


def cmd_count(a) -> dict:
    obj = io.load(a.input)
    if isinstance(obj, pc.PointConfiguration):
        return {"sweep": _count(pc.sweep_om(obj)), "little": _count(pc.little_om(obj))}
    if isinstance(obj, OrientedMatroid):
        return _count(obj)
    raise io.FormatError("expected a configuration or an oriented matroid")


def cmd_pseudosweeps(a) -> dict:
    obj = io.load(a.input)
    M = pc.little_om(obj) if isinstance(obj, pc.PointConfiguration) else obj
    if not isinstance(M, OrientedMatroid):
        raise io.FormatError("expected a configuration or an acyclic oriented matroid")
    if not M.is_acyclic:
        raise ValidationFailure("oriented matroid is not acyclic")
    try:
        parts = ps.enumerate_maximal(M, a.cap) if a.maximal_only else ps.enumerate_pseudo_sweeps(M, a.cap)
    except ps.EnumerationCapExceeded as exc:
        raise ValidationFailure(str(exc)) from None
    return {"count": len(parts), "maximal_only": a.maximal_only,
            "pseudosweeps": [str(p) for p in parts]}


def cmd_ksets(a) -> dict:
    A = _config(a.input)
    try:
        ks = pc.k_sets(A, a.k)
    except ValueError as exc:
        raise io.FormatError(str(exc)) from None
    return {"k": a.k, "count": len(ks), "ksets": sorted(sorted(s) for s in ks)}


def cmd_zonotope(a) -> dict:
    A = _config(a.input)
    S = SweepOrientedMatroid(pc.sweep_om(A), check=False)
    verts = pc.sweep_polytope_vertices(A, S.om)
    rows = sorted(((str(S.partition_of(t)), [_frac(x) for x in v]) for t, v in verts.items()))
    return {"count": len(rows), "vertices": [{"sweep": s, "vertex": v} for s, v in rows]}


def cmd_veronese(a) -> dict:
    A = _config(a.input)
    try:
        return pc.veronese(A, a.degree).to_json()
    except ValueError as exc:
        raise io.FormatError(str(exc)) from None


def cmd_allowable(a) -> dict:
    perms = io.load(a.input)
    if not isinstance(perms, list):
        raise io.FormatError("expected a list of permutations")
    try:
        if a.sequence:
            rep = al.verify_allowable_sequence(perms)
            if not rep.ok:
                raise ValidationFailure("not an allowable sequence", rep.to_json())
            return rep.to_json()
        g = al.is_allowable_graph(perms)
    except ValueError as exc:
        raise io.FormatError(str(exc)) from None
    T = al.topes_from_permutations(perms)
    out = {"graph": g.to_json(), "acycloid": al.acycloid_check(T).to_json(),
           "sweep_acycloid": al.is_sweep_acycloid(T).ok}
    if not g.ok:
        raise ValidationFailure("not an allowable graph of permutations", out)
    out["characterization"] = al.characterization_report(perms).to_json()
    return out


def cmd_euler(a) -> dict:
    obj = io.load(a.input)
    if isinstance(obj, dict):
        n = len(obj["elements"])
        P = Poset.from_covers(obj["elements"], [tuple(c) for c in obj["covers"]])
        return {"elements": n, "euler": order_complex_euler(P)}
    if isinstance(obj, pc.PointConfiguration):
        obj = pc.sweep_om(obj)
    if not isinstance(obj, OrientedMatroid):
        raise io.FormatError("expected an oriented matroid, configuration or poset")
    try:
        obj.ground.pairs_n()
        is_pairs = True
    except ValueError:
        is_pairs = False
    if is_pairs and is_sweep_om(obj).ok:
        S = SweepOrientedMatroid(obj, check=False)
        r = S.rank
        return {"kind": "sweep", "rank": r, "euler": order_complex_euler(poset_of_sweeps(S, nontrivial=True)),
                "sphere_value": 1 + (-1) ** (r - 1)}
    if not obj.is_acyclic:
        raise ValidationFailure("neither a sweep OM nor an acyclic OM")
    r = obj.rank
    return {"kind": "pseudosweep", "rank": r, "euler": ps.pseudo_sweep_euler(obj),
            "sphere_value": 1 + (-1) ** (r - 2)}


COMMANDS = {
    "sweeps": cmd_sweeps, "littleom": cmd_littleom, "bigom": cmd_bigom, "check-om": cmd_check_om,
    "recognize-big": cmd_recognize_big, "modular": cmd_modular, "dilworth": cmd_dilworth,
    "bound": cmd_bound, "count": cmd_count, "pseudosweeps": cmd_pseudosweeps, "ksets": cmd_ksets,
    "zonotope": cmd_zonotope, "veronese": cmd_veronese, "allowable": cmd_allowable, "euler": cmd_euler,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", action="store_true", default=argparse.SUPPRESS,
                        help="human-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="accepted; enumeration runs single-threaded")
    common.add_argument("-o", "--output", default=argparse.SUPPRESS,
                        help="write to this file instead of stdout")
    p = argparse.ArgumentParser(prog="sweepscope", description=__doc__, parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name != "bound":
            sp.add_argument("input", help="JSON/CSV file or bundled corpus name")
        if name in ("littleom", "bigom"):
            sp.add_argument("--kind", choices=["covectors", "topes", "cocircuits"], default="covectors")
        if name == "modular":
            sp.add_argument("--flat", required=True,
                            help="'pairs', a JSON list of labels, or labels separated by ';'")
        if name == "bound":
            sp.add_argument("--n", type=int, required=True)
            sp.add_argument("--rank", type=int)
        if name == "pseudosweeps":
            sp.add_argument("--maximal-only", action="store_true")
            sp.add_argument("--cap", type=int, default=ps.DEFAULT_CAP)
        if name == "ksets":
            sp.add_argument("--k", type=int, required=True)
        if name == "veronese":
            sp.add_argument("--degree", type=int, required=True)
        if name == "allowable":
            sp.add_argument("--sequence", action="store_true",
                            help="check the list as an allowable sequence")
    return p


def render_table(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_table(v, indent + 1))
            else:
                lines.append(f"{pad}{k:<24} {_cell(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                lines.append(pad + "  ".join(f"{k}={_cell(x)}" for k, x in v.items()))
            else:
                lines.append(pad + _cell(v))
    else:
        lines.append(pad + _cell(obj))
    return "\n".join(lines)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v) and len(v) <= 8


def _cell(v) -> str:
    if isinstance(v, list):
        return " ".join(_cell(x) for x in v) if all(not isinstance(x, list) for x in v) \
            else " ".join("(" + _cell(x) + ")" for x in v)
    return str(v)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    # the shared options are suppressed so either position works; fill them in here
    for key, default in (("table", False), ("threads", 1), ("output", None)):
        if not hasattr(a, key):
            setattr(a, key, default)
    try:
        result = COMMANDS[a.command](a)
        code = 0
    except ValidationFailure as exc:
        result = {"error": str(exc), "kind": "validation", **exc.payload}
        code = 1
    except InvalidOrientedMatroid as exc:
        result = {"error": str(exc), "kind": "validation"}
        code = 1
    except (CapExceeded, ps.EnumerationCapExceeded) as exc:
        result = {"error": str(exc), "kind": "cap-exceeded"}
        code = 1
    except io.FormatError as exc:
        result = {"error": str(exc), "kind": "malformed-input"}
        code = 2
    text = render_table(result) if a.table else io.dumps(result)
    if a.output:
        Path(a.output).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())
