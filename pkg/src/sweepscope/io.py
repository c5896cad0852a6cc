"""JSON and CSV formats, and the bundled corpus."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Any

from .orientedmatroid import (
    InvalidOrientedMatroid,
    OrientedMatroid,
    cocircuit_closure,
    covectors_from_topes,
)
from .pointconfig import PointConfiguration
from .signvec import GroundSet, SignVector

CORPUS_CONFIGS = [
    "triangle", "simplex3", "simplex4", "simplex5", "crosspolytope2", "crosspolytope3",
    "square", "collinear3", "generic4", "hexagon",
]


class FormatError(ValueError):
    """Input that cannot be parsed."""


def read_text(path: str | Path) -> str:
    p = Path(path)
    if not p.exists():
        found = corpus_path(str(path))
        if found is None:
            raise FormatError(f"no such file: {path}")
        p = found
    return p.read_text()


def corpus_path(name: str) -> Path | None:
    stem = Path(name).name
    if not stem.endswith(".json"):
        stem += ".json"
    p = resources.files("sweepscope") / "corpus" / stem
    return Path(str(p)) if p.is_file() else None


def load(path: str | Path) -> Any:
    text = read_text(path)
    if str(path).endswith(".csv"):
        try:
            return PointConfiguration.from_csv(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"malformed CSV: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from None
    return parse(obj)


def parse(obj: Any):
    try:
        if isinstance(obj, list):
            return [tuple(int(x) for x in p) for p in obj]
        if isinstance(obj, dict) and "ground" in obj:
            return om_from_json(obj)
        if isinstance(obj, dict) and "points" in obj:
            return PointConfiguration.from_json(obj)
        if isinstance(obj, dict) and "permutations" in obj:
            return [tuple(int(x) for x in p) for p in obj["permutations"]]
        if isinstance(obj, dict) and "elements" in obj:
            return obj
    except InvalidOrientedMatroid:
        raise
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise FormatError(str(exc)) from None
    raise FormatError("unrecognised input object")


def load_config(name: str) -> PointConfiguration:
    obj = load(name)
    if not isinstance(obj, PointConfiguration):
        raise FormatError(f"{name} is not a point configuration")
    return obj


def om_to_json(M, kind: str = "covectors") -> dict:
    if kind == "covectors":
        vecs = M.sorted()
    elif kind == "topes":
        vecs = sorted(M.topes, key=str)
    elif kind == "cocircuits":
        vecs = sorted(M.cocircuits, key=str)
    else:
        raise ValueError(kind)
    return {"ground": M.ground.to_json(), "from": kind, kind: [str(v) for v in vecs]}


def om_from_json(obj: dict, check: bool = True) -> OrientedMatroid:
    ground = GroundSet.from_json(obj["ground"])
    kind = obj.get("from") or next(k for k in ("covectors", "topes", "cocircuits") if k in obj)
    if kind not in ("covectors", "topes", "cocircuits"):
        raise FormatError(f"unknown 'from' value {kind!r}")
    vecs = [SignVector.parse(s) for s in obj[kind]]
    for v in vecs:
        if len(v) != len(ground):
            raise FormatError(f"sign vector {v} does not match the ground set size {len(ground)}")
    if kind == "covectors":
        S = vecs
    elif kind == "topes":
        S = covectors_from_topes(vecs, ground).covectors
    else:
        S = cocircuit_closure(vecs, ground).covectors
    return OrientedMatroid(ground, S, check=check)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def covector_set_from_json(obj: dict):
    """Raw covector set (no axiom check) from OM JSON given by covectors."""
    from .orientedmatroid import CovectorSet

    ground = GroundSet.from_json(obj["ground"])
    kind = obj.get("from", "covectors")
    if kind != "covectors":
        return om_from_json(obj, check=False)
    vecs = [SignVector.parse(s) for s in obj["covectors"]]
    return CovectorSet(ground, vecs)
