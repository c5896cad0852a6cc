"""Exact point and vector configurations and their realizable constructions."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from . import _linalg
from .orientedmatroid import OrientedMatroid, cocircuit_closure
from .signvec import GroundSet, SignVector, sign
from .sweep import OrderedPartition

Vector = tuple[Fraction, ...]


def _vec(v: Iterable) -> Vector:
    return tuple(_linalg.to_fraction(x) for x in v)


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple[Vector, ...]
    dim: int

    def __init__(self, points: Iterable[Iterable], dim: int | None = None):
        pts = tuple(_vec(p) for p in points)
        if dim is None:
            if not pts:
                raise ValueError("cannot infer the dimension of an empty configuration")
            dim = len(pts[0])
        for p in pts:
            if len(p) != dim:
                raise ValueError(f"point {p} does not have {dim} coordinates")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "dim", dim)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return self.n

    def has_repeated_points(self) -> bool:
        return len(set(self.points)) != self.n

    def differences(self) -> list[Vector]:
        return [tuple(b - a for a, b in zip(self.points[i], self.points[j]))
                for i, j in combinations(range(self.n), 2)]

    def homogenized(self) -> list[Vector]:
        return [p + (Fraction(1),) for p in self.points]

    def to_json(self):
        return {"dim": self.dim, "points": [[str(x) for x in p] for p in self.points]}

    @classmethod
    def from_json(cls, obj) -> "PointConfiguration":
        try:
            pts = obj["points"]
            dim = int(obj.get("dim", len(pts[0]) if pts else 0))
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed configuration: {exc}") from None
        return cls([[Fraction(str(x)) for x in p] for p in pts], dim)

    @classmethod
    def from_csv(cls, text: str) -> "PointConfiguration":
        rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
        return cls([[Fraction(c.strip()) for c in r] for r in rows])


@dataclass(frozen=True)
class VectorConfiguration:
    vectors: tuple[Vector, ...]
    ground: GroundSet
    dim: int

    def __init__(self, vectors: Iterable[Iterable], ground=None, dim: int | None = None):
        vs = tuple(_vec(v) for v in vectors)
        if dim is None:
            dim = len(vs[0]) if vs else 0
        if any(len(v) != dim for v in vs):
            raise ValueError("all vectors must have the same dimension")
        g = GroundSet(ground) if ground is not None else GroundSet(f"v{i + 1}" for i in range(len(vs)))
        if len(g) != len(vs):
            raise ValueError("labels and vectors differ in number")
        object.__setattr__(self, "vectors", vs)
        object.__setattr__(self, "ground", g)
        object.__setattr__(self, "dim", dim)


def cocircuit_signs(vectors: Sequence[Vector]) -> tuple[set[SignVector], int]:
    """Cocircuits of a vector configuration and its rank."""
    m = len(vectors)
    if m == 0:
        return set(), 0
    C, basis = _linalg.coordinates(vectors)
    r = len(basis)
    if r == 0:
        return set(), 0
    out: set[SignVector] = set()
    for sub in combinations(range(m), r - 1):
        rows = [C[i] for i in sub]
        if r > 1 and _linalg.rank(rows) != r - 1:
            continue
        (u,) = _linalg.nullspace(rows, r)
        x = SignVector(sign(_linalg.dot(u, c)) for c in C)
        out.add(x)
        out.add(-x)
    return out, r


def realizable_om(V: VectorConfiguration) -> OrientedMatroid:
    """Covectors {sign <u, v_i>} computed exactly from cocircuits."""
    cocs, _ = cocircuit_signs(V.vectors)
    S = cocircuit_closure(cocs, V.ground)
    return OrientedMatroid(V.ground, S.covectors, check=False)


def vector_rank(vectors: Sequence[Vector]) -> int:
    return _linalg.rank(vectors) if vectors else 0


def little_om(A: PointConfiguration) -> OrientedMatroid:
    return realizable_om(VectorConfiguration(A.homogenized(), GroundSet.points(A.n)))


def sweep_om(A: PointConfiguration) -> OrientedMatroid:
    return realizable_om(VectorConfiguration(A.differences(), GroundSet.pairs(A.n), A.dim))


def big_om_realizable(A: PointConfiguration) -> OrientedMatroid:
    vecs = A.homogenized() + [d + (Fraction(0),) for d in A.differences()]
    return realizable_om(VectorConfiguration(vecs, GroundSet.points_and_pairs(A.n), A.dim + 1))


def sweep_of_direction(A: PointConfiguration, u: Sequence) -> OrderedPartition:
    u = _vec(u)
    if len(u) != A.dim:
        raise ValueError(f"direction has {len(u)} coordinates, configuration has dimension {A.dim}")
    vals = [_linalg.dot(u, p) for p in A.points]
    levels = sorted(set(vals))
    return OrderedPartition([[i + 1 for i, v in enumerate(vals) if v == lev] for lev in levels])


# --------------------------------------------------------------------------
# k-sets

def _fm_feasible(rows: list[tuple[list[Fraction], Fraction]], nvars: int) -> bool:
    """Fourier-Motzkin: does some x satisfy a.x <= b for every (a, b)?"""
    rows = _dedupe(rows)
    for k in range(nvars - 1, -1, -1):
        if rows is None:
            return False
        pos, neg, rest = [], [], []
        for a, b in rows:
            (pos if a[k] > 0 else neg if a[k] < 0 else rest).append((a, b))
        new = [(a[:k], b) for a, b in rest]
        for ap, bp in pos:
            for an, bn in neg:
                lp, ln = -an[k], ap[k]
                new.append(([lp * x + ln * y for x, y in zip(ap[:k], an[:k])], lp * bp + ln * bn))
        rows = _dedupe(new)
    return rows is not None


def _dedupe(rows):
    seen = {}
    for a, b in rows:
        scale = next((abs(x) for x in a if x != 0), None)
        if scale is None:
            if b < 0:
                return None
            continue
        key = tuple(x / scale for x in a)
        bb = b / scale
        if key not in seen or bb < seen[key]:
            seen[key] = bb
    return [(list(k), b) for k, b in seen.items()]


def is_strictly_separable(A: PointConfiguration, S: Iterable[int]) -> bool:
    """Is there an affine function negative on S and positive off S (0-based)?

    Decided as feasibility of <u,a_i> - c <= -1 on S and >= 1 elsewhere.
    """
    S = set(S)
    rows = []
    for i, p in enumerate(A.points):
        a = list(p) + [Fraction(-1)]
        if i in S:
            rows.append((a, Fraction(-1)))
        else:
            rows.append(([-x for x in a], Fraction(-1)))
    return _fm_feasible(rows, A.dim + 1)


def k_sets(A: PointConfiguration, k: int) -> set[frozenset[int]]:
    """k-subsets (1-based labels) strictly separable from the rest."""
    if not 1 <= k <= A.n:
        raise ValueError(f"k={k} outside 1..{A.n}")
    return {frozenset(i + 1 for i in S) for S in combinations(range(A.n), k)
            if is_strictly_separable(A, S)}


def barycenter(A: PointConfiguration, S: Iterable[int]) -> Vector:
    S = list(S)
    return tuple(sum((A.points[i - 1][c] for i in S), Fraction(0)) / len(S) for c in range(A.dim))


def k_set_polytope_vertices(A: PointConfiguration, k: int) -> set[Vector]:
    """Barycenters of the k-sets; each is the unique minimizer of a linear functional."""
    return {barycenter(A, S) for S in k_sets(A, k)}


def sweep_polytope_vertices(A: PointConfiguration, om: OrientedMatroid | None = None) -> dict:
    om = om or sweep_om(A)
    diffs = A.differences()
    out = {}
    for t in om.topes:
        out[t] = tuple(sum((Fraction(s, 2) * d[c] for s, d in zip(t, diffs)), Fraction(0))
                       for c in range(A.dim))
    return out


def monomial_exponents(d: int, D: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree <= D, by degree then lexicographically descending."""
    out = []
    for deg in range(D + 1):
        degs = set()
        for combo in combinations_with_replacement(range(d), deg):
            e = [0] * d
            for c in combo:
                e[c] += 1
            degs.add(tuple(e))
        out.extend(sorted(degs, reverse=True))
    return out


def veronese(A: PointConfiguration, D: int) -> PointConfiguration:
    if D < 1:
        raise ValueError("degree must be at least 1")
    exps = monomial_exponents(A.dim, D)
    pts = []
    for p in A.points:
        row = []
        for e in exps:
            v = Fraction(1)
            for x, k in zip(p, e):
                v *= x ** k
            row.append(v)
        pts.append(row)
    return PointConfiguration(pts, len(exps))
