"""Big and little oriented matroids of sweep oriented matroids.

The big OM lives on Points(1..n) followed by Pairs(n).  Each covector X of
the sweep OM with l blocks yields 2l+1 lifts X^k, one per position of an
affine hyperplane relative to the blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from . import _bits
from .orientedmatroid import OrientedMatroid
from .signvec import GroundSet, Pair, Point, SignVector
from .sweep import (
    SweepOrientedMatroid,
    is_transitive,
    n_from_pairs,
    pair_index,
    signvector_to_partition,
    transitivity_mask_check,
)


@dataclass(frozen=True)
class LiftedCovector:
    base: SignVector
    k: int
    combined: SignVector


def point_signs(p: Mapping[int, int], n: int, k: int) -> tuple[int, ...]:
    lo, hi = (k - 1) // 2, k // 2
    out = []
    for i in range(1, n + 1):
        b = p[i] + 1
        if b <= lo:
            out.append(-1)
        elif b > hi:
            out.append(1)
        else:
            out.append(0)
    return tuple(out)


def lift_covector(X, k: int, n: int | None = None) -> LiftedCovector:
    X = SignVector(X)
    n = n or n_from_pairs(len(X))
    I = signvector_to_partition(X, n)
    l = len(I)
    if not 1 <= k <= 2 * l + 1:
        raise ValueError(f"k={k} outside 1..{2 * l + 1}")
    pts = point_signs(I.position(), n, k)
    return LiftedCovector(X, k, SignVector(pts + tuple(X)))


def _lifts(X: SignVector, n: int):
    I = signvector_to_partition(X, n)
    p = I.position()
    for k in range(1, 2 * len(I) + 2):
        yield point_signs(p, n, k)


def big_om(M, n: int | None = None) -> OrientedMatroid:
    S = M if isinstance(M, SweepOrientedMatroid) else SweepOrientedMatroid(M)
    n = S.n
    vecs = set()
    for x in S.om.covectors:
        for pts in _lifts(x, n):
            vecs.add(pts + tuple(x))
    return OrientedMatroid(GroundSet.points_and_pairs(n), vecs, check=False)


def little_om(M) -> OrientedMatroid:
    S = M if isinstance(M, SweepOrientedMatroid) else SweepOrientedMatroid(M)
    return big_om(S).restriction(range(S.n))


def rank_zero_sweep_om(n: int) -> SweepOrientedMatroid:
    return SweepOrientedMatroid(OrientedMatroid(GroundSet.pairs(n), [(0,) * (n * (n - 1) // 2)],
                                                check=False))


# --------------------------------------------------------------------------
# hyperplanes and modularity

def _mask(M: OrientedMatroid, F) -> int:
    out = 0
    for f in F:
        i = f if isinstance(f, int) else M.ground.index(f)
        if not 0 <= i < M.size:
            raise ValueError(f"index {i} is not in the ground set")
        out |= 1 << i
    return out


def zero_masks(M: OrientedMatroid) -> np.ndarray:
    pk = M.packed
    return pk.full & ~pk.support


def is_hyperplane(M: OrientedMatroid, F) -> bool:
    fm = _mask(M, F)
    return any(fm == int(M.packed.full & ~s) for s in _bits.Packed(sorted(M.cocircuits, key=str),
                                                                     M.size).support.tolist())


def line_closure(M: OrientedMatroid, x: int, y: int) -> int:
    """Elements vanishing on every covector that vanishes on x and y."""
    z = zero_masks(M)
    need = (1 << x) | (1 << y)
    sel = z[(z & need) == need]
    out = M.packed.full
    for v in sel.tolist():
        out &= int(v)
    return out


def is_modular_hyperplane(M: OrientedMatroid, F) -> bool:
    if not is_hyperplane(M, F):
        raise ValueError("F is not a hyperplane")
    fm = _mask(M, F)
    rest = [e for e in range(M.size) if not fm >> e & 1 and e not in M.loops]
    for x, y in combinations(rest, 2):
        if M.parallel_class_of(x) == M.parallel_class_of(y):
            continue
        if line_closure(M, x, y) & fm == 0:
            return False
    return True


def is_tight_modular_hyperplane(M: OrientedMatroid, F) -> bool:
    """Tightness on the simplification of M."""
    if not is_modular_hyperplane(M, F):
        return False
    fm = _mask(M, F)
    simple, reps = M.simplification()
    fset = [k for k, e in enumerate(reps) if fm >> e & 1]
    for z in fset:
        sub = simple.deletion([z])
        keep = [k for k in range(simple.size) if k != z]
        f2 = [keep.index(k) for k in fset if k != z]
        try:
            if is_modular_hyperplane(sub, f2):
                return False
        except ValueError:
            continue
    return True


# --------------------------------------------------------------------------
# recognition

@dataclass
class Recognition:
    ok: bool
    reorientation: frozenset = frozenset()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check_ground(M: OrientedMatroid) -> int:
    g = M.ground
    pts = g.point_labels
    n = len(pts)
    if tuple(g) != tuple(GroundSet.points_and_pairs(n)):
        raise ValueError("ground set must be Points(1..n) followed by Pairs(n)")
    return n


def recognize_big_om(M: OrientedMatroid) -> Recognition:
    n = _check_ground(M)
    pairs_mask = ((1 << M.size) - 1) & ~((1 << n) - 1)
    Z = next((c for c in sorted(M.cocircuits, key=str)
              if _bits.mask_of(i for i, s in enumerate(c) if s == 0) == pairs_mask), None)
    if Z is None:
        return Recognition(False, reason="no cocircuit vanishes exactly on Pairs")
    idx = pair_index(n)
    A = M.sign_matrix
    for (i, j), k in idx.items():
        cols = A[:, [i - 1, j - 1, n + k]] == 0
        two = cols.sum(axis=1) >= 2
        if (two & ~cols.all(axis=1)).any():
            return Recognition(False, reason=f"two zeros do not force the third at p:{i}, p:{j}, e:{i},{j}")
    flip = {i for i in range(n) if Z[i] < 0}
    R = M.reorientation(flip) if flip else M
    A = R.sign_matrix
    for (i, j), k in idx.items():
        sel = (A[:, i - 1] < 0) & (A[:, j - 1] > 0)
        rows = np.nonzero(sel)[0]
        if len(rows) and A[rows[0], n + k] < 0:
            flip.add(n + k)
    R = M.reorientation(flip) if flip else M
    base = R.restriction(range(n, M.size))
    if not transitivity_mask_check(sorted(base.covectors), n).all():
        return Recognition(False, frozenset(M.ground[e] for e in flip),
                           reason="restriction to Pairs is not a sweep oriented matroid")
    if big_om(SweepOrientedMatroid(base, check=False)).covectors != R.covectors:
        return Recognition(False, frozenset(M.ground[e] for e in flip),
                           reason="reoriented matroid differs from the big OM of its Pairs restriction")
    return Recognition(True, frozenset(M.ground[e] for e in flip))


# --------------------------------------------------------------------------
# decorations

@dataclass
class Decoration:
    delta: dict = field(default_factory=dict)       # f -> frozenset of (i, j)
    epsilon: dict = field(default_factory=dict)     # (i, j) -> +1 / -1

    def __eq__(self, other):
        if not isinstance(other, Decoration):
            return NotImplemented
        a = {k: frozenset(v) for k, v in self.delta.items() if v}
        b = {k: frozenset(v) for k, v in other.delta.items() if v}
        return a == b and self.epsilon == other.epsilon

    def pair_owner(self) -> dict:
        out = {}
        for f, ps in self.delta.items():
            for p in ps:
                if p in out:
                    raise ValueError(f"pair {p} assigned to both {out[p]} and {f}")
                out[p] = f
        return out

    def to_json(self):
        return {"delta": {str(f): sorted([list(p) for p in ps]) for f, ps in self.delta.items()},
                "epsilon": {f"{i},{j}": "+" if s > 0 else "-" for (i, j), s in sorted(self.epsilon.items())}}

    @classmethod
    def from_json(cls, obj) -> "Decoration":
        delta = {f: frozenset(tuple(int(x) for x in p) for p in ps) for f, ps in obj["delta"].items()}
        eps = {}
        for key, s in obj.get("epsilon", {}).items():
            i, j = (int(x) for x in key.split(","))
            eps[(i, j)] = 1 if s == "+" else -1
        return cls(delta, eps)


def decoration_of(M: OrientedMatroid, F) -> Decoration:
    """Decoration induced on a modular hyperplane F by the other elements.

    The elements outside F are numbered 1..n in ground order.
    """
    fm = _mask(M, F)
    if not is_modular_hyperplane(M, F):
        raise ValueError("F is not a modular hyperplane")
    if M.loops or any(len(c) > 1 for c in M.parallelism_classes):
        raise ValueError("decorationOf needs a simple oriented matroid")
    outside = [e for e in range(M.size) if not fm >> e & 1]
    fidx = [e for e in range(M.size) if fm >> e & 1]
    A = M.sign_matrix
    if not any((A[:, outside] > 0).all(axis=1) & (A[:, fidx] == 0).all(axis=1)):
        raise ValueError("elements outside F are not in a common open halfspace of F")
    delta: dict = {M.ground[f]: set() for f in fidx}
    eps = {}
    for a, b in combinations(range(len(outside)), 2):
        x, y = outside[a], outside[b]
        meet = _bits.bits(line_closure(M, x, y) & fm)
        if len(meet) != 1:
            raise ValueError(f"line through {M.ground[x]}, {M.ground[y]} meets F in {len(meet)} elements")
        f = meet[0]
        pair = (a + 1, b + 1)
        delta[M.ground[f]].add(pair)
        rows = (A[:, x] == 0) & (A[:, y] != 0) & (A[:, y] == A[:, f])
        eps[pair] = 1 if rows.any() else -1
    return Decoration({k: frozenset(v) for k, v in delta.items()}, eps)


def extend_with_decoration(N: OrientedMatroid, dec: Decoration, n: int) -> OrientedMatroid:
    """The extension of N by points 1..n determined by a valid decoration.

    N is first expanded by Pairs(n), each pair parallel to its owner in F
    with sign epsilon; the pair part must be a sweep OM.  The X^k lifts are
    then applied using the pair part and the result restricted to
    Points ∪ F.
    """
    owner = dec.pair_owner()
    all_pairs = set(combinations(range(1, n + 1), 2))
    if set(owner) != all_pairs:
        raise ValueError("delta does not partition Pairs(n)")
    if set(dec.epsilon) != all_pairs or any(s not in (1, -1) for s in dec.epsilon.values()):
        raise ValueError("epsilon must assign + or - to every pair")
    fpos = {}
    for f in owner.values():
        fpos[f] = N.ground.index(f)
    plist = sorted(all_pairs)
    vecs = set()
    for x in N.covectors:
        pairs = tuple(dec.epsilon[p] * x[fpos[owner[p]]] for p in plist)
        if not is_transitive(pairs, n):
            raise ValueError(f"decoration induces a non-transitive vector {SignVector(pairs)}")
        for pts in _lifts(SignVector(pairs), n):
            vecs.add(pts + tuple(x))
    ground = GroundSet([*(Point(i) for i in range(1, n + 1)), *N.ground])
    return OrientedMatroid(ground, vecs, check=False)


def pair_labels(n: int) -> list[Pair]:
    return [Pair(i, j) for i, j in combinations(range(1, n + 1), 2)]


def braid_relabel(n: int) -> dict:
    """Type A relabeling of Points ∪ Pairs(n) onto Pairs(n+1)."""
    out = {Point(i): Pair(1, i + 1) for i in range(1, n + 1)}
    for p in pair_labels(n):
        out[p] = Pair(p.i + 1, p.j + 1)
    return out


def relabel_to(M: OrientedMatroid, mapping: Mapping, target: Iterable) -> OrientedMatroid:
    """Relabel by mapping and reorder coordinates to the target ground order."""
    target = GroundSet(target)
    src = [mapping[lab] for lab in M.ground]
    perm = [src.index(t) for t in target]
    return OrientedMatroid(target, {tuple(x[i] for i in perm) for x in M.covectors}, check=False)
