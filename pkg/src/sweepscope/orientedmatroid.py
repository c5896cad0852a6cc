"""Covector sets, the V0-V3 axiom checker and derived structure."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import _bits
from .signvec import GroundSet, SignVector, compose, separation

DEFAULT_MAX_COVECTORS = 200_000


def max_covectors() -> int:
    return int(os.environ.get("SWEEPSCOPE_MAX_COVECTORS", DEFAULT_MAX_COVECTORS))


class CapExceeded(RuntimeError):
    pass


class InvalidOrientedMatroid(ValueError):
    """Raised when a covector set fails V0-V3 where an oriented matroid is required."""


def _ground_of(ground, m: int) -> GroundSet:
    if ground is None:
        return GroundSet(f"e{i + 1}" for i in range(m))
    if isinstance(ground, int):
        return GroundSet(f"e{i + 1}" for i in range(ground))
    return ground if isinstance(ground, GroundSet) else GroundSet(ground)


def _positions(ground: GroundSet, F) -> list[int]:
    out = []
    for f in F:
        if isinstance(f, (int, np.integer)) and not isinstance(f, bool):
            if not 0 <= f < len(ground):
                raise ValueError(f"index {f} is not in the ground set")
            out.append(int(f))
        else:
            out.append(ground.index(f))
    return sorted(set(out))


class CovectorSet:
    """A finite deduplicated set of sign vectors over a common ground set."""

    def __init__(self, ground, covectors: Iterable[Sequence[int]]):
        vecs = frozenset(SignVector(v) for v in covectors)
        if ground is None and not vecs:
            raise ValueError("an empty covector set needs an explicit ground set")
        m = len(next(iter(vecs))) if vecs else len(ground)
        self.ground = _ground_of(ground, m)
        for v in vecs:
            if len(v) != len(self.ground):
                raise ValueError(
                    f"ground-set mismatch: vector {v} has {len(v)} entries, "
                    f"ground has {len(self.ground)}")
            if any(s not in (-1, 0, 1) for s in v):
                raise ValueError(f"vector {v!r} has entries outside {{-1,0,1}}")
        self.covectors = vecs

    def __len__(self) -> int:
        return len(self.covectors)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, x) -> bool:
        return SignVector(x) in self.covectors

    def __eq__(self, other) -> bool:
        if not isinstance(other, CovectorSet):
            return NotImplemented
        return tuple(self.ground) == tuple(other.ground) and self.covectors == other.covectors

    def __hash__(self):
        return hash((tuple(self.ground), self.covectors))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(|E|={len(self.ground)}, {len(self)} covectors)"

    @property
    def size(self) -> int:
        return len(self.ground)

    def sorted(self) -> list[SignVector]:
        """Canonical order: by serialization string."""
        return sorted(self.covectors, key=str)

    @cached_property
    def packed(self) -> _bits.Packed:
        return _bits.Packed(self.sorted(), self.size)


# --------------------------------------------------------------------------
# axiom verification

@dataclass
class AxiomViolation:
    axiom: str
    witness: tuple

    def to_json(self):
        return {"axiom": self.axiom, "witness": [str(w) if isinstance(w, SignVector) else w
                                                 for w in self.witness]}


@dataclass
class AxiomReport:
    ok: bool
    violations: list[AxiomViolation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def failed(self, axiom: str) -> bool:
        return any(v.axiom == axiom for v in self.violations)

    def to_json(self):
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


def _label(ground, i):
    return str(ground[i])


def verify_covector_axioms(S: CovectorSet) -> AxiomReport:
    """Check V0-V3; each failing axiom is reported once with a witness."""
    pk = S.packed
    vecs = S.sorted()
    m = S.size
    out: list[AxiomViolation] = []
    zero = SignVector.zero(m)
    if zero not in S.covectors:
        out.append(AxiomViolation("V0", (zero,)))
    if len(vecs) == 0:
        return AxiomReport(False, out)

    neg_ok = pk.contains(pk.M, pk.P)
    if not neg_ok.all():
        i = int(np.argmin(neg_ok))
        out.append(AxiomViolation("V1", (vecs[i], -vecs[i])))

    v2_ok = True
    for i in range(len(vecs)):
        cp, cm = _bits.compose(pk.P[i], pk.M[i], pk.P, pk.M)
        hit = pk.contains(cp, cm)
        if not hit.all():
            j = int(np.argmin(hit))
            out.append(AxiomViolation("V2", (vecs[i], vecs[j])))
            v2_ok = False
            break

    if v2_ok:
        wit = _v3_reduced(S, use_symmetry=neg_ok.all())
    else:
        wit = _v3_naive(S)
    if wit is not None:
        x, y, e = wit
        out.append(AxiomViolation("V3", (x, y, _label(S.ground, e))))
    return AxiomReport(not out, out)


def _v3_naive(S: CovectorSet):
    """Direct elimination check; first failing (X, Y, e) in canonical order."""
    pk = S.packed
    vecs = S.sorted()
    for i, x in enumerate(vecs):
        for y in vecs[i + 1:]:
            sep = separation(x, y)
            if not sep:
                continue
            xy = _bits.encode(compose(x, y))
            smask = _bits.mask_of(sep)
            keep = ~smask
            same = ((pk.P & keep) == (xy[0] & keep)) & ((pk.M & keep) == (xy[1] & keep))
            for e in sorted(sep):
                ok = same & (((pk.P | pk.M) >> e & 1) == 0)
                if not ok.any():
                    return x, y, e
    return None


def _v3_reduced(S: CovectorSet, use_symmetry: bool):
    """Elimination check valid when V2 holds.

    Replacing (X, Y) by (X∘Y, Y∘X) keeps the separation set and X∘Y, so only
    pairs of equal support need checking.  For those, a witness Z has support
    inside supp(X), agrees with X off S(X, Y) and vanishes at e.
    """
    pk = S.packed
    vecs = S.sorted()
    supp = pk.support
    cnt = _bits.popcount(supp)
    groups: dict[int, list[int]] = {}
    for i, s in enumerate(supp.tolist()):
        groups.setdefault(int(s), []).append(i)
    zero_dtype = pk.P.dtype
    for s, members in groups.items():
        if len(members) < 2:
            continue
        s_arr = np.array(s, dtype=zero_dtype) if zero_dtype != object else s
        zidx = np.nonzero(((supp & ~s_arr) == 0) & (cnt < cnt[members[0]]))[0]
        zP, zM = pk.P[zidx], pk.M[zidx]
        zzero = s_arr & ~(zP | zM)
        mem = np.array(members)
        yP, yM = pk.P[mem], pk.M[mem]
        done = set()
        for i in members:
            if i in done:
                continue
            px, mx = pk.P[i], pk.M[i]
            if use_symmetry:
                done.add(i)
                j = members[int(np.nonzero((yP == mx) & (yM == px))[0][0])] if s else i
                done.add(j)
            sep = (px & yM) | (mx & yP)
            sel = np.nonzero(sep != 0)[0]
            if len(sel) == 0:
                continue
            seps = sep[sel]
            diff = (zP & ~px) | (zM & ~mx) | zzero
            covered = _covered(seps, diff, zzero)
            bad = np.nonzero((covered & seps) != seps)[0]
            if len(bad):
                k = int(bad[0])
                e = _bits.bits(int(seps[k]) & ~int(covered[k]))[0]
                return vecs[i], vecs[members[int(sel[k])]], e
    return None


def _covered(seps, diff, zzero, chunk: int = 256):
    out = np.zeros(len(seps), dtype=seps.dtype)
    if len(diff) == 0:
        return out
    for a in range(0, len(seps), chunk):
        sp = seps[a:a + chunk, None]
        ok = (diff[None, :] & ~sp) == 0
        vals = np.where(ok, zzero[None, :], 0)
        if vals.dtype == object:
            out[a:a + chunk] = [_or_reduce(r) for r in vals]
        else:
            out[a:a + chunk] = np.bitwise_or.reduce(vals, axis=1)
    return out


def _or_reduce(row):
    acc = 0
    for v in row:
        acc |= int(v)
    return acc


def verify_covector_axioms_naive(S: CovectorSet) -> AxiomReport:
    """Pure-Python reference checker used as a test oracle."""
    vecs = S.sorted()
    cs = S.covectors
    m = S.size
    out = []
    if SignVector.zero(m) not in cs:
        out.append(AxiomViolation("V0", (SignVector.zero(m),)))
    for x in vecs:
        if -x not in cs:
            out.append(AxiomViolation("V1", (x, -x)))
            break
    v2 = next(((x, y) for x in vecs for y in vecs if compose(x, y) not in cs), None)
    if v2:
        out.append(AxiomViolation("V2", v2))
    done = False
    for x in vecs:
        for y in vecs:
            sep = separation(x, y)
            xy = compose(x, y)
            for e in sorted(sep):
                if not any(z[e] == 0 and all(z[f] == xy[f] for f in range(m) if f not in sep)
                           for z in vecs):
                    out.append(AxiomViolation("V3", (x, y, _label(S.ground, e))))
                    done = True
                    break
            if done:
                break
        if done:
            break
    return AxiomReport(not out, out)


# --------------------------------------------------------------------------
# oriented matroids

class OrientedMatroid(CovectorSet):
    """A covector set satisfying V0-V3.

    ``check=True`` runs the axiom checker and raises on failure.  Constructions
    that are oriented matroids by construction pass ``check=False``.
    """

    def __init__(self, ground, covectors, check: bool = True):
        super().__init__(ground, covectors)
        self.validated = True
        if check:
            rep = verify_covector_axioms(self)
            if not rep.ok:
                v = rep.violations[0]
                raise InvalidOrientedMatroid(f"not an oriented matroid: {v.axiom} fails at "
                                 f"{', '.join(map(str, v.witness))}")

    @classmethod
    def from_covector_set(cls, S: CovectorSet, check: bool = True) -> "OrientedMatroid":
        return cls(S.ground, S.covectors, check=check)

    # ---- structure
    def _below_above(self, i: int, strict_above: bool):
        pk = self.packed
        if strict_above:
            return _bits.leq(pk.P[i], pk.M[i], pk.P, pk.M)
        return _bits.leq(pk.P, pk.M, pk.P[i], pk.M[i])

    @cached_property
    def _supp_count(self):
        return _bits.popcount(self.packed.support)

    @cached_property
    def topes(self) -> frozenset[SignVector]:
        pk = self.packed
        vecs = self.sorted()
        cnt = self._supp_count
        out = []
        for i in range(len(vecs)):
            above = _bits.leq(pk.P[i], pk.M[i], pk.P, pk.M) & (cnt > cnt[i])
            if not above.any():
                out.append(vecs[i])
        return frozenset(out)

    @cached_property
    def cocircuits(self) -> frozenset[SignVector]:
        pk = self.packed
        vecs = self.sorted()
        cnt = self._supp_count
        out = []
        for i in range(len(vecs)):
            if cnt[i] == 0:
                continue
            below = _bits.leq(pk.P, pk.M, pk.P[i], pk.M[i]) & (cnt < cnt[i]) & (cnt > 0)
            if not below.any():
                out.append(vecs[i])
        return frozenset(out)

    @cached_property
    def rank(self) -> int:
        """Length of a maximal chain from zero, built greedily from covers."""
        pk = self.packed
        cnt = self._supp_count
        if len(pk) == 0:
            return 0
        cur_p, cur_m = 0, 0
        r = 0
        while True:
            up = _bits.leq(cur_p, cur_m, pk.P, pk.M) & (cnt > bin(cur_p | cur_m).count("1"))
            idx = np.nonzero(up)[0]
            if len(idx) == 0:
                return r
            k = idx[np.argmin(cnt[idx])]
            cur_p, cur_m = int(pk.P[k]), int(pk.M[k])
            r += 1

    @cached_property
    def loops(self) -> frozenset[int]:
        s = 0
        for v in self.packed.support.tolist():
            s |= int(v)
        return frozenset(i for i in range(self.size) if not s >> i & 1)

    @cached_property
    def sign_matrix(self) -> np.ndarray:
        return np.array(self.sorted(), dtype=np.int8).reshape(len(self), self.size)

    @cached_property
    def parallelism_classes(self) -> list[frozenset[int]]:
        """Classes of non-loop elements, each as a set of ground indices."""
        A = self.sign_matrix
        classes: dict[bytes, list[int]] = {}
        for e in range(self.size):
            if e in self.loops:
                continue
            col = A[:, e]
            first = col[np.nonzero(col)[0][0]]
            classes.setdefault((col * first).tobytes(), []).append(e)
        return sorted((frozenset(c) for c in classes.values()), key=min)

    def parallel_class_of(self, e: int) -> frozenset[int]:
        for c in self.parallelism_classes:
            if e in c:
                return c
        raise ValueError(f"element {e} is a loop")

    @cached_property
    def is_acyclic(self) -> bool:
        return SignVector((1,) * self.size) in self.topes

    def flat_lattice(self) -> "FlatLattice":
        zs = {int(self.packed.full & ~s) for s in self.packed.support.tolist()}
        return FlatLattice.from_flats(self.ground, zs)

    # ---- minors
    def restriction(self, F) -> "OrientedMatroid":
        pos = _positions(self.ground, F)
        g = GroundSet(self.ground[i] for i in pos)
        return OrientedMatroid(g, {tuple(x[i] for i in pos) for x in self.covectors},
                               check=False)

    def deletion(self, F) -> "OrientedMatroid":
        drop = set(_positions(self.ground, F))
        return self.restriction([i for i in range(self.size) if i not in drop])

    def contraction(self, F) -> "OrientedMatroid":
        pos = set(_positions(self.ground, F))
        keep = [i for i in range(self.size) if i not in pos]
        g = GroundSet(self.ground[i] for i in keep)
        return OrientedMatroid(
            g, {tuple(x[i] for i in keep) for x in self.covectors if all(x[f] == 0 for f in pos)},
            check=False)

    def reorientation(self, F) -> "OrientedMatroid":
        pos = set(_positions(self.ground, F))
        return OrientedMatroid(
            self.ground,
            {tuple(-s if i in pos else s for i, s in enumerate(x)) for x in self.covectors},
            check=False)

    def relabel(self, ground) -> "OrientedMatroid":
        return OrientedMatroid(GroundSet(ground), self.covectors, check=False)

    def simplification(self) -> tuple["OrientedMatroid", list[int]]:
        """Restriction to the first element of each parallelism class."""
        reps = sorted(min(c) for c in self.parallelism_classes)
        return self.restriction(reps), reps


def check_om(S: CovectorSet) -> OrientedMatroid:
    return OrientedMatroid.from_covector_set(S, check=True)


# --------------------------------------------------------------------------
# constructions of covector sets

def _agreements(topes: Sequence[SignVector], size: int):
    """Candidate covectors: the common part of each pair of topes."""
    pk = _bits.Packed(topes, size)
    cands = set()
    for i in range(len(pk)):
        p = pk.P & pk.P[i]
        m = pk.M & pk.M[i]
        cands.update(zip(p.tolist(), m.tolist()))
    return cands, pk


def covectors_from_topes(T: Iterable[Sequence[int]], ground=None) -> CovectorSet:
    """All X with X∘T' in T for every T' in T.

    Every such X is the common part of X∘T' and X∘(-T'), so candidates are
    the pairwise agreements of topes.
    """
    topes = sorted({SignVector(t) for t in T}, key=str)
    if not topes:
        raise ValueError("covectorsFromTopes needs a nonempty tope set")
    m = len(topes[0])
    supp = {t.support for t in topes}
    if len(supp) != 1:
        raise ValueError("topes do not share a common support")
    cands, pk = _agreements(topes, m)
    out = []
    for p, mm in cands:
        cp, cm = _bits.compose(p, mm, pk.P, pk.M)
        if pk.contains(cp, cm).all():
            out.append(_bits.decode(p, mm, m))
    return CovectorSet(ground if ground is not None else m, out)


def covectors_from_topes_bruteforce(T: Iterable[Sequence[int]], ground=None) -> CovectorSet:
    """Oracle: scan every sign vector obtained by zeroing coordinates of a tope."""
    topes = {SignVector(t) for t in T}
    if not topes:
        raise ValueError("covectorsFromTopes needs a nonempty tope set")
    m = len(next(iter(topes)))
    cands = set()
    for t in topes:
        nz = [i for i in range(m) if t[i]]
        for keep in product((0, 1), repeat=len(nz)):
            v = [0] * m
            for i, k in zip(nz, keep):
                if k:
                    v[i] = t[i]
            cands.add(SignVector(v))
    return CovectorSet(ground if ground is not None else m,
                       [x for x in cands if all(compose(x, t) in topes for t in topes)])


def cocircuit_closure(C: Iterable[Sequence[int]], ground=None, cap: int | None = None) -> CovectorSet:
    """Zero together with all compositions of elements of C."""
    C = sorted({SignVector(c) for c in C}, key=str)
    if not C:
        if ground is None:
            raise ValueError("empty cocircuit set needs a ground set")
        g = _ground_of(ground, 0)
        return CovectorSet(g, [SignVector.zero(len(g))])
    m = len(C[0])
    cap = cap or max_covectors()
    cpk = _bits.Packed(C, m)
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        new = []
        for p, mm in frontier:
            cp, cm = _bits.compose(p, mm, cpk.P, cpk.M)
            for key in zip(cp.tolist(), cm.tolist()):
                if key not in seen:
                    seen.add(key)
                    new.append(key)
        if len(seen) > cap:
            raise CapExceeded(f"covector enumeration exceeded cap {cap}")
        frontier = new
    return CovectorSet(ground if ground is not None else m,
                       [_bits.decode(p, mm, m) for p, mm in seen])


# --------------------------------------------------------------------------
# flats

class FlatLattice:
    """Flats as bitmasks over the ground indices, with ranks."""

    def __init__(self, ground, flats: Sequence[int], ranks: Sequence[int]):
        self.ground = ground if isinstance(ground, GroundSet) else GroundSet(ground)
        order = sorted(range(len(flats)), key=lambda i: (ranks[i], bin(flats[i]).count("1"), flats[i]))
        self.flats = [int(flats[i]) for i in order]
        self.ranks = [int(ranks[i]) for i in order]
        self._rank_of = dict(zip(self.flats, self.ranks))

    @classmethod
    def from_flats(cls, ground, flats: Iterable[int]) -> "FlatLattice":
        fl = sorted(set(int(f) for f in flats), key=lambda f: (bin(f).count("1"), f))
        rk = []
        for i, f in enumerate(fl):
            below = [rk[j] for j in range(i) if fl[j] & ~f == 0 and fl[j] != f]
            rk.append(max(below) + 1 if below else 0)
        return cls(ground, fl, rk)

    def __len__(self) -> int:
        return len(self.flats)

    @property
    def rank(self) -> int:
        return max(self.ranks) if self.ranks else 0

    def flat_sets(self) -> list[frozenset]:
        return [frozenset(self.ground[i] for i in _bits.bits(f)) for f in self.flats]

    def closure(self, mask: int) -> int:
        out = None
        for f in self.flats:
            if mask & ~f == 0:
                out = f if out is None else out & f
        if out is None:
            raise ValueError("no flat contains the given set")
        return out

    def rank_of(self, mask: int) -> int:
        return self._rank_of[self.closure(mask)]

    def mobius(self) -> list[int]:
        """mu(bottom, F) for each flat, in stored order."""
        mu = []
        for i, f in enumerate(self.flats):
            if i == 0:
                mu.append(1)
                continue
            mu.append(-sum(mu[j] for j in range(i) if self.flats[j] & ~f == 0))
        return mu

    def to_json(self):
        return {"flats": [[str(x) for x in s] for s in self.flat_sets()], "ranks": self.ranks}


# --------------------------------------------------------------------------
# posets

class Poset:
    """Finite poset given by a strict-order matrix."""

    def __init__(self, elements: Sequence, less: np.ndarray):
        self.elements = list(elements)
        self.less = np.asarray(less, dtype=bool)

    @classmethod
    def from_relation(cls, elements: Sequence, lt) -> "Poset":
        n = len(elements)
        less = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                if i != j and lt(a, b):
                    less[i, j] = True
        return cls(elements, less)

    @classmethod
    def from_covers(cls, elements: Sequence, covers: Iterable[tuple[int, int]]) -> "Poset":
        n = len(elements)
        less = np.zeros((n, n), dtype=bool)
        for i, j in covers:
            less[i, j] = True
        # transitive closure
        for k in range(n):
            less |= less[:, k:k + 1] & less[k:k + 1, :]
        if np.any(np.diag(less)):
            raise ValueError("cover relation has a cycle")
        return cls(elements, less)

    def __len__(self) -> int:
        return len(self.elements)

    def covers(self) -> list[tuple[int, int]]:
        lt = self.less.astype(np.float32)
        two = (lt @ lt) > 0
        c = self.less & ~two
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(c))]

    def subposet(self, keep: Sequence[int]) -> "Poset":
        keep = list(keep)
        return Poset([self.elements[i] for i in keep], self.less[np.ix_(keep, keep)])

    def to_json(self):
        return {"elements": [str(e) for e in self.elements],
                "covers": [list(c) for c in self.covers()]}


def order_complex_euler(P: Poset) -> int:
    """Euler characteristic of the order complex (nonempty chains)."""
    n = len(P)
    if n == 0:
        return 0
    order = np.argsort(P.less.sum(axis=0), kind="stable")
    f = np.zeros(n, dtype=object)
    for x in order:
        below = np.nonzero(P.less[:, x])[0]
        f[x] = 1 - sum(f[y] for y in below)
    return int(sum(f))


def covector_poset(S: CovectorSet, exclude_zero: bool = False) -> Poset:
    vecs = S.sorted()
    if exclude_zero:
        vecs = [v for v in vecs if any(v)]
    pk = _bits.Packed(vecs, S.size)
    n = len(vecs)
    less = np.zeros((n, n), dtype=bool)
    for i in range(n):
        less[i] = _bits.leq(pk.P[i], pk.M[i], pk.P, pk.M)
        less[i, i] = False
    return Poset(vecs, less)
