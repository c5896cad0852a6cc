"""Unoriented matroids by their flats: Dilworth truncations, weak maps,
characteristic polynomials and tope-count bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from . import _bits
from .orientedmatroid import FlatLattice, OrientedMatroid
from .signvec import GroundSet, Pair
from .sweep import SweepOrientedMatroid, pair_index


class UnorientedMatroid:
    """Matroid given by its lattice of flats; rank of a set via its closure."""

    def __init__(self, lattice: FlatLattice):
        self.lattice = lattice
        self.ground = lattice.ground
        self._cache: dict[int, int] = {}

    @classmethod
    def of(cls, M: OrientedMatroid) -> "UnorientedMatroid":
        return cls(M.flat_lattice())

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def rank_of(self, subset) -> int:
        mask = subset if isinstance(subset, int) else self.mask(subset)
        r = self._cache.get(mask)
        if r is None:
            r = self._cache[mask] = self.lattice.rank_of(mask)
        return r

    def mask(self, subset: Iterable) -> int:
        out = 0
        for e in subset:
            out |= 1 << (e if isinstance(e, int) else self.ground.index(e))
        return out

    def candidate_sets(self) -> list[int]:
        return list(self.lattice.flats)

    @property
    def loops(self) -> int:
        return self.lattice.flats[0]


# --------------------------------------------------------------------------
# Dilworth truncation

def _set_partitions(items: Sequence):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        yield [[first]] + part


def _endpoints(pairs: Iterable[tuple[int, int]]) -> int:
    out = 0
    for i, j in pairs:
        out |= (1 << (i - 1)) | (1 << (j - 1))
    return out


def dilworth_rank_bruteforce(N: UnorientedMatroid, F: Iterable[tuple[int, int]]) -> int:
    """Minimum over all set partitions of F (Bell-number search)."""
    F = sorted(set(F))
    if not F:
        return 0
    return min(sum(N.rank_of(_endpoints(part)) - 1 for part in pi) for pi in _set_partitions(F))


def _components(F: Sequence[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in F:
        parent[find(i)] = find(j)
    comps: dict[int, list] = {}
    for p in F:
        comps.setdefault(find(p[0]), []).append(p)
    return list(comps.values())


def dilworth_rank(N: UnorientedMatroid, F: Iterable[tuple[int, int]]) -> int:
    """First Dilworth truncation rank of a set of pairs of ground elements of N.

    Two parts sharing a non-loop point can be merged without increasing the
    sum (submodularity), so without loops it is enough to partition the
    connected components of the pair graph.
    """
    F = sorted(set(F))
    for i, j in F:
        if not 1 <= i < j <= N.size:
            raise ValueError(f"({i},{j}) is not a pair of ground elements")
    if not F:
        return 0
    if N.loops:
        if len(F) > 12:
            raise ValueError("Dilworth rank with loops is limited to 12 pairs")
        return dilworth_rank_bruteforce(N, F)
    comps = [_endpoints(c) for c in _components(F)]
    return _min_partition(tuple(sorted(comps)), N)


def _min_partition(comps: tuple[int, ...], N: UnorientedMatroid) -> int:
    best = None
    for pi in _set_partitions(list(comps)):
        total = 0
        for part in pi:
            m = 0
            for c in part:
                m |= c
            total += N.rank_of(m) - 1
            if best is not None and total >= best:
                break
        else:
            best = total if best is None else min(best, total)
    return best


class DilworthTruncation:
    """Rank oracle of the first Dilworth truncation on Pairs(n)."""

    def __init__(self, N: UnorientedMatroid):
        self.N = N
        self.n = N.size
        self.ground = GroundSet.pairs(self.n)
        self._pairs = list(combinations(range(1, self.n + 1), 2))

    @property
    def size(self) -> int:
        return len(self._pairs)

    def rank_of(self, subset) -> int:
        if isinstance(subset, int):
            subset = [self._pairs[i] for i in _bits.bits(subset)]
        return dilworth_rank(self.N, [(p.i, p.j) if isinstance(p, Pair) else tuple(p) for p in subset])

    def candidate_sets(self) -> list[int]:
        """Pairs(W) for every W with |W| >= 2.

        Against a submodular target this family decides the weak map: any
        partition part is dominated by the complete pair set on its points.
        """
        idx = pair_index(self.n)
        out = []
        for w in range(1 << self.n):
            pts = [i + 1 for i in _bits.bits(w)]
            if len(pts) >= 2:
                out.append(_bits.mask_of(idx[p] for p in combinations(pts, 2)))
        return out


# --------------------------------------------------------------------------
# weak maps

@dataclass
class WeakMapReport:
    ok: bool
    witness: frozenset | None = None
    strict_drops: list[frozenset] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def weak_map_check(source, target) -> WeakMapReport:
    """rk_target <= rk_source on every candidate set of the source.

    For a matroid source the flats suffice.  Strict drops are listed on the
    target's flats.
    """
    if tuple(source.ground) != tuple(target.ground):
        raise ValueError("ground sets differ")
    g = source.ground
    for s in source.candidate_sets():
        if target.rank_of(s) > source.rank_of(s):
            return WeakMapReport(False, frozenset(g[i] for i in _bits.bits(s)))
    drops = [frozenset(g[i] for i in _bits.bits(f)) for f in target.candidate_sets()
             if target.rank_of(f) < source.rank_of(f)]
    return WeakMapReport(True, None, drops)


def weak_map_check_bruteforce(source, target) -> bool:
    n = len(source.ground)
    return all(target.rank_of(s) <= source.rank_of(s) for s in range(1 << n))


@dataclass
class DilworthVerdict:
    ok: bool
    witness: frozenset | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_dilworth(M: SweepOrientedMatroid, little: OrientedMatroid | None = None) -> DilworthVerdict:
    """Does every flat satisfy rk(F) = sum of little ranks of its blocks minus l?"""
    from .bigom import little_om

    S = M if isinstance(M, SweepOrientedMatroid) else SweepOrientedMatroid(M)
    U = UnorientedMatroid.of(S.om)
    L = UnorientedMatroid.of(little if little is not None else little_om(S))
    pairs = list(combinations(range(1, S.n + 1), 2))
    for f, r in zip(U.lattice.flats, U.lattice.ranks):
        F = [pairs[i] for i in _bits.bits(f)]
        comps = [_endpoints(c) for c in _components(F)]
        covered = 0
        for c in comps:
            covered |= c
        singles = [1 << i for i in range(S.n) if not covered >> i & 1]
        blocks = comps + singles
        if r != sum(L.rank_of(b) for b in blocks) - len(blocks):
            return DilworthVerdict(False, frozenset(Pair(*p) for p in F))
    return DilworthVerdict(True)


# --------------------------------------------------------------------------
# counting

def characteristic_polynomial(L: FlatLattice) -> list[int]:
    """Coefficients of chi(t), highest degree first."""
    r = L.rank
    mu = L.mobius()
    coeffs = [0] * (r + 1)
    for m, rk in zip(mu, L.ranks):
        coeffs[rk] += m
    return coeffs


def evaluate(coeffs: Sequence[int], t: int) -> int:
    out = 0
    for c in coeffs:
        out = out * t + c
    return out


def tope_count(L: FlatLattice) -> int:
    return (-1) ** L.rank * evaluate(characteristic_polynomial(L), -1)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


def stirling_bound(n: int, r: int) -> int:
    """Upper bound on the number of sweep permutations of a rank-r sweep OM on Pairs(n)."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    if r > n - 1:
        raise ValueError(f"a sweep OM on Pairs({n}) has rank at most {n - 1}")
    if r == 0:
        return 1
    return sum(2 * stirling1(n, n - r + 1 + 2 * i) for i in range((r - 1) // 2 + 1))
