"""Ordered partitions, their sign vectors on pairs, and sweep oriented matroids."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _bits
from .orientedmatroid import OrientedMatroid, Poset, covector_poset, order_complex_euler
from .signvec import GroundSet, SignVector


@dataclass(frozen=True)
class OrderedPartition:
    """Blocks of {1..n} in order; p(i) is the index of the block holding i."""

    blocks: tuple[frozenset[int], ...]

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        bl = tuple(frozenset(int(i) for i in b) for b in blocks)
        if any(not b for b in bl):
            raise ValueError("ordered partition has an empty block")
        seen: set[int] = set()
        for b in bl:
            if seen & b:
                raise ValueError("ordered partition blocks overlap")
            seen |= b
        if n is None:
            n = len(seen)
        if seen != set(range(1, n + 1)):
            raise ValueError(f"blocks do not cover 1..{n}")
        object.__setattr__(self, "blocks", bl)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def position(self) -> dict[int, int]:
        return {i: k for k, b in enumerate(self.blocks) for i in b}

    def is_permutation(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def as_permutation(self) -> tuple[int, ...]:
        if not self.is_permutation():
            raise ValueError(f"{self} is not a permutation")
        return tuple(next(iter(b)) for b in self.blocks)

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "OrderedPartition":
        return cls([[i] for i in perm])

    @classmethod
    def trivial(cls, n: int) -> "OrderedPartition":
        return cls([range(1, n + 1)])

    def __str__(self) -> str:
        sep = "," if self.n >= 10 else ""
        return "|".join(sep.join(str(i) for i in sorted(b)) for b in self.blocks)

    def __repr__(self) -> str:
        return f"OrderedPartition({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "OrderedPartition":
        parts = text.strip().split("|")
        blocks = []
        for p in parts:
            p = p.strip()
            if "," in p or " " in p:
                blocks.append([int(x) for x in p.replace(",", " ").split()])
            else:
                blocks.append([int(c) for c in p])
        return cls(blocks)

    def reverse(self) -> "OrderedPartition":
        return OrderedPartition(reversed(self.blocks))

    def sort_key(self):
        return tuple(tuple(sorted(b)) for b in self.blocks)


@lru_cache(maxsize=None)
def pair_index(n: int) -> dict[tuple[int, int], int]:
    return {(i, j): k for k, (i, j) in enumerate(combinations(range(1, n + 1), 2))}


@lru_cache(maxsize=None)
def _triples(n: int):
    idx = pair_index(n)
    return [(i, j, k, idx[i, j], idx[j, k], idx[i, k])
            for i, j, k in combinations(range(1, n + 1), 3)]


def n_from_pairs(m: int) -> int:
    n = 1
    while n * (n - 1) // 2 < m:
        n += 1
    if n * (n - 1) // 2 != m:
        raise ValueError(f"{m} is not a number of pairs")
    return n


def partition_to_signvector(I: OrderedPartition) -> SignVector:
    p = I.position()
    return SignVector((p[i] < p[j]) - (p[i] > p[j]) for i, j in combinations(range(1, I.n + 1), 2))


@dataclass
class TransitivityReport:
    ok: bool
    violations: list[tuple[int, int, int]]

    def __bool__(self) -> bool:
        return self.ok


def _triple_ok(a: int, b: int, c: int) -> bool:
    # orthogonal to (+,+,-)
    prods = (a, b, -c)
    return (1 in prods) == (-1 in prods)


def check_transitivity(X: Sequence[int], n: int | None = None) -> TransitivityReport:
    n = n or n_from_pairs(len(X))
    bad = [(i, j, k) for i, j, k, a, b, c in _triples(n) if not _triple_ok(X[a], X[b], X[c])]
    return TransitivityReport(not bad, bad)


def is_transitive(X: Sequence[int], n: int | None = None) -> bool:
    n = n or n_from_pairs(len(X))
    return all(_triple_ok(X[a], X[b], X[c]) for _, _, _, a, b, c in _triples(n))


def signvector_to_partition(X: Sequence[int], n: int | None = None) -> OrderedPartition:
    n = n or n_from_pairs(len(X))
    if not is_transitive(X, n):
        raise ValueError(f"{SignVector(X)} fails the transitivity check; no partition exists")
    idx = pair_index(n)
    before = {i: 0 for i in range(1, n + 1)}
    for (i, j), k in idx.items():
        if X[k] > 0:
            before[j] += 1
        elif X[k] < 0:
            before[i] += 1
    levels = sorted(set(before.values()))
    I = OrderedPartition([[i for i in range(1, n + 1) if before[i] == lev] for lev in levels])
    if partition_to_signvector(I) != tuple(X):
        raise ValueError(f"{SignVector(X)} does not encode an ordered partition")
    return I


def refines(J: OrderedPartition, I: OrderedPartition) -> bool:
    """Each block of I is a union of consecutive blocks of J."""
    if J.n != I.n:
        raise ValueError("partitions of different ground sets")
    k = 0
    for b in I.blocks:
        acc: set[int] = set()
        while k < len(J.blocks) and acc < b:
            if not J.blocks[k] <= b:
                return False
            acc |= J.blocks[k]
            k += 1
        if acc != b:
            return False
    return True


def compose_partitions(I: OrderedPartition, J: OrderedPartition) -> OrderedPartition:
    """Split each block of I according to the order of J."""
    if I.n != J.n:
        raise ValueError("partitions of different ground sets")
    out = []
    for b in I.blocks:
        for c in J.blocks:
            part = b & c
            if part:
                out.append(part)
    return OrderedPartition(out)


# --------------------------------------------------------------------------
# sweep oriented matroids

@dataclass
class SweepCheck:
    ok: bool
    witness: SignVector | None = None
    triple: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _pairs_n(M) -> int:
    g = M.ground
    try:
        return g.pairs_n()
    except (ValueError, AttributeError):
        raise ValueError("ground set is not of the form Pairs(n)") from None


def is_sweep_om(M: OrientedMatroid) -> SweepCheck:
    n = _pairs_n(M)
    for x in M.sorted():
        rep = check_transitivity(x, n)
        if not rep.ok:
            return SweepCheck(False, x, rep.violations[0])
    return SweepCheck(True)


class SweepOrientedMatroid:
    """An oriented matroid on Pairs(n) all of whose covectors are transitive."""

    def __init__(self, om: OrientedMatroid, check: bool = True):
        self.n = _pairs_n(om)
        if check:
            rep = is_sweep_om(om)
            if not rep.ok:
                raise ValueError(f"not a sweep oriented matroid: {rep.witness} "
                                 f"fails transitivity at {rep.triple}")
        self.om = om

    @property
    def rank(self) -> int:
        return self.om.rank

    def partition_of(self, x) -> OrderedPartition:
        return signvector_to_partition(x, self.n)

    def sweeps(self) -> list[OrderedPartition]:
        return sorted((self.partition_of(x) for x in self.om.covectors), key=lambda p: (len(p), p.sort_key()))

    def sweep_permutations(self) -> list[OrderedPartition]:
        return sorted((self.partition_of(t) for t in self.om.topes), key=lambda p: p.sort_key())


def sweep_permutations(M) -> list[OrderedPartition]:
    S = M if isinstance(M, SweepOrientedMatroid) else SweepOrientedMatroid(M)
    return S.sweep_permutations()


def poset_of_sweeps(M, nontrivial: bool = False) -> Poset:
    """Ordered partitions of the covectors, ordered by refinement."""
    S = M if isinstance(M, SweepOrientedMatroid) else SweepOrientedMatroid(M)
    P = covector_poset(S.om, exclude_zero=nontrivial)
    return Poset([S.partition_of(x) for x in P.elements], P.less)


def sweep_poset_euler(M) -> int:
    return order_complex_euler(poset_of_sweeps(M, nontrivial=True))


def braid_om(n: int) -> SweepOrientedMatroid:
    """Images of all ordered partitions of {1..n}."""
    vecs = {partition_to_signvector(I) for I in ordered_partitions(n)}
    return SweepOrientedMatroid(OrientedMatroid(GroundSet.pairs(n), vecs, check=False), check=False)


def ordered_partitions(n: int) -> list[OrderedPartition]:
    out = []

    def rec(remaining: frozenset[int], prefix: list[frozenset[int]]):
        if not remaining:
            out.append(OrderedPartition(prefix))
            return
        items = sorted(remaining)
        for mask in range(1, 1 << len(items)):
            block = frozenset(items[i] for i in _bits.bits(mask))
            rec(remaining - block, prefix + [block])

    rec(frozenset(range(1, n + 1)), [])
    return out


def transitivity_mask_check(vectors: Sequence[Sequence[int]], n: int) -> np.ndarray:
    """Vectorized transitivity verdict for many sign vectors on Pairs(n)."""
    A = np.asarray(vectors, dtype=np.int8).reshape(len(vectors), -1)
    ok = np.ones(len(A), dtype=bool)
    for _, _, _, a, b, c in _triples(n):
        x, y, z = A[:, a], A[:, b], -A[:, c]
        has_p = (x > 0) | (y > 0) | (z > 0)
        has_m = (x < 0) | (y < 0) | (z < 0)
        ok &= has_p == has_m
    return ok
