"""Pseudo-sweeps of acyclic oriented matroids on Points(1..n).

An ordered partition (I_1, ..., I_l) is a pseudo-sweep when for every i the
sign vector that is 0 on I_i, - on earlier blocks and + on later blocks is a
covector.  These are exactly the cellular strings of the matroid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _bits
from .orientedmatroid import OrientedMatroid, Poset, order_complex_euler
from .pointconfig import PointConfiguration, k_sets
from .sweep import OrderedPartition, SweepOrientedMatroid, partition_to_signvector

DEFAULT_CAP = 10 ** 6


class EnumerationCapExceeded(RuntimeError):
    pass


def _require_acyclic(M: OrientedMatroid) -> None:
    if not M.is_acyclic:
        raise ValueError("pseudo-sweeps need an acyclic oriented matroid")


def string_of(I: OrderedPartition) -> list[tuple[int, ...]]:
    """The cellular string X^1..X^l of an ordered partition."""
    p = I.position()
    return [tuple(-1 if p[e] < k else 0 if p[e] == k else 1 for e in range(1, I.n + 1))
            for k in range(len(I))]


def is_cellular_string(M: OrientedMatroid, xs) -> bool:
    m = M.size
    if not xs:
        return False
    plus, minus = (1,) * m, (-1,) * m

    def comp(x, y):
        return tuple(a if a else b for a, b in zip(x, y))

    if any(tuple(x) in M.topes or tuple(x) not in M for x in xs):
        return False
    if comp(xs[0], plus) != plus or comp(xs[-1], minus) != minus:
        return False
    return all(comp(xs[i], minus) == comp(xs[i + 1], plus) for i in range(len(xs) - 1))


def is_pseudo_sweep(M: OrientedMatroid, I: OrderedPartition) -> bool:
    _require_acyclic(M)
    if I.n != M.size:
        raise ValueError("partition and matroid have different ground sets")
    return all(x in M for x in string_of(I))


def _prefix_table(M: OrientedMatroid) -> dict[int, list[int]]:
    """minus-mask -> zero-masks of covectors with that minus part and nonempty zero set."""
    pk = M.packed
    full = pk.full
    table: dict[int, list[int]] = {}
    for p, m in zip(pk.P.tolist(), pk.M.tolist()):
        z = full & ~(p | m)
        if z:
            table.setdefault(int(m), []).append(int(z))
    for v in table.values():
        v.sort()
    return table


def enumerate_pseudo_sweeps(M: OrientedMatroid, cap: int = DEFAULT_CAP) -> list[OrderedPartition]:
    _require_acyclic(M)
    table = _prefix_table(M)
    full = M.packed.full
    out: list[tuple[int, ...]] = []
    stack: list[tuple[int, tuple[int, ...]]] = [(0, ())]
    while stack:
        used, blocks = stack.pop()
        if used == full:
            out.append(blocks)
            if len(out) > cap:
                raise EnumerationCapExceeded(f"more than {cap} pseudo-sweeps")
            continue
        for z in table.get(used, ()):
            stack.append((used | z, blocks + (z,)))
    parts = [OrderedPartition([[i + 1 for i in _bits.bits(b)] for b in bl]) for bl in out]
    return sorted(parts, key=lambda p: (len(p), p.sort_key()))


def _refinement_matrix(parts: list[OrderedPartition]) -> np.ndarray:
    """less[i, j]: parts[j] strictly refines parts[i]."""
    vecs = [partition_to_signvector(p) for p in parts]
    size = len(vecs[0]) if vecs else 0
    pk = _bits.Packed(vecs, size)
    n = len(vecs)
    less = np.zeros((n, n), dtype=bool)
    for i in range(n):
        less[i] = _bits.leq(pk.P[i], pk.M[i], pk.P, pk.M)
        less[i, i] = False
    return less


def enumerate_maximal(M: OrientedMatroid, cap: int = DEFAULT_CAP) -> list[OrderedPartition]:
    parts = enumerate_pseudo_sweeps(M, cap)
    less = _refinement_matrix(parts)
    return sorted((p for i, p in enumerate(parts) if not less[i].any()), key=lambda p: p.sort_key())


def pseudo_sweep_permutations_by_ksets(A: PointConfiguration) -> set[tuple[int, ...]]:
    """Permutations all of whose prefixes are k-sets."""
    if A.has_repeated_points():
        raise ValueError("k-set characterization needs distinct points")
    n = A.n
    ks = set()
    for k in range(1, n):
        ks |= k_sets(A, k)
    ks.add(frozenset(range(1, n + 1)))
    out = set()

    def rec(prefix: tuple[int, ...], used: frozenset[int]):
        if len(prefix) == n:
            out.add(prefix)
            return
        for i in range(1, n + 1):
            if i not in used and used | {i} in ks:
                rec(prefix + (i,), used | {i})

    rec((), frozenset())
    return out


def poset_of_pseudo_sweeps(M: OrientedMatroid, nontrivial: bool = False, cap: int = DEFAULT_CAP) -> Poset:
    parts = enumerate_pseudo_sweeps(M, cap)
    if nontrivial:
        parts = [p for p in parts if len(p) > 1]
    return Poset(parts, _refinement_matrix(parts))


def pseudo_sweep_euler(M: OrientedMatroid) -> int:
    return order_complex_euler(poset_of_pseudo_sweeps(M, nontrivial=True))


@dataclass
class Containment:
    ok: bool
    missing: OrderedPartition | None = None

    def __bool__(self) -> bool:
        return self.ok


def contains_sweep_poset(M: OrientedMatroid, S: SweepOrientedMatroid) -> Containment:
    """Every sweep of S is a pseudo-sweep of M with the same refinement order."""
    from .bigom import little_om

    if little_om(S).covectors != M.covectors:
        raise ValueError("M is not the little oriented matroid of S")
    pseudo = enumerate_pseudo_sweeps(M)
    index = {p: i for i, p in enumerate(pseudo)}
    sweeps = S.sweeps()
    for s in sweeps:
        if s not in index:
            return Containment(False, s)
    big = _refinement_matrix(pseudo)
    small = _refinement_matrix(sweeps)
    idx = [index[s] for s in sweeps]
    if not np.array_equal(big[np.ix_(idx, idx)], small):
        return Containment(False)
    return Containment(True)


def is_prefix_kset_permutation(A: PointConfiguration, perm) -> bool:
    return all(is_separable_prefix(A, perm[:k]) for k in range(1, A.n))


def is_separable_prefix(A: PointConfiguration, prefix) -> bool:
    from .pointconfig import is_strictly_separable

    return is_strictly_separable(A, [i - 1 for i in prefix])
