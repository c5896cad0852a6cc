"""Allowable sequences, allowable graphs of permutations and acycloids.

Permutations are tuples (sigma(1), ..., sigma(n)).  Inversion sets are
bitmasks over Pairs(n) in lexicographic order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _bits
from .orientedmatroid import covectors_from_topes, verify_covector_axioms
from .signvec import SignVector
from .sweep import (
    OrderedPartition,
    compose_partitions,
    is_transitive,
    pair_index,
    partition_to_signvector,
)

Permutation = tuple[int, ...]


def as_perm(sigma: Iterable[int]) -> Permutation:
    s = tuple(int(x) for x in sigma)
    if sorted(s) != list(range(1, len(s) + 1)):
        raise ValueError(f"{s} is not a permutation of 1..{len(s)}")
    return s


def reverse(sigma: Sequence[int]) -> Permutation:
    return tuple(reversed(sigma))


def inversions(sigma: Sequence[int]) -> frozenset[tuple[int, int]]:
    pos = {v: k for k, v in enumerate(sigma)}
    return frozenset((i, j) for i, j in combinations(range(1, len(sigma) + 1), 2) if pos[i] > pos[j])


def inversion_mask(sigma: Sequence[int]) -> int:
    idx = pair_index(len(sigma))
    return _bits.mask_of(idx[p] for p in inversions(sigma))


def mask_to_pairs(mask: int, n: int) -> frozenset[tuple[int, int]]:
    pairs = list(combinations(range(1, n + 1), 2))
    return frozenset(pairs[i] for i in _bits.bits(mask))


# --------------------------------------------------------------------------
# moves and sequences

def apply_move(sigma: Sequence[int], substrings: Iterable[Sequence[int]]) -> Permutation:
    """Reverse the given disjoint substrings (listed as they appear in sigma)."""
    sigma = as_perm(sigma)
    pos = {v: k for k, v in enumerate(sigma)}
    out = list(sigma)
    used: set[int] = set()
    for sub in substrings:
        sub = [int(x) for x in sub]
        if len(sub) < 2:
            raise ValueError("substrings of a move have length at least 2")
        if used & set(sub):
            raise ValueError("substrings of a move overlap")
        used |= set(sub)
        start = pos[sub[0]]
        if tuple(sigma[start:start + len(sub)]) != tuple(sub):
            raise ValueError(f"{sub} is not a contiguous substring of {sigma}")
        out[start:start + len(sub)] = reversed(sub)
    return tuple(out)


def step_substrings(sigma: Sequence[int], tau: Sequence[int]) -> list[tuple[int, ...]] | None:
    """Substrings of sigma whose reversal gives tau, or None if tau is not such a step."""
    if len(sigma) != len(tau) or sorted(sigma) != sorted(tau):
        return None
    pos = {v: k for k, v in enumerate(sigma)}
    out = []
    i = 0
    n = len(sigma)
    while i < n:
        if tau[i] == sigma[i]:
            i += 1
            continue
        j = pos[tau[i]]
        if j < i or tuple(tau[i:j + 1]) != tuple(reversed(sigma[i:j + 1])):
            return None
        out.append(tuple(sigma[i:j + 1]))
        i = j + 1
    return out or None


def move_inversion_set(sigma, tau) -> frozenset[tuple[int, int]]:
    return inversions(sigma) ^ inversions(tau)


def is_move_inversion_set(D: Iterable[tuple[int, int]], sigma: Sequence[int]) -> bool:
    """M1': D is a disjoint union of cliques, each contiguous in sigma."""
    D = set(D)
    if not D:
        return False
    adj: dict[int, set[int]] = {}
    for i, j in D:
        adj.setdefault(i, set()).add(j)
        adj.setdefault(j, set()).add(i)
    pos = {v: k for k, v in enumerate(sigma)}
    seen: set[int] = set()
    for v in adj:
        if v in seen:
            continue
        comp = {v}
        todo = [v]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    todo.append(y)
        seen |= comp
        if any(tuple(sorted(p)) not in D for p in combinations(comp, 2)):
            return False
        ps = sorted(pos[x] for x in comp)
        if ps[-1] - ps[0] != len(ps) - 1:
            return False
    return True


@dataclass
class SequenceReport:
    ok: bool
    m1: bool
    m2: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self):
        return {"ok": self.ok, "M1": self.m1, "M2": self.m2, "violations": self.violations}


def verify_allowable_sequence(seq: Sequence[Sequence[int]]) -> SequenceReport:
    perms = [as_perm(s) for s in seq]
    if len({len(p) for p in perms}) > 1:
        raise ValueError("permutations of different lengths")
    m1 = m2 = True
    msgs = []
    seen: dict[tuple[int, int], int] = {}
    for t in range(len(perms) - 1):
        a, b = perms[t], perms[t + 1]
        if step_substrings(a, b) is None:
            m1 = False
            msgs.append(f"M1: step {t + 1} {a} -> {b} is not a reversal of disjoint substrings")
        for p in sorted(move_inversion_set(a, b)):
            if p in seen:
                m2 = False
                msgs.append(f"M2: pair {p} reversed at steps {seen[p] + 1} and {t + 1}")
            else:
                seen[p] = t
    return SequenceReport(m1 and m2, m1, m2, msgs)


# --------------------------------------------------------------------------
# allowable graphs

@dataclass
class GraphReport:
    ok: bool
    p1: bool
    p2: bool
    p3: bool
    perms: list[Permutation]
    edges: list[tuple[Permutation, Permutation]]
    moves: list[frozenset[tuple[int, int]]]
    diagnostics: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self):
        return {"ok": self.ok, "P1": self.p1, "P2": self.p2, "P3": self.p3,
                "edges": [[list(a), list(b)] for a, b in self.edges],
                "moves": [sorted(list(p) for p in m) for m in self.moves],
                "diagnostics": self.diagnostics}


def _normalize(perms: Iterable[Sequence[int]]) -> list[Permutation]:
    ps = sorted({as_perm(p) for p in perms})
    if len({len(p) for p in ps}) > 1:
        raise ValueError("permutations of different lengths")
    return ps


def _masks(perms: list[Permutation]) -> np.ndarray:
    n = len(perms[0]) if perms else 0
    dtype = np.int64 if n * (n - 1) // 2 <= 62 else object
    return np.array([inversion_mask(p) for p in perms], dtype=dtype)


def infer_edges(perms: list[Permutation]) -> list[tuple[int, int]]:
    """Edges by the minimal-difference criterion: no third permutation in between."""
    inv = _masks(perms)
    out = []
    for a in range(len(perms)):
        D = inv ^ inv[a]
        sub = (D[None, :] & ~D[:, None]) == 0   # sub[b, c]: D_c inside D_b
        sub[:, a] = False
        np.fill_diagonal(sub, False)
        for b in np.nonzero(~sub.any(axis=1))[0]:
            if b > a:
                out.append((a, int(b)))
    return out


def is_allowable_graph(perms: Iterable[Sequence[int]]) -> GraphReport:
    ps = _normalize(perms)
    diag: list[str] = []
    if not ps:
        return GraphReport(False, False, False, False, [], [], [], ["empty permutation set"])
    n = len(ps[0])
    pset = set(ps)
    p1 = all(reverse(p) in pset for p in ps)
    if not p1:
        bad = next(p for p in ps if reverse(p) not in pset)
        diag.append(f"P1: reverse of {bad} missing")
    edges = infer_edges(ps)
    inv = [inversion_mask(p) for p in ps]
    moves = sorted({inv[a] ^ inv[b] for a, b in edges})
    p3 = True
    for x, y in combinations(moves, 2):
        if x & y:
            p3 = False
            diag.append(f"P3: moves {sorted(mask_to_pairs(x, n))} and {sorted(mask_to_pairs(y, n))} overlap")
            break
    p2 = True
    for a, b in edges:
        if step_substrings(ps[a], ps[b]) is None:
            p2 = False
            diag.append(f"P2: edge {ps[a]} - {ps[b]} is not a reversal of disjoint substrings")
            break
    if p2:
        nbrs: dict[int, list[int]] = {i: [] for i in range(len(ps))}
        for a, b in edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        for s in range(len(ps)):
            reached = {s}
            todo = deque([s])
            while todo:
                t = todo.popleft()
                acc = inv[s] ^ inv[t]
                for u in nbrs[t]:
                    if u not in reached and (inv[t] ^ inv[u]) & acc == 0:
                        reached.add(u)
                        todo.append(u)
            if len(reached) != len(ps):
                p2 = False
                miss = next(ps[i] for i in range(len(ps)) if i not in reached)
                diag.append(f"P2: no allowable sequence from {ps[s]} to {miss}")
                break
    ok = p1 and p2 and p3
    return GraphReport(ok, p1, p2, p3, ps, [(ps[a], ps[b]) for a, b in edges],
                       [mask_to_pairs(m, n) for m in moves], diag)


# --------------------------------------------------------------------------
# acycloids

def topes_from_permutations(perms: Iterable[Sequence[int]]) -> set[SignVector]:
    return {partition_to_signvector(OrderedPartition.from_permutation(as_perm(p))) for p in perms}


def parallelism_classes(T: Iterable[Sequence[int]]) -> tuple[list[int], int]:
    """Classes (as masks) of a sign-vector set, and the mask of loops."""
    A = np.array(sorted(T), dtype=np.int8)
    m = A.shape[1]
    classes: dict[bytes, int] = {}
    loops = 0
    for e in range(m):
        col = A[:, e]
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            loops |= 1 << e
            continue
        key = (col * col[nz[0]]).tobytes()
        classes[key] = classes.get(key, 0) | (1 << e)
    return sorted(classes.values(), key=lambda c: c & -c), loops


@dataclass
class AcycloidReport:
    ok: bool
    t1: bool
    t2: bool
    t3: bool
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self):
        return {"ok": self.ok, "T1": self.t1, "T2": self.t2, "T3": self.t3,
                "witness": [str(w) for w in self.witness]}


def acycloid_check(T: Iterable[Sequence[int]]) -> AcycloidReport:
    topes = sorted({SignVector(t) for t in T}, key=str)
    if not topes:
        return AcycloidReport(False, False, False, False)
    tset = set(topes)
    t1 = len({t.support for t in topes}) == 1
    t2 = all(-t in tset for t in topes)
    m = len(topes[0])
    pk = _bits.Packed(topes, m)
    classes, _ = parallelism_classes(topes)
    # reach[i]: union of classes c with reorient(T_i, c) in T
    reach = np.zeros(len(topes), dtype=pk.P.dtype)
    for c in classes:
        cc = np.array(c, dtype=pk.P.dtype) if pk.fast else c
        rp = (pk.P & ~cc) | (pk.M & cc)
        rm = (pk.M & ~cc) | (pk.P & cc)
        hit = pk.contains(rp, rm)
        reach = np.where(hit, reach | cc, reach)
    t3 = True
    wit: tuple = ()
    for i in range(len(topes)):
        sep = (pk.P[i] & pk.M) | (pk.M[i] & pk.P)
        bad = np.nonzero((sep != 0) & ((sep & reach[i]) == 0))[0]
        if len(bad):
            t3 = False
            wit = (topes[i], topes[int(bad[0])])
            break
    if not t2 and not wit:
        wit = (next(t for t in topes if -t not in tset),)
    return AcycloidReport(t1 and t2 and t3, t1, t2, t3, wit)


@dataclass
class SweepAcycloidReport:
    ok: bool
    acycloid: bool
    transitive_topes: bool
    transitive_classes: bool
    witness: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_sweep_acycloid(T: Iterable[Sequence[int]]) -> SweepAcycloidReport:
    topes = sorted({SignVector(t) for t in T}, key=str)
    ac = acycloid_check(topes).ok
    m = len(topes[0])
    n = 1
    while n * (n - 1) // 2 < m:
        n += 1
    if n * (n - 1) // 2 != m:
        raise ValueError("sign vectors are not indexed by Pairs(n)")
    tt = True
    wit = ""
    for t in topes:
        if not is_transitive(t, n):
            tt = False
            wit = f"tope {t} is not transitive"
            break
    classes, loops = parallelism_classes(topes)
    cls_of = {}
    for k, c in enumerate(classes):
        for e in _bits.bits(c):
            cls_of[e] = k
    idx = pair_index(n)
    tc = True
    for i, j, k in combinations(range(1, n + 1), 3):
        es = [idx[i, j], idx[j, k], idx[i, k]]
        for a, b, c in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            ea, eb, ec = es[a], es[b], es[c]
            if ea in cls_of and eb in cls_of and cls_of[ea] == cls_of[eb]:
                if ec in cls_of and cls_of[ec] != cls_of[ea]:
                    tc = False
                    wit = wit or f"parallelism classes not transitive on {(i, j, k)}"
        if not tc:
            break
    return SweepAcycloidReport(ac and tt and tc, ac, tt, tc, wit)


def faces(T: Iterable[Sequence[int]]) -> set[SignVector]:
    return set(covectors_from_topes(T).covectors)


def coboundaries(T: Iterable[Sequence[int]]) -> set[SignVector]:
    topes = sorted({SignVector(t) for t in T}, key=str)
    m = len(topes[0])
    pk = _bits.Packed(topes, m)
    cands = {(0, 0)}
    for i in range(len(pk)):
        cands.update(zip((pk.P & pk.P[i]).tolist(), (pk.M & pk.M[i]).tolist()))
    out = set()
    for p, mm in cands:
        conf = _bits.leq(p, mm, pk.P, pk.M)
        if not conf.any():
            continue
        # X∘(-T') for the conforming T'
        cp, cm = _bits.compose(p, mm, pk.M[conf], pk.P[conf])
        if pk.contains(cp, cm).all():
            out.add(SignVector(_bits.decode(p, mm, m)))
    return out


# --------------------------------------------------------------------------
# sweeps of allowable graphs

def coarsenings(sigma: Sequence[int]) -> list[OrderedPartition]:
    n = len(sigma)
    out = []
    for cuts in range(1 << max(n - 1, 0)):
        blocks, cur = [], [sigma[0]]
        for k in range(1, n):
            if cuts >> (k - 1) & 1:
                blocks.append(cur)
                cur = []
            cur.append(sigma[k])
        blocks.append(cur)
        out.append(OrderedPartition(blocks))
    return out


def _candidates(ps: list[Permutation]) -> set[OrderedPartition]:
    out: set[OrderedPartition] = set()
    for p in ps:
        out.update(coarsenings(p))
    return out


def _key(I: OrderedPartition):
    return (len(I), I.sort_key())


def compose_with_perm(I: OrderedPartition, sigma: Sequence[int]) -> Permutation:
    return compose_partitions(I, OrderedPartition.from_permutation(sigma)).as_permutation()


def sweeps_of_graph(perms: Iterable[Sequence[int]]) -> list[OrderedPartition]:
    ps = _normalize(perms)
    pset = set(ps)
    return sorted((I for I in _candidates(ps) if all(compose_with_perm(I, s) in pset for s in ps)),
                  key=_key)


def _refined_by(I: OrderedPartition, sigma: Permutation) -> bool:
    k = 0
    for b in I.blocks:
        if set(sigma[k:k + len(b)]) != b:
            return False
        k += len(b)
    return True


def potential_sweeps(perms: Iterable[Sequence[int]]) -> list[OrderedPartition]:
    ps = _normalize(perms)
    pset = set(ps)
    out = []
    for I in _candidates(ps):
        refiners = [s for s in ps if _refined_by(I, s)]
        if refiners and all(compose_with_perm(I, reverse(s)) in pset for s in refiners):
            out.append(I)
    return sorted(out, key=_key)


# --------------------------------------------------------------------------
# contraction and characterizations

@dataclass(frozen=True)
class Contraction:
    labels: tuple[int, ...]
    perms: frozenset[Permutation]


def _cliques(move: Iterable[tuple[int, int]]) -> list[set[int]]:
    comps: list[set[int]] = []
    for i, j in move:
        hit = [c for c in comps if i in c or j in c]
        merged = {i, j}.union(*hit) if hit else {i, j}
        comps = [c for c in comps if c not in hit] + [merged]
    return comps


def elementary_contraction(perms: Iterable[Sequence[int]], move: Iterable[tuple[int, int]],
                           report: GraphReport | None = None) -> Contraction:
    ps = _normalize(perms)
    move = frozenset(tuple(sorted(p)) for p in move)
    rep = report or is_allowable_graph(ps)
    if move not in rep.moves:
        raise ValueError(f"{sorted(move)} is not a move of the graph")
    keep = set()
    for a, b in rep.edges:
        if move_inversion_set(a, b) == move:
            keep.add(a)
            keep.add(b)
    drop = set()
    for c in _cliques(move):
        drop |= c - {min(c)}
    n = len(ps[0])
    labels = tuple(i for i in range(1, n + 1) if i not in drop)
    renum = {v: k + 1 for k, v in enumerate(labels)}
    out = frozenset(tuple(renum[v] for v in p if v not in drop) for p in keep)
    return Contraction(labels, out)


@dataclass
class CharacterizationReport:
    om: bool
    potential_equals_sweeps: bool
    contractions_allowable: bool

    @property
    def agree(self) -> bool:
        return self.om == self.potential_equals_sweeps == self.contractions_allowable

    def to_json(self):
        return {"covectorsFromTopes_is_OM": self.om,
                "potential_sweeps_equal_sweeps": self.potential_equals_sweeps,
                "iterated_contractions_allowable": self.contractions_allowable,
                "agree": self.agree}


def iterated_contractions_allowable(perms: Iterable[Sequence[int]], _memo=None) -> bool:
    memo = {} if _memo is None else _memo
    key = frozenset(_normalize(perms))
    if key in memo:
        return memo[key]
    rep = is_allowable_graph(key)
    ok = rep.ok
    if ok:
        for m in rep.moves:
            c = elementary_contraction(key, m, rep)
            if not iterated_contractions_allowable(c.perms, memo):
                ok = False
                break
    memo[key] = ok
    return ok


def characterization_report(perms: Iterable[Sequence[int]]) -> CharacterizationReport:
    ps = _normalize(perms)
    T = topes_from_permutations(ps)
    i = verify_covector_axioms(covectors_from_topes(T)).ok
    ii = potential_sweeps(ps) == sweeps_of_graph(ps)
    iii = iterated_contractions_allowable(ps)
    return CharacterizationReport(i, ii, iii)
