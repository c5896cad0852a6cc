from itertools import combinations, product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from sweepscope import bigom
from sweepscope import orientedmatroid as om
from sweepscope import pointconfig as pc
from sweepscope import sweep as sw
from sweepscope.signvec import GroundSet, Pair, compose

from conftest import CORPUS, big, config, little, sweep


def regions_by_whitney(normals):
    """Number of regions of a central arrangement: sum over subsets of (-1)^(|S| - rank S)."""
    total = 0
    for k in range(len(normals) + 1):
        for S in combinations(normals, k):
            r = sympy.Matrix(S).rank() if S else 0
            total += (-1) ** (k - r)
    return total


def test_lift_examples():
    pts = [bigom.lift_covector((1,), k).combined[:2] for k in range(1, 6)]
    assert pts == [(1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1)]
    for k in range(1, 6):
        assert bigom.lift_covector((1,), k).combined[2] == 1
    X = sw.partition_to_signvector(sw.OrderedPartition.from_permutation((1, 2, 3)))
    assert bigom.lift_covector(X, 1).combined[:3] == (1, 1, 1)
    lifted = bigom.lift_covector(X, 4)
    assert lifted.combined == (-1, 0, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        bigom.lift_covector(X, 8)


def test_type_a():
    B = bigom.big_om(sw.braid_om(3))
    assert len(B) == 75
    R = bigom.relabel_to(B, bigom.braid_relabel(3), GroundSet.pairs(4))
    assert R.covectors == sw.braid_om(4).om.covectors
    perms = {sw.signvector_to_partition(t).as_permutation() for t in R.topes}
    assert len(perms) == 24


def test_type_b_tope_count():
    B = big("crosspolytope2")
    # B_3 normals x_i and x_i +- x_j, without x_3
    normals = [(1, 0, 0), (0, 1, 0)] + [
        tuple(a if t == i else b if t == j else 0 for t in range(3))
        for i, j in combinations(range(3), 2) for a, b in ((1, 1), (1, -1))]
    assert len(normals) == 8
    assert len(B.topes) == regions_by_whitney(normals) == 40
    # same number of elements after simplification
    simple, _ = B.simplification()
    assert simple.size == 8 and simple.rank == 3


def test_rank_zero():
    Z = bigom.rank_zero_sweep_om(3)
    B = bigom.big_om(Z)
    assert B.rank == 1
    assert B.restriction(range(3)).covectors == {(-1,) * 3, (0,) * 3, (1,) * 3}
    L = bigom.little_om(Z)
    assert L.is_acyclic and L.parallelism_classes == [frozenset({0, 1, 2})]


def test_little_examples():
    assert bigom.little_om(sw.braid_om(3)).covectors == little("triangle").covectors
    assert bigom.little_om(sweep("square")).covectors == little("square").covectors


@pytest.mark.parametrize("name", CORPUS)
def test_big_om_corpus(name):
    S = sweep(name)
    B = big(name)
    assert om.verify_covector_axioms(B).ok
    assert B.covectors == pc.big_om_realizable(config(name)).covectors
    assert B.rank == S.rank + 1 == bigom.little_om(S).rank
    assert bigom.little_om(S).is_acyclic
    n = S.n
    assert B.restriction(range(n, B.size)).covectors == S.om.covectors
    pairs = GroundSet.pairs(n)
    assert bigom.is_modular_hyperplane(B, pairs)
    assert bigom.is_tight_modular_hyperplane(B, pairs)
    rec = bigom.recognize_big_om(B)
    assert rec.ok and rec.reorientation == frozenset()


@pytest.mark.parametrize("name", ["triangle", "square", "collinear3", "crosspolytope2"])
def test_lift_composition_closure(name):
    S = sweep(name)
    lifts = {x: [bigom.lift_covector(x, k).combined for k in range(1, 2 * len(S.partition_of(x)) + 2)]
             for x in S.om.covectors}
    for x, y in product(lifts, repeat=2):
        target = set(lifts[compose(x, y)])
        for a in lifts[x]:
            for b in lifts[y]:
                assert compose(a, b) in target


def test_modular_examples():
    G = little("generic4")
    assert bigom.is_hyperplane(G, [0, 1])
    assert not bigom.is_modular_hyperplane(G, [0, 1])
    B2 = bigom.big_om(sw.braid_om(2))
    assert bigom.is_modular_hyperplane(B2, [Pair(1, 2)])
    assert bigom.is_tight_modular_hyperplane(B2, [Pair(1, 2)])
    with pytest.raises(ValueError):
        bigom.is_modular_hyperplane(G, [0])


def test_recognize_reoriented():
    B = big("triangle")
    R = B.reorientation([Pair(1, 3)])
    rec = bigom.recognize_big_om(R)
    assert rec.ok and Pair(1, 3) in rec.reorientation


def test_recognize_little_with_loop_pairs():
    L = little("triangle")
    vecs = {tuple(x) + (0, 0, 0) for x in L.covectors}
    M = om.OrientedMatroid(GroundSet.points_and_pairs(3), vecs)
    assert not bigom.recognize_big_om(M).ok


def test_decoration_of_braid():
    B = bigom.big_om(sw.braid_om(3))
    dec = bigom.decoration_of(B, GroundSet.pairs(3))
    assert dec.delta == {p: frozenset({(p.i, p.j)}) for p in GroundSet.pairs(3)}
    assert set(dec.epsilon.values()) == {1}
    assert bigom.Decoration.from_json(dec.to_json()).to_json() == dec.to_json()


def test_extend_rank_one():
    N = om.OrientedMatroid(["f"], [(0,), (1,), (-1,)])
    dec = bigom.Decoration({"f": frozenset({(1, 2)})}, {(1, 2): 1})
    E = bigom.extend_with_decoration(N, dec, 2)
    assert E.rank == 2 and [str(g) for g in E.ground] == ["p:1", "p:2", "f"]
    ref = bigom.big_om(sw.braid_om(2))
    assert E.covectors == ref.covectors


def test_extend_invalid():
    N = om.OrientedMatroid(["f"], [(0,), (1,), (-1,)])
    with pytest.raises(ValueError):
        bigom.extend_with_decoration(N, bigom.Decoration({"f": frozenset({(1, 2)})}, {(1, 2): 1}), 3)


@pytest.mark.parametrize("name", ["triangle", "simplex4", "generic4"])
def test_decoration_roundtrip(name):
    B = big(name)
    S = sweep(name)
    F = GroundSet.pairs(S.n)
    dec = bigom.decoration_of(B, F)
    E = bigom.extend_with_decoration(B.restriction(F), dec, S.n)
    assert E.covectors == B.covectors


@settings(max_examples=15, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=2, max_size=4))
def test_random_big_oms(points):
    A = pc.PointConfiguration(points)
    S = sw.SweepOrientedMatroid(pc.sweep_om(A))
    B = bigom.big_om(S)
    assert B.covectors == pc.big_om_realizable(A).covectors
    assert bigom.recognize_big_om(B).ok
