from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from sweepscope import pointconfig as pc
from sweepscope import sweep as sw
from sweepscope.signvec import GroundSet, Pair, Point

from conftest import CORPUS, config, little, sweep
from oracles import separable_by_lp

OP = sw.OrderedPartition


def planar_points(min_n=2, max_n=5):
    c = st.integers(-3, 3)
    return st.lists(st.tuples(c, c), min_size=min_n, max_size=max_n)


def test_realizable_small_cases():
    braid = {sw.partition_to_signvector(p) for p in sw.ordered_partitions(3)}
    roots = [(-1, 1, 0), (-1, 0, 1), (0, -1, 1)]
    assert pc.realizable_om(pc.VectorConfiguration(roots)).covectors == braid
    assert pc.realizable_om(pc.VectorConfiguration([(2, 1)])).covectors == {(0,), (1,), (-1,)}
    M = pc.realizable_om(pc.VectorConfiguration([(1, 2), (-1, -2)]))
    assert M.rank == 1 and M.parallelism_classes == [frozenset({0, 1})]
    assert M.covectors == {(0, 0), (1, -1), (-1, 1)}


def test_little_om_examples():
    M = little("triangle")
    assert M.rank == 3 and len(M.topes) == 8
    rep = pc.little_om(pc.PointConfiguration([(1, 1)] * 3))
    assert rep.rank == 1 and rep.parallelism_classes == [frozenset({0, 1, 2})]
    G = little("generic4")
    assert G.rank == 3 and G.is_acyclic and not G.loops


def test_sweep_om_examples():
    assert len(sweep("triangle").om.topes) == 6
    assert len(sweep("crosspolytope2").om.topes) == 8
    assert len(sweep("square").om.topes) == 8


def test_big_realizable_examples():
    assert pc.big_om_realizable(config("triangle")).rank == 3
    one = pc.big_om_realizable(pc.PointConfiguration([(5, 7)]))
    assert one.ground == GroundSet.points(1) and one.rank == 1


def test_sweep_of_direction():
    A = pc.PointConfiguration([(0, 0), (1, 0), (0, 1)])
    assert pc.sweep_of_direction(A, (1, 0)) == OP([[1, 3], [2]])
    assert pc.sweep_of_direction(A, (0, 0)) == OP.trivial(3)
    assert pc.sweep_of_direction(A, (1, 1)) == OP([[1], [2, 3]])
    with pytest.raises(ValueError):
        pc.sweep_of_direction(A, (1,))


def test_k_sets_examples():
    X = config("crosspolytope2")
    assert pc.k_sets(X, 1) == {frozenset({i}) for i in range(1, 5)}
    two = pc.k_sets(X, 2)
    assert len(two) == 4
    assert pc.k_sets(config("collinear3"), 1) == {frozenset({1}), frozenset({3})}


def test_k_set_polytope():
    X = config("crosspolytope2")
    assert pc.k_set_polytope_vertices(X, 1) == set(X.points)
    h = Fraction(1, 2)
    assert pc.k_set_polytope_vertices(X, 2) == {(a, b) for a in (h, -h) for b in (h, -h)}
    assert len(pc.k_set_polytope_vertices(X, 4)) == 1


def test_sweep_polytope_examples():
    assert len(pc.sweep_polytope_vertices(config("triangle"))) == 6
    assert len(pc.sweep_polytope_vertices(config("crosspolytope2"))) == 8
    single = pc.PointConfiguration([(3, 4)])
    assert list(pc.sweep_polytope_vertices(single).values()) == [(0, 0)]


@pytest.mark.parametrize("name", [n for n in CORPUS if config(n).dim >= 2 and sweep(n).rank == config(n).dim])
def test_sweep_polytope_matches_convex_hull(name):
    A = config(name)
    diffs = np.array([[float(x) for x in d] for d in A.differences()])
    m = len(diffs)
    signs = np.array([[1 if b >> i & 1 else -1 for i in range(m)] for b in range(2 ** m)])
    pts = signs @ diffs / 2
    hull = ConvexHull(pts)
    verts = {tuple(np.round(pts[i], 9)) for i in hull.vertices}
    ours = {tuple(round(float(x), 9) for x in v) for v in pc.sweep_polytope_vertices(A).values()}
    assert ours == verts


@pytest.mark.parametrize("name", CORPUS)
def test_normal_fan(name):
    A = config(name)
    rng = np.random.default_rng(7)
    V = pc.sweep_polytope_vertices(A)
    for _ in range(20):
        u = tuple(Fraction(int(x)) for x in rng.integers(-50, 50, A.dim))
        t = sw.partition_to_signvector(pc.sweep_of_direction(A, u))
        if not all(t):
            continue
        best = max(V.values(), key=lambda v: sum(a * b for a, b in zip(u, v)))
        assert sum(a * b for a, b in zip(u, V[t])) == sum(a * b for a, b in zip(u, best))


def test_veronese():
    A = pc.PointConfiguration([(3,)])
    assert pc.monomial_exponents(1, 2) == [(0,), (1,), (2,)]
    assert pc.veronese(A, 2).points == ((1, 3, 9),)
    T = config("triangle")
    V = pc.veronese(T, 1)
    assert V.points == tuple((1,) + p for p in T.points)
    assert pc.sweep_om(V).covectors == sweep("triangle").om.covectors
    line = pc.PointConfiguration([(0,), (1,), (2,), (3,)])
    assert len(pc.sweep_om(line).topes) == 2
    assert len(pc.sweep_om(pc.veronese(line, 3)).topes) > 2


def test_json_csv_roundtrip():
    for name in CORPUS:
        A = config(name)
        assert pc.PointConfiguration.from_json(A.to_json()) == A
    B = pc.PointConfiguration.from_csv("0,0\n1/2,1\n\n2,3\n")
    assert B.points[1] == (Fraction(1, 2), 1)


def test_float_rejected():
    with pytest.raises((TypeError, ValueError)):
        pc.PointConfiguration([(0.5, 1)])


@pytest.mark.parametrize("name", CORPUS)
def test_big_restrictions_and_ranks(name):
    A = config(name)
    B = pc.big_om_realizable(A)
    pts = [Point(i) for i in range(1, A.n + 1)]
    prs = [Pair(i, j) for i in range(1, A.n + 1) for j in range(i + 1, A.n + 1)]
    assert B.restriction(pts).covectors == little(name).covectors
    assert B.restriction(prs).covectors == sweep(name).om.covectors
    assert sweep(name).rank == little(name).rank - 1


@settings(max_examples=30, deadline=None)
@given(planar_points(), st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_sweep_of_direction_is_covector(points, u):
    A = pc.PointConfiguration(points)
    M = pc.sweep_om(A)
    assert sw.partition_to_signvector(pc.sweep_of_direction(A, u)) in M
    if len(set(points)) >= 2:
        assert M.rank == pc.little_om(A).rank - 1


@settings(max_examples=25, deadline=None)
@given(planar_points(min_n=3, max_n=5).filter(lambda p: len(set(p)) == len(p)), st.data())
def test_k_sets_match_lp(points, data):
    A = pc.PointConfiguration(points)
    k = data.draw(st.integers(1, A.n - 1))
    lp = {frozenset(i + 1 for i in S) for S in __import__("itertools").combinations(range(A.n), k)
          if separable_by_lp(points, set(S))}
    assert pc.k_sets(A, k) == lp


@settings(max_examples=25, deadline=None)
@given(planar_points(min_n=2, max_n=5))
def test_sweep_prefixes_are_k_sets(points):
    A = pc.PointConfiguration(points)
    for p in sw.SweepOrientedMatroid(pc.sweep_om(A)).sweep_permutations():
        prefix = []
        for block in p.blocks[:-1]:
            prefix += [i - 1 for i in block]
            assert pc.is_strictly_separable(A, prefix)
