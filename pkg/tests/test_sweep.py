from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st
from sympy.functions.combinatorial.numbers import stirling

from sweepscope import orientedmatroid as om
from sweepscope import pointconfig as pc
from sweepscope import sweep as sw
from sweepscope.signvec import GroundSet, cover_le

from conftest import CORPUS, sweep

OP = sw.OrderedPartition


def fubini(n):
    return sum(factorial(k) * int(stirling(n, k)) for k in range(n + 1))


@st.composite
def partitions(draw, n=None):
    n = draw(st.integers(1, 6)) if n is None else n
    perm = draw(st.permutations(range(1, n + 1)))
    cuts = draw(st.lists(st.booleans(), min_size=n - 1, max_size=n - 1))
    blocks, cur = [], [perm[0]]
    for x, c in zip(perm[1:], cuts):
        if c:
            blocks.append(cur)
            cur = []
        cur.append(x)
    blocks.append(cur)
    return OP(blocks)


def test_partition_signvector_examples():
    assert sw.partition_to_signvector(OP([[1, 3], [2]])) == (1, 0, -1)
    assert sw.partition_to_signvector(OP.trivial(3)) == (0, 0, 0)
    assert sw.partition_to_signvector(OP.from_permutation((2, 1, 3))) == (-1, 1, 1)
    assert sw.signvector_to_partition((1, 0, -1)) == OP([[1, 3], [2]])
    assert sw.signvector_to_partition((0, 0, 0)) == OP.trivial(3)
    assert sw.signvector_to_partition((1, 1, 1)) == OP.from_permutation((1, 2, 3))


def from_triple(xij, xjk, xik):
    """Sign vector on Pairs(3) from a pattern read as (X_ij, X_jk, X_ik)."""
    return (xij, xik, xjk)


def test_transitivity_examples():
    rep = sw.check_transitivity(from_triple(1, 1, -1))
    assert not rep.ok and rep.violations == [(1, 2, 3)]
    assert sw.check_transitivity(from_triple(1, 0, 1)).ok
    assert sw.check_transitivity((0, 0, 0)).ok
    # in ground order (+,+,-) is the permutation 1|3|2
    assert sw.signvector_to_partition((1, 1, -1)) == OP.from_permutation((1, 3, 2))
    with pytest.raises(ValueError):
        sw.signvector_to_partition(from_triple(1, 1, -1))


def test_transitive_vectors_are_ordered_partitions():
    # every transitive sign vector on Pairs(4) is the image of an ordered partition
    vecs = list(product((-1, 0, 1), repeat=6))
    trans = {v for v in vecs if sw.is_transitive(v, 4)}
    assert len(trans) == fubini(4) == 75
    assert trans == {sw.partition_to_signvector(p) for p in sw.ordered_partitions(4)}
    mask = sw.transitivity_mask_check(vecs, 4)
    assert {v for v, ok in zip(vecs, mask) if ok} == trans


def test_refines_examples():
    assert sw.refines(OP([[1], [3], [2]]), OP([[1, 3], [2]]))
    assert all(sw.refines(p, OP.trivial(3)) for p in sw.ordered_partitions(3))
    assert not sw.refines(OP([[2], [1, 3]]), OP([[1, 3], [2]]))


def test_compose_partitions():
    assert sw.compose_partitions(OP([[1, 2], [3]]), OP([[3], [2], [1]])) == OP([[2], [1], [3]])


def test_is_sweep_om_examples():
    assert sw.is_sweep_om(sw.braid_om(3).om).ok
    T = [(1, 1, 1), (-1, -1, -1), (-1, 1, 1), (1, -1, -1)]
    C = om.covectors_from_topes(T, GroundSet.pairs(3))
    M = om.OrientedMatroid(C.ground, C.covectors)
    rep = sw.is_sweep_om(M)
    assert not rep.ok and rep.witness == (1, 0, 0)
    for name in CORPUS:
        assert sw.is_sweep_om(sweep(name).om).ok


def test_poset_of_sweeps_examples():
    B = sw.braid_om(3)
    assert len(sw.poset_of_sweeps(B)) == 13 and len(B.sweep_permutations()) == 6
    cross = sweep("crosspolytope2").sweep_permutations()
    assert len(cross) == 8
    # centrally symmetric: with 1,3 and 2,4 antipodal, reversing and swapping stays inside
    anti = {1: 3, 3: 1, 2: 4, 4: 2}
    perms = {p.as_permutation() for p in cross}
    assert all(tuple(anti[i] for i in reversed(p)) in perms for p in perms)
    assert len(sweep("collinear3").sweep_permutations()) == 2


@pytest.mark.parametrize("n", [3, 4, 5])
def test_simplex_sweeps_are_all_ordered_partitions(n):
    S = sweep(f"simplex{n}")
    assert {p.as_permutation() for p in S.sweep_permutations()} == set(permutations(range(1, n + 1)))
    assert set(S.sweeps()) == set(sw.ordered_partitions(n))
    assert len(S.sweeps()) == fubini(n)


@pytest.mark.parametrize("name", CORPUS)
def test_sphere_euler(name):
    S = sweep(name)
    assert sw.sweep_poset_euler(S) == 1 + (-1) ** (S.rank - 1)


@pytest.mark.parametrize("name", CORPUS)
def test_topes_reconstruct(name):
    M = sweep(name).om
    assert om.covectors_from_topes(M.topes, M.ground).covectors == M.covectors


@given(partitions())
def test_partition_roundtrip(I):
    x = sw.partition_to_signvector(I)
    assert sw.is_transitive(x)
    assert sw.signvector_to_partition(x, I.n) == I
    assert OP.parse(str(I)) == I


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(partitions(n), partitions(n))))
def test_refinement_is_conformal_order(pair):
    I, J = pair
    assert sw.refines(J, I) == cover_le(sw.partition_to_signvector(I), sw.partition_to_signvector(J))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(partitions(n), partitions(n))))
def test_composition_matches_signvector_composition(pair):
    I, J = pair
    from sweepscope.signvec import compose

    assert sw.partition_to_signvector(sw.compose_partitions(I, J)) == compose(
        sw.partition_to_signvector(I), sw.partition_to_signvector(J))
    assert sw.compose_partitions(I, I) == I


@settings(max_examples=20, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=2, max_size=5))
def test_random_planar_sweep_oms(points):
    S = sw.SweepOrientedMatroid(pc.sweep_om(pc.PointConfiguration(points)))
    assert sw.sweep_poset_euler(S) == 1 + (-1) ** (S.rank - 1)
