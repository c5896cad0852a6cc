import pytest
from hypothesis import given, strategies as st

from sweepscope.signvec import (
    GroundSet, Pair, Point, SignVector, compose, conforms_to, cover_le, opposite,
    orthogonal, parse_label, reorient, restrict, separation, support,
)

P, M = 1, -1


def vecs(m=None, count=1):
    size = st.integers(0, 6) if m is None else st.just(m)
    return size.flatmap(lambda k: st.tuples(*[st.lists(st.sampled_from((-1, 0, 1)), min_size=k, max_size=k)
                                              for _ in range(count)]))


def test_compose_examples():
    assert compose((P, 0, M), (0, M, P)) == (P, M, M)
    assert compose((P, M), (0, 0)) == (P, M)
    assert compose((0, 0), (M, P)) == (M, P)


def test_separation_examples():
    assert separation((P, M, 0), (M, M, P)) == {0}
    x = (P, M, 0, P)
    assert separation(x, x) == frozenset()
    assert separation(x, opposite(x)) == support(x)


def test_orthogonal_examples():
    assert orthogonal((P, P, M), (P, M, 0))
    assert not orthogonal((P, P), (P, P))
    assert orthogonal((P, 0), (0, M))


def test_reorient_restrict_cover():
    assert reorient((P, M, 0), {0, 2}) == (M, M, 0)
    assert restrict((P, M, 0), [2, 0]) == (P, 0)
    assert cover_le((0, P, 0), (M, P, P))
    assert not cover_le((M, P, 0), (P, P, P))
    assert conforms_to((0, P, 0), (M, P, P))


def test_mismatch_raises():
    with pytest.raises(ValueError, match="mismatch"):
        compose((P,), (P, M))
    with pytest.raises(ValueError):
        separation((P,), ())


def test_parse_and_str():
    x = SignVector.parse("+0-")
    assert x == (1, 0, -1) and str(x) == "+0-"
    assert SignVector.parse("−+") == (-1, 1)
    assert -SignVector.zero(3) == SignVector.zero(3)


def test_ground_set_order_and_json():
    g = GroundSet.points_and_pairs(3)
    assert [str(e) for e in g] == ["p:1", "p:2", "p:3", "e:1,2", "e:1,3", "e:2,3"]
    assert g.index(Pair(1, 3)) == 4
    assert parse_label("e:2,3") == Pair(2, 3) and parse_label("p:2") == Point(2)
    for h in (g, GroundSet.pairs(4), GroundSet.points(2), GroundSet(["a", "b"])):
        assert GroundSet.from_json(h.to_json()) == h
    with pytest.raises(ValueError):
        Pair(2, 1)
    with pytest.raises(ValueError):
        g.index(Pair(1, 4))


@given(vecs(count=3))
def test_compose_associative_idempotent(t):
    x, y, z = t
    assert compose(compose(x, y), z) == compose(x, compose(y, z))
    assert compose(x, x) == tuple(x)


@given(vecs(count=2), st.data())
def test_reorient_involution_commutes(t, data):
    x, _ = t
    F = data.draw(st.sets(st.integers(0, max(len(x) - 1, 0))) if x else st.just(set()))
    assert reorient(reorient(x, F), F) == tuple(x)
    assert reorient(opposite(x), F) == opposite(reorient(x, F))


@given(vecs(count=2))
def test_separation_symmetry(t):
    x, y = t
    assert separation(x, y) == separation(y, x)
    assert separation(x, opposite(y)) | separation(x, y) >= support(x) & support(y)


@given(vecs(count=2))
def test_orthogonal_symmetry(t):
    x, y = t
    assert orthogonal(x, y) == orthogonal(y, x) == orthogonal(opposite(x), y)
