from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crossmpp.crosspoly import (
    Orientation,
    canonical,
    canonical_to_raw,
    face_extremes,
    is_face,
    normalize,
    raw_to_canonical,
    vertex,
)
from crossmpp.errors import NotAFace, NotGeneric


def test_orientation_requires_canonical_order():
    assert canonical(3).a == (1, 2, 3)
    with pytest.raises(NotGeneric):
        Orientation((2, 1))
    with pytest.raises(NotGeneric):
        Orientation((-1, 2))
    assert canonical(3).value(-2) == -2
    assert canonical(2).vertex_order() == [-2, -1, 1, 2]


def test_normalize_examples():
    o, perm = normalize((1, 2, 3))
    assert o.a == (1, 2, 3) and perm == (1, 2, 3)
    o, perm = normalize((3, -1, 2))
    assert o.a == (1, 2, 3)
    assert perm == (-2, 3, 1)


def test_normalize_rejects_non_generic():
    with pytest.raises(NotGeneric) as info:
        normalize((1, 1, 2))
    assert info.value.pair == (1, 2)
    with pytest.raises(NotGeneric):
        normalize((1, -1))
    with pytest.raises(NotGeneric):
        normalize((0, 3))


generic = st.lists(
    st.fractions(min_value=-20, max_value=20, max_denominator=5).filter(bool), min_size=1, max_size=6
).filter(lambda xs: len({abs(x) for x in xs}) == len(xs))


@given(generic)
def test_normalize_is_idempotent(raw):
    o, _ = normalize(raw)
    o2, perm2 = normalize(o.a)
    assert o2 == o and perm2 == tuple(range(1, o.n + 1))


@given(generic)
def test_signed_permutation_transports_the_functional(raw):
    o, perm = normalize(raw)
    n = len(raw)
    for j in range(1, n + 1):
        y = canonical_to_raw(vertex(j, n), perm)
        assert sum(Fraction(r) * c for r, c in zip(raw, y)) == o.a[j - 1]
        assert raw_to_canonical(y, perm) == vertex(j, n)


def test_faces():
    assert is_face({1, -2})
    assert not is_face({1, -1})
    assert is_face(set())
    assert face_extremes({-3, -1, 2}, canonical(3)) == (-3, 2)
    assert face_extremes({1}, canonical(2)) == (1, 1)
    with pytest.raises(NotAFace):
        face_extremes({1, -1}, canonical(2))
