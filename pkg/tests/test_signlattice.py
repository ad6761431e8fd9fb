from __future__ import annotations

from fractions import Fraction as F

import pytest

from crossmpp.errors import DimOutOfRange, LengthMismatch
from crossmpp.pathspace import iter_signvectors, parse_sign
from crossmpp.signlattice import (
    Interval,
    faces,
    fvector,
    fvector_closed,
    graph_diameter,
    interval_cube,
    mpp_adjacent,
    mpp_graph,
    poset_leq,
    signohedron,
    taxicab,
    unit_cubes,
)


def test_poset_order():
    assert poset_leq(parse_sign("+0"), parse_sign("++"))
    assert not poset_leq(parse_sign("+0"), parse_sign("-+"))
    s = parse_sign("-0+")
    assert poset_leq(s, s)
    with pytest.raises(LengthMismatch):
        poset_leq((1,), (1, 0))


def test_intervals():
    iv = Interval(parse_sign("+0"), parse_sign("++"))
    assert iv.dim == 1
    assert set(iv.members()) == {parse_sign("+0"), parse_sign("++")}
    assert iv.contains(parse_sign("++")) and not iv.contains(parse_sign("0+"))
    with pytest.raises(ValueError):
        Interval(parse_sign("++"), parse_sign("+0"))


def test_faces_small():
    assert len(faces(3, 0)) == 8
    assert Interval(parse_sign("+0"), parse_sign("++")) in faces(3, 1)
    assert len(faces(3, 1)) == 8
    assert len(faces(4, 2)) == 24
    with pytest.raises(DimOutOfRange):
        faces(3, 2)


def test_fvector_values():
    assert fvector(2) == [2]
    assert fvector(3) == [8, 8]
    assert fvector(4) == [26, 48, 24]
    with pytest.raises(DimOutOfRange):
        fvector_closed(4, 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_fvector_matches_enumeration_and_euler(n):
    fv = fvector(n)
    assert fv == [len(faces(n, m)) for m in range(n - 1)]
    assert fv[0] == 3 ** (n - 1) - 1
    assert sum((-1) ** m * f for m, f in enumerate(fv)) == 1 - (-1) ** (n - 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_intervals_are_the_cubes_avoiding_the_origin(n):
    got = {interval_cube(iv) for m in range(n - 1) for iv in faces(n, m)}
    assert got == unit_cubes(n)


def test_adjacency():
    assert mpp_adjacent(parse_sign("+0"), parse_sign("++"))
    assert not mpp_adjacent(parse_sign("+0"), parse_sign("-0"))
    assert taxicab(parse_sign("+-"), parse_sign("-+")) == 4


@pytest.mark.parametrize("n", range(3, 7))
def test_graph_edges_are_the_one_dimensional_faces(n):
    g = mpp_graph(n)
    edges = {frozenset(iv.members()) for iv in faces(n, 1)}
    assert g.n_edges == len(edges) == fvector(n)[1]
    for s in g.labels:
        for t in g.neighbors(s):
            assert frozenset((s, t)) in edges


@pytest.mark.parametrize("n", range(3, 8))
def test_diameter(n):
    assert graph_diameter(mpp_graph(n)) == 2 * (n - 1)


def test_taxicab_graph_at_n2_has_no_edges():
    # the two vertices "-" and "+" are at taxicab distance 2
    assert mpp_graph(2).n_edges == 0
    assert graph_diameter(mpp_graph(2)) is None


def test_signohedron_vertices():
    verts = dict(signohedron(3)[0])
    assert verts[parse_sign("+0")] == (F(1, 2), 0)
    assert verts[parse_sign("++")] == (F(1, 3), F(1, 3))


@pytest.mark.parametrize("n", range(2, 6))
def test_signohedron_is_polar_of_cube_plus_cross(n):
    verts, facets = signohedron(n)
    assert len(verts) == 3 ** (n - 1) - 1
    assert len(facets) == (n - 1) * 2 ** (n - 1)
    for f in facets:
        assert all(f.valid_on(x) for _, x in verts)
        tight = [s for s, x in verts if f.tight_on(x)]
        assert len(tight) == 2 ** (n - 2)
    assert {s for s, _ in verts} == set(iter_signvectors(n - 1))
