from __future__ import annotations

from fractions import Fraction as F

import pytest

from crossmpp.crosspoly import canonical, normalize
from crossmpp.errors import LabelMismatch
from crossmpp.mppcore import FacetIneq, all_facets, mpp_vertices, point_by_sign
from crossmpp.pathspace import parse_sign
from crossmpp.verify import (
    brute_mpp,
    brute_mpp_general,
    confirm_facets,
    cross_polytope_points,
    equivalent,
    incidence,
    monotone_paths,
    mpp_incidence,
    polytope_edges,
    raw_orientation_check,
    report_json,
    signohedron_incidence,
    verify_all,
)


def test_brute_small():
    assert len(brute_mpp(canonical(2))) == 2
    got = {p.coords for p in brute_mpp(canonical(3))}
    assert got == set(point_by_sign(canonical(3)).values())
    assert len(brute_mpp(canonical(4))) == 26


def test_polytope_edges_of_octahedron():
    pts = cross_polytope_points(3)
    edges = polytope_edges(pts)
    assert len(edges) == 12
    # antipodes are never joined
    assert all(sum(pts[i][k] + pts[j][k] != 0 for k in range(3)) for i, j in map(tuple, edges))


def test_monotone_paths_of_octahedron():
    paths = monotone_paths(cross_polytope_points(3), (1, 2, 3))
    assert len(paths) == 10


def test_general_brute_matches_on_cross_polytope():
    pts = cross_polytope_points(3)
    assert set(brute_mpp_general(pts, (1, 2, 3))) == set(point_by_sign(canonical(3)).values())


@pytest.mark.parametrize("raw", [(3, -1, 2), (-5, 2, -7), (1, -2, 3, -4)])
def test_raw_orientations(raw):
    assert raw_orientation_check(raw)


def test_confirm_facets_accepts_the_true_facets():
    o = canonical(4)
    verts = [(s, pt.coords) for s, pt in mpp_vertices(o)]
    rep = confirm_facets(verts, all_facets(o))
    assert rep.ok and rep.edges_covered


def test_confirm_facets_flags_doubled_rhs():
    # with right-hand side -a_i - a_n nothing is tight
    o = canonical(3)
    verts = [(s, pt.coords) for s, pt in mpp_vertices(o)]
    doubled = [FacetIneq(f.normal, 2 * f.rhs, f.label) for f in all_facets(o)]
    rep = confirm_facets(verts, doubled)
    assert not rep.ok
    assert {c.status for c in rep.checks} == {"RANK_DEFICIENT"}


def test_confirm_facets_flags_violation_and_missing():
    o = canonical(3)
    verts = [(s, pt.coords) for s, pt in mpp_vertices(o)]
    fs = all_facets(o)
    halved = [FacetIneq(f.normal, f.rhs / 2, f.label) for f in fs]
    assert {c.status for c in confirm_facets(verts, halved).checks} == {"VALIDITY_VIOLATION"}
    assert not confirm_facets(verts, fs[:-1]).ok


def test_incidence_equivalence():
    a = mpp_incidence(canonical(4))
    assert equivalent(a, a)
    assert equivalent(a, signohedron_incidence(4))
    assert equivalent(mpp_incidence(canonical(3)), mpp_incidence(normalize((2, 5, 11))[0]))
    with pytest.raises(LabelMismatch):
        equivalent(a, signohedron_incidence(3))


def test_equivalence_detects_a_swapped_label():
    a = mpp_incidence(canonical(3))
    swap = {parse_sign("+0"): parse_sign("0+"), parse_sign("0+"): parse_sign("+0")}
    assert not equivalent(a, a, row_map=lambda s: swap.get(s, s))


def test_incidence_of_a_square():
    verts = [("a", (0, 0)), ("b", (1, 0)), ("c", (1, 1)), ("d", (0, 1))]
    ineqs = [FacetIneq((1, 0), F(0), "x>=0"), FacetIneq((0, 1), F(0), "y>=0")]
    m = incidence(verts, ineqs)
    assert m.matrix() == [[1, 1], [0, 1], [0, 0], [1, 0]]
    assert m.row_sums() == {"a": 2, "b": 1, "c": 0, "d": 1}


@pytest.mark.parametrize("n", [3, 4])
def test_verify_all_passes(n):
    checks = verify_all(canonical(n))
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]
    rep = report_json(canonical(n), checks)
    assert rep["ok"] and rep["a"] == [str(k) for k in range(1, n + 1)]
