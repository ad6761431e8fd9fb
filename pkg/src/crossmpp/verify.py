"""Brute-force oracle and cross-checks.

The oracle never uses the coherence criterion: it takes the points of *all*
monotone paths and keeps those not in the convex hull of the others.  A
second, fully generic route works on any vertex list and functional, finding
edges by LP, so it can be run on raw (non-canonical) orientations and on
other centrally symmetric polytopes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from . import coherence, flipdyn, signlattice
from .crosspoly import Orientation, normalize, raw_to_canonical
from .errors import LabelMismatch
from .exactlin import (
    Kind,
    LinConstraint,
    QVector,
    affine_rank,
    dot,
    is_vertex,
    lp_feasible_strict,
    qvec,
    vadd,
    vscale,
    vec_to_json,
    vsub,
)
from .mppcore import FacetIneq, MppPoint, all_facets, all_path_points, ell_value, facet_interval, mpp_vertices
from .pathspace import SignVector, enumerate_paths


def brute_mpp(o: Orientation) -> list[MppPoint]:
    """Points of all paths that survive the convex-position filter."""
    pts = all_path_points(o)
    uniq: dict[QVector, MppPoint] = {}
    for p in pts:
        uniq.setdefault(p.coords, p)
    cloud = list(uniq)
    return [uniq[x] for x in cloud if is_vertex(x, cloud)]


# ---------------------------------------------------------------------------
# generic V-polytope route


def polytope_edges(points: Sequence[Sequence]) -> set[frozenset[int]]:
    """Index pairs ``{i, j}`` spanning an edge of ``conv(points)``.

    Points must be in convex position.  ``[u, w]`` is an edge iff some
    functional is constant on it and strictly larger on every other point.
    """
    pts = [qvec(p) for p in points]
    d = len(pts[0])
    edges = set()
    for i, j in itertools.combinations(range(len(pts)), 2):
        u, w = pts[i], pts[j]
        rows = [LinConstraint(vsub(w, u), Kind.EQ)] if any(vsub(w, u)) else []
        rows += [LinConstraint(vsub(x, u)) for k, x in enumerate(pts) if k not in (i, j)]
        if lp_feasible_strict(rows, d) is not None:
            edges.add(frozenset((i, j)))
    return edges


def monotone_paths(points: Sequence[Sequence], ell: Sequence) -> list[tuple[int, ...]]:
    """All ``ell``-increasing edge paths from the minimum to the maximum vertex."""
    pts = [qvec(p) for p in points]
    ell = qvec(ell)
    val = [dot(ell, p) for p in pts]
    if len(set(val)) != len(val):
        raise ValueError("functional is not generic on these vertices")
    edges = polytope_edges(pts)
    up = {i: sorted((j for j in range(len(pts)) if frozenset((i, j)) in edges and val[j] > val[i]), key=val.__getitem__)
          for i in range(len(pts))}
    lo = min(range(len(pts)), key=val.__getitem__)
    hi = max(range(len(pts)), key=val.__getitem__)
    out = []

    def walk(v, path):
        if v == hi:
            out.append(tuple(path))
            return
        for w in up[v]:
            walk(w, path + [w])

    walk(lo, [lo])
    return out


def general_path_point(path: Sequence[int], points: Sequence[Sequence], ell: Sequence) -> QVector:
    pts = [qvec(p) for p in points]
    ell = qvec(ell)
    val = [dot(ell, p) for p in pts]
    span = 2 * (val[path[-1]] - val[path[0]])
    acc = (Fraction(0),) * len(ell)
    for u, v in zip(path, path[1:]):
        acc = vadd(acc, vscale((val[v] - val[u]) / span, vadd(pts[u], pts[v])))
    return acc


def brute_mpp_general(points: Sequence[Sequence], ell: Sequence) -> list[QVector]:
    """MPP vertices of ``conv(points)`` straight from its own monotone paths."""
    cloud = sorted({general_path_point(p, points, ell) for p in monotone_paths(points, ell)})
    return [x for x in cloud if is_vertex(x, cloud)]


def cross_polytope_points(n: int) -> list[QVector]:
    out = []
    for i in range(n):
        for sg in (1, -1):
            out.append(tuple(Fraction(sg if k == i else 0) for k in range(n)))
    return out


def raw_orientation_check(raw: Sequence) -> bool:
    """MPP for a raw generic functional equals the canonical one after the signed permutation."""
    raw = qvec(raw)
    o, perm = normalize(raw)
    direct = {raw_to_canonical(x, perm) for x in brute_mpp_general(cross_polytope_points(len(raw)), raw)}
    return direct == {pt.coords for _, pt in mpp_vertices(o)}


# ---------------------------------------------------------------------------
# facets and incidence


@dataclass
class FacetCheck:
    label: tuple
    status: str  # OK, VALIDITY_VIOLATION, RANK_DEFICIENT, TIGHT_SET_MISMATCH
    tight: list[SignVector]
    rank: int
    minimum: Fraction


@dataclass
class FacetReport:
    n: int
    checks: list[FacetCheck]
    expected_count: int
    edges_covered: bool
    ok: bool = field(init=False)

    def __post_init__(self):
        self.ok = (
            all(c.status == "OK" for c in self.checks)
            and len(self.checks) == self.expected_count
            and self.edges_covered
        )


def confirm_facets(vertices: Sequence[tuple[SignVector, Sequence]], ineqs: Sequence[FacetIneq]) -> FacetReport:
    """Validity, tight sets, affine rank and completeness for candidate facets.

    ``vertices`` are ``(sign vector, point)`` pairs.  A facet must be valid on
    every vertex, tight on an affinely ``(n-2)``-dimensional set, and (for
    ``(i, eps)`` labels) tight on exactly the interval ``[eps(i) e_i, eps]``.
    The list is complete when its size is ``(n-1) 2^(n-1)`` and every MPP
    edge lies in at least ``n-2`` tight sets.
    """
    n = len(vertices[0][0]) + 1
    checks = []
    tight_sets = []
    for f in ineqs:
        vals = [(s, f.value(x)) for s, x in vertices]
        low = min(v for _, v in vals)
        tight = [s for s, v in vals if v == f.rhs]
        pts = [x for s, x in vertices if f.value(x) == f.rhs]
        rk = affine_rank(pts)
        if low < f.rhs:
            status = "VALIDITY_VIOLATION"
        elif rk != n - 2:
            status = "RANK_DEFICIENT"
        elif not _tight_matches_label(f.label, tight):
            status = "TIGHT_SET_MISMATCH"
        else:
            status = "OK"
        checks.append(FacetCheck(f.label, status, tight, rk, low))
        tight_sets.append(set(tight))
    covered = True
    if n >= 3:
        for iv in signlattice.faces(n, 1):
            e = set(iv.members())
            if sum(e <= t for t in tight_sets) < n - 2:
                covered = False
                break
    return FacetReport(n, checks, (n - 1) * 2 ** (n - 1), covered)


def _tight_matches_label(label, tight: Sequence[SignVector]) -> bool:
    try:
        i, eps = label
        lo, hi = facet_interval(i, eps)
    except (TypeError, ValueError):
        return True
    return set(tight) == set(signlattice.Interval(lo, hi).members())


@dataclass(frozen=True)
class IncidenceMatrix:
    rows: tuple  # vertex labels
    cols: tuple  # facet labels
    entries: frozenset  # (row label, col label) pairs where the vertex is tight

    def matrix(self) -> list[list[int]]:
        return [[int((r, c) in self.entries) for c in self.cols] for r in self.rows]

    def row_sums(self) -> dict:
        out = {r: 0 for r in self.rows}
        for r, _ in self.entries:
            out[r] += 1
        return out


def incidence(vertices: Sequence[tuple[Hashable, Sequence]], ineqs: Sequence[FacetIneq]) -> IncidenceMatrix:
    entries = frozenset((s, f.label) for s, x in vertices for f in ineqs if f.tight_on(x))
    return IncidenceMatrix(tuple(s for s, _ in vertices), tuple(f.label for f in ineqs), entries)


def equivalent(a: IncidenceMatrix, b: IncidenceMatrix, row_map=None, col_map=None) -> bool:
    """True iff the label bijection carries ``a`` onto ``b`` entry for entry.

    ``row_map``/``col_map`` map labels of ``a`` to labels of ``b`` (identity
    by default).  Raises :class:`LabelMismatch` if they are not bijections
    onto the labels of ``b``.
    """
    rmap = row_map or (lambda x: x)
    cmap = col_map or (lambda x: x)
    rows = [rmap(r) for r in a.rows]
    cols = [cmap(c) for c in a.cols]
    if len(set(rows)) != len(rows) or set(rows) != set(b.rows):
        raise LabelMismatch("row labels do not correspond")
    if len(set(cols)) != len(cols) or set(cols) != set(b.cols):
        raise LabelMismatch("column labels do not correspond")
    return {(rmap(r), cmap(c)) for r, c in a.entries} == set(b.entries)


def mpp_incidence(o: Orientation) -> IncidenceMatrix:
    return incidence([(s, pt.coords) for s, pt in mpp_vertices(o)], all_facets(o))


def signohedron_incidence(n: int) -> IncidenceMatrix:
    verts, facets = signlattice.signohedron(n)
    return incidence(verts, facets)


# ---------------------------------------------------------------------------
# everything at once


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def verify_all(o: Orientation, *, include_graphs: bool = True) -> list[Check]:
    n = o.n
    out: list[Check] = []

    paths = enumerate_paths(n)
    dis = [p for p in paths if (coherence.is_coherent_lp(p, o) is not None) != coherence.is_coherent_fast(p)]
    out.append(Check("coherence_lp_vs_antipode", not dis, f"{len(paths)} paths, {len(dis)} disagreements"))

    all_pts = all_path_points(o)
    off = [p for p in all_pts if ell_value(o, p.coords) != 0]
    out.append(Check("points_on_hyperplane", not off, f"{len(all_pts)} points, {len(off)} off l(x)=0"))

    verts = mpp_vertices(o)
    brute = {p.coords for p in brute_mpp(o)}
    same = brute == {pt.coords for _, pt in verts}
    out.append(Check("brute_vertices_match", same, f"{len(brute)} oracle vertices, {len(verts)} coherent points"))

    rep = confirm_facets([(s, pt.coords) for s, pt in verts], all_facets(o))
    bad = [c for c in rep.checks if c.status != "OK"]
    out.append(Check("facets", rep.ok, f"{len(rep.checks)} facets, {len(bad)} failing, edges covered={rep.edges_covered}"))

    fv_enum = [len(signlattice.faces(n, m)) for m in range(n - 1)]
    fv = signlattice.fvector(n)
    euler = sum((-1) ** m * f for m, f in enumerate(fv)) == 1 - (-1) ** (n - 1)
    out.append(Check("fvector", fv_enum == fv and euler, " ".join(map(str, fv))))

    eq = equivalent(mpp_incidence(o), signohedron_incidence(n))
    out.append(Check("signohedron_equivalence", eq))

    if include_graphs:
        d = signlattice.graph_diameter(signlattice.mpp_graph(n))
        out.append(Check("mpp_graph_diameter", d == 2 * (n - 1), f"diameter={d} expected={2 * (n - 1)}"))
        if n >= 3:
            fd = flipdyn.flip_diameter(n)
            res = flipdyn.dist_to_coherent(n)
            ok = fd == 2 * (n - 1) and res.maximum == n - 2 and res.distance[flipdyn.extremal_path(n)] == n - 2
            out.append(Check("flip_graph", ok, f"diameter={fd} max_dist_to_coherent={res.maximum}"))
    return out


def report_json(o: Orientation, checks: Iterable[Check]) -> dict:
    checks = list(checks)
    return {
        "n": o.n,
        "a": vec_to_json(o.a),
        "ok": all(c.ok for c in checks),
        "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
    }

