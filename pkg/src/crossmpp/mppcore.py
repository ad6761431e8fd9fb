"""Monotone path polytope points, vertices, facets and projections.

The point of a monotone path ``p_0 = -e_n, p_1, ..., p_{m+1} = e_n`` is the
section average

    sum_j  (l(p_j) - l(p_{j-1})) / (4 a_n) * (p_{j-1} + p_j)

which always lies on the hyperplane ``l(x) = 0``.  Coherent paths give the
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .crosspoly import Orientation, normalize
from .errors import DimensionMismatch, IndexOutOfRange, LengthMismatch
from .exactlin import QVector, dot, is_vertex, qvec, vadd, vscale
from .pathspace import (
    MonotonePath,
    SignVector,
    enumerate_paths,
    iter_signvectors,
    path_is_coherent,
    signvector_to_path,
)


@dataclass(frozen=True)
class MppPoint:
    coords: QVector
    source: MonotonePath


@dataclass(frozen=True)
class FacetIneq:
    """``normal . x >= rhs``; ``label`` is ``(i, eps)`` for the facet functionals."""

    normal: QVector
    rhs: Fraction
    label: tuple

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return dot(self.normal, x)

    def valid_on(self, x) -> bool:
        return self.value(x) >= self.rhs

    def tight_on(self, x) -> bool:
        return self.value(x) == self.rhs


def bs_point(p: MonotonePath, o: Orientation) -> MppPoint:
    if p.n != o.n:
        raise DimensionMismatch(f"path on n={p.n} with orientation of n={o.n}")
    n = o.n
    denom = 4 * o.a[-1]
    acc = [Fraction(0)] * n
    verts = p.vertices
    for u, v in zip(verts, verts[1:]):
        w = (o.value(v) - o.value(u)) / denom
        for s in (u, v):
            acc[abs(s) - 1] += w if s > 0 else -w
    return MppPoint(tuple(acc), p)


def closed_form_point(p: MonotonePath, o: Orientation) -> QVector:
    """Coordinates of :func:`bs_point` written out per vertex.

    With interior ``i_1 < ... < i_k``, ``i_0 = -n`` and ``i_{k+1} = n``, the
    vertex ``e_{i_j}`` carries ``(a_{i_{j+1}} - a_{i_{j-1}}) / (4 a_n)`` and
    ``e_n`` carries ``-(a_{i_1} + a_{i_k}) / (4 a_n)``, where ``e_{-i} = -e_i``
    and ``a_{-i} = -a_i``.
    """
    n = o.n
    an4 = 4 * o.a[-1]
    seq = p.vertices
    x = [Fraction(0)] * n
    x[n - 1] = -(o.value(seq[1]) + o.value(seq[-2])) / an4
    for j in range(1, len(seq) - 1):
        c = (o.value(seq[j + 1]) - o.value(seq[j - 1])) / an4
        s = seq[j]
        x[abs(s) - 1] += c if s > 0 else -c
    return tuple(x)


def ell_value(o: Orientation, x: Sequence[Fraction]) -> Fraction:
    return dot(o.a, x)


def mpp_vertices(o: Orientation) -> list[tuple[SignVector, MppPoint]]:
    """Points of the coherent paths, keyed by sign vector in ``- < 0 < +`` order."""
    return [(s, bs_point(signvector_to_path(s), o)) for s in iter_signvectors(o.n - 1)]


def all_path_points(o: Orientation) -> list[MppPoint]:
    return [bs_point(p, o) for p in enumerate_paths(o.n)]


# ---------------------------------------------------------------------------
# facets


def facet_functional(i: int, eps: Sequence[int], o: Orientation) -> FacetIneq:
    """Facet inequality for the maximal interval ``[eps(i) e_i, eps]``.

    The splitting vertex is ``s = eps(i) e_i``.  Vertices ``eps(k) e_k`` below
    ``s`` get ``phi = -(a_v + a_n)`` (slope -1 from ``-e_n``), those above get
    the interpolation towards ``(a_n, 0)``; coordinates follow by
    ``phi(e_k) = eps(k) phi(eps(k) e_k)``.  The right-hand side is the value on
    any path through ``s`` and no other vertex, ``-(a_s + a_n) / 2``.
    """
    n = o.n
    eps = tuple(int(x) for x in eps)
    if len(eps) != n - 1:
        raise LengthMismatch(f"sign vector of length {len(eps)}, expected {n - 1}")
    if any(x not in (1, -1) for x in eps):
        raise ValueError(f"facet sign vector must be full (entries +-1), got {eps}")
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"facet index {i} outside 1..{n - 1}")
    an = o.a[-1]
    split = eps[i - 1] * i
    a_s = o.value(split)
    normal = [Fraction(0)] * n
    for k in range(1, n):
        v = eps[k - 1] * k
        a_v = o.value(v)
        if a_v <= a_s:
            h = -(a_v + an)
        else:
            h = (a_s + an) / (an - a_s) * (a_v - an)
        normal[k - 1] = h if v > 0 else -h
    return FacetIneq(tuple(normal), -(a_s + an) / 2, (i, eps))


def all_facets(o: Orientation) -> list[FacetIneq]:
    out = []
    for i in range(1, o.n):
        for eps in iter_signvectors(o.n - 1):
            if all(eps):
                out.append(facet_functional(i, eps, o))
    return out


def facet_interval(i: int, eps: Sequence[int]) -> tuple[SignVector, SignVector]:
    lo = tuple(eps[k] if k == i - 1 else 0 for k in range(len(eps)))
    return lo, tuple(eps)


# ---------------------------------------------------------------------------
# centrally symmetric projections


def project_cs(vs: Sequence[Sequence], ell: Sequence) -> list[QVector]:
    """MPP of ``conv(+-v_1, ..., +-v_n)`` for the functional ``ell``.

    The canonical cross-polytope MPP is pushed forward along
    ``e_j -> w_j``, where ``w_j`` are the ``+-v_i`` relabelled so that
    ``0 < ell(w_1) < ... < ell(w_n)``; images that are not vertices of the
    image cloud are dropped.  Output is sorted.
    """
    vs = [qvec(v) for v in vs]
    ell = qvec(ell)
    if len({len(v) for v in vs} | {len(ell)}) != 1:
        raise DimensionMismatch("vertices and functional must share one ambient dimension")
    o, perm = normalize([dot(ell, v) for v in vs])
    ws = [vs[abs(s) - 1] if s > 0 else vscale(-1, vs[abs(s) - 1]) for s in perm]
    dim = len(ell)
    images = []
    for _, pt in mpp_vertices(o):
        img = (Fraction(0),) * dim
        for c, w in zip(pt.coords, ws):
            if c:
                img = vadd(img, vscale(c, w))
        images.append(img)
    cloud = sorted(set(images))
    return [x for x in cloud if is_vertex(x, cloud)]


def coherent_paths(n: int) -> list[MonotonePath]:
    return [p for p in enumerate_paths(n) if path_is_coherent(p)]


def point_by_sign(o: Orientation) -> dict[SignVector, QVector]:
    return {s: pt.coords for s, pt in mpp_vertices(o)}
