"""The sign poset, its interval lattice, and the signohedron.

Sign vectors live in ``{-1,0,1}^(n-1)`` minus zero and are ordered by
``s <= t`` iff ``t`` agrees with ``s`` on the support of ``s``.  Intervals
``[lo, hi]`` of this poset are the faces of the MPP of the ``n``-dimensional
cross-polytope; an interval of length ``m`` is an ``m``-face.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import DimOutOfRange, LengthMismatch
from .exactlin import QVector
from .graphkern import Graph, diameter, toggle_graph
from .mppcore import FacetIneq
from .pathspace import SignVector, iter_signvectors, signvector_to_mask


def support(s: Sequence[int]) -> frozenset[int]:
    return frozenset(k for k, x in enumerate(s) if x)


def poset_leq(s: Sequence[int], t: Sequence[int]) -> bool:
    if len(s) != len(t):
        raise LengthMismatch(f"sign vectors of length {len(s)} and {len(t)}")
    return all(x == 0 or x == y for x, y in zip(s, t))


@dataclass(frozen=True)
class Interval:
    lo: SignVector
    hi: SignVector

    def __post_init__(self):
        if not any(self.lo) or not poset_leq(self.lo, self.hi):
            raise ValueError(f"[{self.lo}, {self.hi}] is not an interval of the sign poset")

    @property
    def dim(self) -> int:
        return len(support(self.hi)) - len(support(self.lo))

    def members(self) -> list[SignVector]:
        free = sorted(support(self.hi) - support(self.lo))
        out = []
        for keep in itertools.product((False, True), repeat=len(free)):
            s = list(self.lo)
            for k, on in zip(free, keep):
                if on:
                    s[k] = self.hi[k]
            out.append(tuple(s))
        return out

    def contains(self, s: Sequence[int]) -> bool:
        return poset_leq(self.lo, s) and poset_leq(s, self.hi)


def faces(n: int, m: int) -> list[Interval]:
    if not 0 <= m <= n - 2:
        raise DimOutOfRange(f"face dimension {m} outside 0..{n - 2}")
    out = []
    for lo in iter_signvectors(n - 1):
        zeros = [k for k, x in enumerate(lo) if x == 0]
        for extra in itertools.combinations(zeros, m):
            for signs in itertools.product((-1, 1), repeat=m):
                hi = list(lo)
                for k, sg in zip(extra, signs):
                    hi[k] = sg
                out.append(Interval(lo, tuple(hi)))
    return out


def fvector_closed(n: int, m: int) -> int:
    if not 0 <= m <= n - 2:
        raise DimOutOfRange(f"face dimension {m} outside 0..{n - 2}")
    total = 0
    for k in range(1, n - m):
        multinom = factorial(n - 1) // (factorial(k) * factorial(m) * factorial(n - k - m - 1))
        total += multinom * 2 ** (k + m)
    return total


def fvector(n: int) -> list[int]:
    return [fvector_closed(n, m) for m in range(n - 1)]


# ---------------------------------------------------------------------------
# vertex graph


def taxicab(s: Sequence[int], t: Sequence[int]) -> int:
    if len(s) != len(t):
        raise LengthMismatch(f"sign vectors of length {len(s)} and {len(t)}")
    return sum(abs(x - y) for x, y in zip(s, t))


def mpp_adjacent(s: Sequence[int], t: Sequence[int]) -> bool:
    return taxicab(s, t) == 1


def mpp_graph(n: int) -> Graph:
    """Sign vectors joined at taxicab distance 1.

    Sign vector ``s`` is stored as the path mask of its coherent path; a
    distance-1 move is then a single bit toggle that stays in the family.
    """
    labels = list(iter_signvectors(n - 1))
    masks = [signvector_to_mask(s) for s in labels]
    indptr, indices = toggle_graph(masks, 2 * (n - 1))
    return Graph(labels, indptr, indices)


def graph_diameter(g: Graph) -> int | None:
    return diameter(g)


# ---------------------------------------------------------------------------
# cubical complex


def interval_cube(iv: Interval) -> frozenset[SignVector]:
    return frozenset(iv.members())


def unit_cubes(n: int) -> set[frozenset[SignVector]]:
    """Unit cubes with vertices in ``{-1,0,1}^(n-1)`` avoiding the origin.

    Each coordinate is either fixed in ``{-1,0,1}`` or ranges over ``{0,1}`` or
    ``{-1,0}``; cubes of dimension above ``n-2`` and cubes through the origin
    are discarded.
    """
    choices = [(-1,), (0,), (1,), (0, 1), (-1, 0)]
    out = set()
    for pattern in itertools.product(choices, repeat=n - 1):
        dim = sum(len(c) == 2 for c in pattern)
        if dim > n - 2:
            continue
        verts = frozenset(itertools.product(*pattern))
        if (0,) * (n - 1) in verts:
            continue
        out.add(verts)
    return out


# ---------------------------------------------------------------------------
# signohedron: the polar of cube + cross-polytope


def signohedron_vertex(s: Sequence[int]) -> QVector:
    scale = Fraction(1, len(support(s)) + 1)
    return tuple(scale * x for x in s)


def signohedron(n: int) -> tuple[list[tuple[SignVector, QVector]], list[FacetIneq]]:
    """Vertices (one per sign vector) and facets ``<w, x> <= 1``.

    ``w`` ranges over vectors with one entry ``+-2`` and the rest ``+-1``.  A
    facet is stored as ``-w . x >= -1`` with label ``(p, sign(w))``, where ``p``
    is the 1-based position of the ``+-2``; this matches the MPP facet labels.
    """
    d = n - 1
    verts = [(s, signohedron_vertex(s)) for s in iter_signvectors(d)]
    facets = []
    for p in range(1, d + 1):
        for eps in iter_signvectors(d):
            if not all(eps):
                continue
            w = tuple(Fraction(2 * e if k == p - 1 else e) for k, e in enumerate(eps))
            facets.append(FacetIneq(tuple(-x for x in w), Fraction(-1), (p, eps)))
    return verts, facets
