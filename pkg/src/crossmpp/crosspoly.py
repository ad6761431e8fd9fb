"""The standard cross-polytope and its generic orientations.

Vertices of the ``n``-dimensional cross-polytope are ``+-e_i``; we label them
by signed indices ``+-i``.  A subset of vertices is a face exactly when it
contains no antipodal pair, so faces are just sets of signed indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotAFace, NotGeneric
from .exactlin import QVector, q, qvec

SignedPerm = tuple  # tuple[int, ...]; canonical e_j maps to sign(s_j) * raw e_|s_j|


@dataclass(frozen=True)
class Orientation:
    """Linear functional with ``a[i-1]`` its value on ``e_i``.

    Canonical form is ``0 < a_1 < ... < a_n``; construct with
    :func:`normalize` from arbitrary generic values.
    """

    a: QVector

    def __post_init__(self):
        a = qvec(self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise NotGeneric("orientation needs at least one coordinate")
        if a[0] <= 0 or any(x >= y for x, y in zip(a, a[1:])):
            raise NotGeneric(f"orientation {list(map(str, a))} is not canonical (need 0 < a_1 < ... < a_n)")

    @property
    def n(self) -> int:
        return len(self.a)

    def value(self, s: int) -> Fraction:
        """Value on the vertex with signed index ``s`` (so ``value(-i) == -a_i``)."""
        v = self.a[abs(s) - 1]
        return v if s > 0 else -v

    def vertex_order(self) -> list[int]:
        """All signed indices sorted by increasing value."""
        return [-i for i in range(self.n, 0, -1)] + list(range(1, self.n + 1))


def canonical(n: int) -> Orientation:
    return Orientation(tuple(range(1, n + 1)))


def parse_orientation(text: str) -> list[Fraction]:
    return [q(tok.strip()) for tok in text.split(",") if tok.strip()]


def normalize(raw: Sequence) -> tuple[Orientation, SignedPerm]:
    """Reflect negative coordinates and sort by absolute value.

    Returns the canonical orientation and a signed permutation ``s`` such
    that canonical ``e_j`` corresponds to raw ``sign(s_j) * e_|s_j|``; the
    raw functional then takes the value ``a_j`` on that raw vertex.
    """
    vals = qvec(raw)
    for i, v in enumerate(vals):
        if v == 0:
            raise NotGeneric(f"coordinate {i + 1} has value 0", (i + 1, i + 1))
    seen: dict[Fraction, int] = {}
    for i, v in enumerate(vals):
        if abs(v) in seen:
            j = seen[abs(v)]
            raise NotGeneric(f"coordinates {j} and {i + 1} have equal absolute value {abs(v)}", (j, i + 1))
        seen[abs(v)] = i + 1
    order = sorted(range(len(vals)), key=lambda i: abs(vals[i]))
    perm = tuple((i + 1) if vals[i] > 0 else -(i + 1) for i in order)
    return Orientation(tuple(abs(vals[i]) for i in order)), perm


def canonical_to_raw(x: Sequence, perm: SignedPerm) -> QVector:
    """Map a point written in canonical coordinates back to raw coordinates."""
    out = [Fraction(0)] * len(perm)
    for j, s in enumerate(perm):
        out[abs(s) - 1] += x[j] if s > 0 else -x[j]
    return tuple(out)


def raw_to_canonical(y: Sequence, perm: SignedPerm) -> QVector:
    return tuple(y[abs(s) - 1] if s > 0 else -y[abs(s) - 1] for s in perm)


def vertex(s: int, n: int) -> QVector:
    v = [Fraction(0)] * n
    v[abs(s) - 1] = Fraction(1 if s > 0 else -1)
    return tuple(v)


def vertices(n: int) -> list[int]:
    return [s for i in range(1, n + 1) for s in (i, -i)]


def is_face(face: Iterable[int]) -> bool:
    s = set(face)
    return not any(-v in s for v in s)


def face_extremes(face: Iterable[int], o: Orientation) -> tuple[int, int]:
    s = set(face)
    if not s:
        raise NotAFace("empty face has no extremes")
    if not is_face(s):
        raise NotAFace(f"{sorted(s)} contains an antipodal pair")
    return min(s, key=o.value), max(s, key=o.value)
