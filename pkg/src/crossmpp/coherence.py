"""Coherence of monotone paths and cellular strings.

Three independent deciders:

* :func:`is_coherent_fast` -- the antipode criterion: a string is coherent
  iff ``-e_n, e_n`` is the only antipodal pair among its vertices;
* :func:`build_witness` -- an explicit lifting functional for coherent
  strings, built cell by cell with endpoint slopes ``-1, -1/2, ...``;
* :func:`is_coherent_lp` -- exact LP feasibility of the lifting conditions.

A lifting functional ``phi`` makes ``pi = (ell, phi)`` send every cell onto a
lower edge of the projected polygon, and every vertex off a cell strictly
above that cell's line.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from .crosspoly import Orientation, vertex, vertices
from .errors import IncoherentInput
from .exactlin import Kind, LinConstraint, QVector, lp_feasible_strict, satisfies_all, vscale, vsub
from .pathspace import CellularString, MonotonePath, string_from_path, string_is_coherent


def _as_string(s: CellularString | MonotonePath) -> CellularString:
    return string_from_path(s) if isinstance(s, MonotonePath) else s


def is_coherent_fast(s: CellularString | MonotonePath) -> bool:
    return string_is_coherent(_as_string(s))


def lifting_constraints(
    cells: Sequence[Sequence[Hashable]],
    points: Mapping[Hashable, Sequence[Fraction]],
    ell: Mapping[Hashable, Fraction],
) -> list[LinConstraint] | None:
    """Homogeneous system over ``phi`` for a string on an arbitrary point set.

    For each cell with extremes ``b, c`` and each point ``w`` the row is
    ``(l_c - l_b) w - (l_c - l_w) b - (l_w - l_b) c``: zero on the cell's line,
    positive strictly above it.  Returns ``None`` when some strictness row
    vanishes identically, which makes the system infeasible outright.
    """
    rows: list[LinConstraint] = []
    for cell in cells:
        b = min(cell, key=lambda k: ell[k])
        c = max(cell, key=lambda k: ell[k])
        members = set(cell)
        pb, pc = points[b], points[c]
        for w, pw in points.items():
            if w == b or w == c:
                continue
            coeffs = vsub(
                vsub(vscale(ell[c] - ell[b], pw), vscale(ell[c] - ell[w], pb)),
                vscale(ell[w] - ell[b], pc),
            )
            if w in members:
                if any(coeffs):
                    rows.append(LinConstraint(coeffs, Kind.EQ))
            elif not any(coeffs):
                return None
            else:
                rows.append(LinConstraint(coeffs, Kind.STRICT_POS))
    return rows


def coherence_constraints(s: CellularString | MonotonePath, o: Orientation) -> list[LinConstraint] | None:
    s = _as_string(s)
    points = {v: vertex(v, o.n) for v in vertices(o.n)}
    ell = {v: o.value(v) for v in points}
    return lifting_constraints(s.cells, points, ell)


def is_coherent_lp(s: CellularString | MonotonePath, o: Orientation) -> QVector | None:
    """Witness functional from the exact LP, or ``None`` when incoherent."""
    rows = coherence_constraints(s, o)
    if rows is None:
        return None
    return lp_feasible_strict(rows, o.n)


def witness_holds(s: CellularString | MonotonePath, o: Orientation, phi: Sequence[Fraction]) -> bool:
    rows = coherence_constraints(s, o)
    return rows is not None and satisfies_all(rows, phi)


def constructive_witness(s: CellularString | MonotonePath, o: Orientation) -> QVector:
    """The lifting functional built directly from the string, without checking it.

    ``phi(e_n) = 0``; the endpoint of cell ``j < k`` sits on a line of slope
    ``-1/j`` from the previous endpoint; the last cell climbs back to
    ``(a_n, 0)``; interior cell vertices are interpolated onto their cell's
    segment; untouched coordinates are 0.
    """
    s = _as_string(s)
    if not string_is_coherent(s):
        raise IncoherentInput(f"string {s} contains an antipodal pair other than +-e_n")
    n = o.n
    height: dict[int, Fraction] = {-n: Fraction(0), n: Fraction(0)}
    k = len(s.cells)
    for j, cell in enumerate(s.cells, start=1):
        b, c = cell[0], cell[-1]
        if j < k:
            height[c] = height[b] - Fraction(1, j) * (o.value(c) - o.value(b))
        slope = (height[c] - height[b]) / (o.value(c) - o.value(b))
        for v in cell[1:-1]:
            height[v] = height[b] + slope * (o.value(v) - o.value(b))
    phi = [Fraction(0)] * n
    for v, h in height.items():
        if abs(v) != n:
            phi[abs(v) - 1] = h if v > 0 else -h
    return tuple(phi)


def build_witness(s: CellularString | MonotonePath, o: Orientation) -> QVector:
    """Constructive witness, re-checked against the LP system.

    Falls back to the LP's own witness if the construction ever fails the
    strict re-check.
    """
    phi = constructive_witness(s, o)
    if witness_holds(s, o, phi):
        return phi
    lp = is_coherent_lp(s, o)
    if lp is None:  # pragma: no cover - would contradict the antipode criterion
        raise AssertionError(f"antipode criterion and LP disagree on {s}")
    return lp


def verdicts(s: CellularString | MonotonePath, o: Orientation) -> dict:
    """All three deciders side by side (used by the CLI)."""
    fast = is_coherent_fast(s)
    lp = is_coherent_lp(s, o)
    witness = build_witness(s, o) if fast else None
    return {
        "fast": fast,
        "lp": lp is not None,
        "lp_witness": lp,
        "witness": witness,
        "witness_ok": witness is not None and witness_holds(s, o, witness),
    }
