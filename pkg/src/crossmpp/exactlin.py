"""Exact rational linear algebra and feasibility LPs.

Everything here works on :class:`fractions.Fraction` scalars and on tuples of
them (``QVector``).  There is no floating point anywhere in this module.

The feasibility routines share one small revised-simplex core with an
explicit basis inverse and Bland's rule.  All the systems this package
solves have very few rows (ambient dimension + 1), so the explicit inverse is
cheap and pricing can stop at the first improving column.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, PointNotInCloud

QVector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def _load_scalar():
    # the simplex core runs on gmpy2's GMP rationals when available; results
    # are always handed back as Fractions
    if os.environ.get("CROSSMPP_PURE_PYTHON", "") not in ("", "0"):
        return Fraction
    try:
        from gmpy2 import mpq
    except ImportError:
        return Fraction
    return mpq


LP_SCALAR = _load_scalar()


def _to_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(int(x.numerator), int(x.denominator))


def q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact input; pass a string or Fraction")
    return Fraction(x)


def qvec(xs: Iterable) -> QVector:
    return tuple(q(x) for x in xs)


def format_q(x: Fraction) -> str:
    x = q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec_to_json(v: Sequence[Fraction]) -> list[str]:
    return [format_q(x) for x in v]


def vec_from_json(items: Sequence) -> QVector:
    return tuple(Fraction(str(s)) for s in items)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of length {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), ZERO)


def vadd(u, v) -> QVector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> QVector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v) -> QVector:
    return tuple(c * a for a in v)


def _check_rows(rows: Sequence[Sequence], width: int | None = None) -> int:
    lengths = {len(r) for r in rows}
    if width is not None:
        lengths.add(width)
    if len(lengths) > 1:
        raise DimensionMismatch(f"ragged rows: lengths {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def _row_reduce(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_linear(system: Sequence[tuple[Sequence, object]]) -> QVector | None:
    """Solve ``row . x = rhs`` for every ``(row, rhs)`` pair exactly.

    Returns ``None`` when the system is inconsistent.  Underdetermined systems
    get the particular solution with all free variables at zero.
    """
    if not system:
        return ()
    width = _check_rows([row for row, _ in system])
    rows = [[q(x) for x in row] + [q(rhs)] for row, rhs in system]
    rows, pivots = _row_reduce(rows, width + 1)
    if width in pivots:
        return None
    x = [ZERO] * width
    for i, col in enumerate(pivots):
        x[col] = rows[i][width]
    return tuple(x)


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    width = _check_rows(rows)
    _, pivots = _row_reduce([[q(x) for x in r] for r in rows], width)
    return len(pivots)


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull; -1 for an empty set."""
    if not points:
        return -1
    base = points[0]
    return rank([vsub(p, base) for p in points[1:]])


def nullspace(rows: Sequence[Sequence], width: int) -> list[QVector]:
    """Basis of ``{x : row . x = 0 for every row}``."""
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(width)) for j in range(width)]
    _check_rows(rows, width)
    red, pivots = _row_reduce([[q(x) for x in r] for r in rows], width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * width
        v[f] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][f]
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# simplex core


def _simplex(columns: list[tuple], b: list[Fraction], cost: list[Fraction]):
    """Maximise ``cost . x`` subject to ``sum_j x_j columns[j] = b``, ``x >= 0``.

    Two-phase revised simplex with Bland's rule.  Returns
    ``(status, x, y)`` where status is ``"optimal"``, ``"unbounded"`` or
    ``"infeasible"``, ``x`` the primal solution and ``y`` the simplex
    multipliers (a dual solution) at optimality.
    """
    Q = LP_SCALAR
    ZERO, ONE = Q(0), Q(1)
    m = len(b)
    ncols = len(columns)
    flip = [bi < 0 for bi in b]
    cols = [tuple(Q(-a if flip[i] else a) for i, a in enumerate(col)) for col in columns]
    rhs = [Q(-bi if flip[i] else bi) for i, bi in enumerate(b)]
    cost = [Q(c) for c in cost]
    # artificials occupy the highest column indices
    for i in range(m):
        cols.append(tuple(ONE if k == i else ZERO for k in range(m)))
    basis = list(range(ncols, ncols + m))
    binv = [[ONE if i == j else ZERO for j in range(m)] for i in range(m)]
    xb = list(rhs)

    def run(c: list[Fraction], allowed: int) -> str:
        while True:
            cb = [c[j] for j in basis]
            y = [sum((cb[i] * binv[i][k] for i in range(m)), ZERO) for k in range(m)]
            entering = None
            in_basis = set(basis)
            for j in range(allowed):
                if j in in_basis:
                    continue
                col = cols[j]
                red = c[j] - sum((y[k] * col[k] for k in range(m) if col[k]), ZERO)
                if red > 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            col = cols[entering]
            u = [sum((binv[i][k] * col[k] for k in range(m) if col[k]), ZERO) for i in range(m)]
            leave = None
            best = None
            for i in range(m):
                if u[i] > 0:
                    ratio = xb[i] / u[i]
                    if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                return "unbounded"
            _pivot(leave, entering, u)

    def _pivot(r: int, j: int, u: list[Fraction]) -> None:
        inv = 1 / u[r]
        binv[r] = [x * inv for x in binv[r]]
        xb[r] = xb[r] * inv
        for i in range(m):
            if i != r and u[i] != 0:
                f = u[i]
                binv[i] = [a - f * bb for a, bb in zip(binv[i], binv[r])]
                xb[i] = xb[i] - f * xb[r]
        basis[r] = j

    phase1 = [ZERO] * ncols + [-ONE] * m
    run(phase1, ncols + m)
    if any(basis[i] >= ncols and xb[i] != 0 for i in range(m)):
        return "infeasible", None, None
    # drive zero-level artificials out where possible; rows where that fails are redundant
    for r in range(m):
        if basis[r] < ncols:
            continue
        for j in range(ncols):
            if j in basis:
                continue
            col = cols[j]
            ur = sum((binv[r][k] * col[k] for k in range(m) if col[k]), ZERO)
            if ur != 0:
                u = [sum((binv[i][k] * col[k] for k in range(m) if col[k]), ZERO) for i in range(m)]
                _pivot(r, j, u)
                break

    full_cost = list(cost) + [ZERO] * m
    status = run(full_cost, ncols)
    if status == "unbounded":
        return status, None, None
    x = [ZERO] * ncols
    for i, j in enumerate(basis):
        if j < ncols:
            x[j] = xb[i]
    cb = [full_cost[j] for j in basis]
    y = [sum((cb[i] * binv[i][k] for i in range(m)), ZERO) for k in range(m)]
    y = [-v if flip[k] else v for k, v in enumerate(y)]
    return "optimal", [_to_fraction(v) for v in x], [_to_fraction(v) for v in y]


# ---------------------------------------------------------------------------
# strict homogeneous feasibility


class Kind(enum.Enum):
    STRICT_POS = "STRICT_POS"
    EQ = "EQ"


@dataclass(frozen=True)
class LinConstraint:
    """Homogeneous constraint ``coeffs . phi > 0`` (STRICT_POS) or ``= 0`` (EQ)."""

    coeffs: QVector
    kind: Kind = Kind.STRICT_POS

    def __post_init__(self):
        object.__setattr__(self, "coeffs", qvec(self.coeffs))
        if self.kind is Kind.STRICT_POS and not any(self.coeffs):
            raise ValueError("STRICT_POS constraint with all-zero coefficients")

    def holds(self, phi: Sequence[Fraction]) -> bool:
        v = dot(self.coeffs, phi)
        return v > 0 if self.kind is Kind.STRICT_POS else v == 0


def satisfies_all(constraints: Iterable[LinConstraint], phi: Sequence[Fraction]) -> bool:
    return all(c.holds(phi) for c in constraints)


def lp_feasible_strict(constraints: Sequence[LinConstraint], d: int | None = None) -> QVector | None:
    """Find ``phi`` with ``c.phi >= 1`` on STRICT_POS rows and ``c.phi = 0`` on EQ rows.

    Because the system is homogeneous this is equivalent to the strict
    version.  Returns ``None`` when infeasible.

    Solved through the dual: maximise ``sum y`` over ``y >= 0, z`` with
    ``B^T y + E^T z = 0`` and ``sum y <= 1``.  The optimum is 0 exactly when
    the primal is feasible, and the simplex multipliers of the first ``d``
    rows are then a primal witness.
    """
    if d is None:
        if not constraints:
            raise DimensionMismatch("cannot infer dimension of an empty system")
        d = len(constraints[0].coeffs)
    _check_rows([c.coeffs for c in constraints], d)
    strict = [c.coeffs for c in constraints if c.kind is Kind.STRICT_POS]
    eqs = [c.coeffs for c in constraints if c.kind is Kind.EQ]
    if not strict:
        return (ZERO,) * d

    columns: list[tuple] = []
    cost: list[Fraction] = []
    for row in strict:
        columns.append(tuple(row) + (ONE,))
        cost.append(ONE)
    for row in eqs:
        columns.append(tuple(row) + (ZERO,))
        columns.append(tuple(-x for x in row) + (ZERO,))
        cost.extend((ZERO, ZERO))
    columns.append((ZERO,) * d + (ONE,))
    cost.append(ZERO)
    b = [ZERO] * d + [ONE]

    status, x, y = _simplex(columns, b, cost)
    assert status == "optimal", status  # y = 0 is feasible and the objective is bounded by 1
    value = sum((cost[j] * x[j] for j in range(len(x))), ZERO)
    if value != 0:
        return None
    phi = tuple(y[:d])
    if not satisfies_all(constraints, phi):  # pragma: no cover - would be a simplex bug
        raise AssertionError("dual witness failed re-substitution")
    return phi


# ---------------------------------------------------------------------------
# convex position


def in_convex_hull(p: Sequence, points: Sequence[Sequence]) -> bool:
    """Exact test ``p in conv(points)`` by phase-1 feasibility of the convex combination."""
    if not points:
        return False
    _check_rows(list(points) + [p])
    columns = [tuple(q(x) for x in pt) + (ONE,) for pt in points]
    b = [q(x) for x in p] + [ONE]
    status, _, _ = _simplex(columns, b, [ZERO] * len(columns))
    return status != "infeasible"


def is_vertex(p: Sequence, cloud: Iterable[Sequence]) -> bool:
    """True iff ``p`` is not in the convex hull of the other points of ``cloud``."""
    p = qvec(p)
    pts = list(dict.fromkeys(qvec(c) for c in cloud))
    if p not in pts:
        raise PointNotInCloud(f"point {vec_to_json(p)} is not in the cloud")
    _check_rows(pts)
    others = [c for c in pts if c != p]
    return not in_convex_hull(p, others)


def min_over(functional: Sequence, points: Iterable[Sequence]) -> Fraction:
    return min(dot(functional, pt) for pt in points)
