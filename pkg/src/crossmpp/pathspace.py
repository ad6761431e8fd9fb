"""Monotone paths and cellular strings on the cross-polytope.

Everything here assumes a canonical orientation, under which the vertex order
is ``-n < -(n-1) < ... < -1 < 1 < ... < n`` regardless of the actual values.
A monotone path is stored by its interior only: the endpoints ``-n`` and ``n``
are implicit.

Paths are also encoded as bit masks over ``2(n-1)`` bits, with bit
``2(k-1)`` for ``+k`` and bit ``2(k-1)+1`` for ``-k``.  For coherent paths
the mask is the sign vector, and a single-bit toggle is a flip.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidPath, InvalidString, NotCoherentEncoding

SignVector = tuple  # tuple[int, ...] with entries in {-1, 0, 1}

# occupancy states of one coordinate pair, in enumeration order
_STATES = ("-", "0", "+", "±")


def _order_key(s: int) -> tuple[int, int]:
    return (0, -abs(s)) if s < 0 else (1, s)


def sort_signed(items) -> tuple[int, ...]:
    return tuple(sorted(items, key=_order_key))


@dataclass(frozen=True)
class MonotonePath:
    n: int
    interior: tuple[int, ...]

    def __post_init__(self):
        interior = tuple(int(s) for s in self.interior)
        object.__setattr__(self, "interior", interior)
        problem = _path_problem(self.n, interior)
        if problem:
            raise InvalidPath(f"{list(interior)} on n={self.n}: {problem}")

    @property
    def vertices(self) -> tuple[int, ...]:
        return (-self.n,) + self.interior + (self.n,)

    @property
    def mask(self) -> int:
        return interior_to_mask(self.interior)

    def __str__(self) -> str:
        return "[" + ",".join(str(s) for s in self.interior) + "]"


def _path_problem(n: int, interior: Sequence[int]) -> str | None:
    if n < 2:
        return "n must be at least 2"
    if not interior:
        return "empty interior (-e_n and e_n are antipodal)"
    for s in interior:
        if s == 0 or abs(s) > n - 1:
            return f"signed index {s} out of range"
    if len(set(interior)) != len(interior):
        return "repeated vertex"
    if tuple(interior) != sort_signed(interior):
        return "not increasing in the orientation"
    for x, y in zip(interior, interior[1:]):
        if x == -y:
            return f"consecutive antipodes {x},{y}"
    return None


def is_valid_interior(n: int, interior: Sequence[int]) -> bool:
    return _path_problem(n, interior) is None


def interior_to_mask(interior: Sequence[int]) -> int:
    m = 0
    for s in interior:
        m |= 1 << (2 * (abs(s) - 1) + (s < 0))
    return m


def mask_to_interior(mask: int, n: int) -> tuple[int, ...]:
    items = []
    for k in range(1, n):
        if mask >> (2 * (k - 1)) & 1:
            items.append(k)
        if mask >> (2 * (k - 1) + 1) & 1:
            items.append(-k)
    return sort_signed(items)


def _word_interior(word: Sequence[str]) -> tuple[int, ...]:
    items = []
    for k, st in enumerate(word, start=1):
        if st in ("-", "±"):
            items.append(-k)
        if st in ("+", "±"):
            items.append(k)
    return sort_signed(items)


def _word_valid(word: Sequence[str]) -> bool:
    if all(st == "0" for st in word):
        return False
    # both +-k chosen needs some smaller coordinate in between
    for k, st in enumerate(word):
        if st == "±" and all(w == "0" for w in word[:k]):
            return False
    return True


def iter_paths(n: int) -> Iterator[MonotonePath]:
    """Yield every monotone path, ordered lexicographically by occupancy word.

    The word reads coordinates ``1..n-1`` with states ordered
    ``- < 0 < + < ±``; on coherent paths this is the sign-vector order.
    """
    if n < 2:
        raise InvalidPath("n must be at least 2")
    for word in itertools.product(_STATES, repeat=n - 1):
        if _word_valid(word):
            yield MonotonePath(n, _word_interior(word))


def enumerate_paths(n: int) -> list[MonotonePath]:
    return list(iter_paths(n))


def count_paths_closed(n: int) -> int:
    return (2 ** (2 * n - 1) - 2) // 3


def count_coherent_closed(n: int) -> int:
    return 3 ** (n - 1) - 1


def path_is_coherent(p: MonotonePath) -> bool:
    s = set(p.interior)
    return not any(-v in s for v in s)


# ---------------------------------------------------------------------------
# sign vectors


def format_sign(s: Sequence[int]) -> str:
    return "".join("+" if x > 0 else "-" if x < 0 else "0" for x in s)


def parse_sign(text: str) -> SignVector:
    table = {"+": 1, "-": -1, "−": -1, "0": 0}
    try:
        return tuple(table[ch] for ch in text.strip())
    except KeyError as exc:
        raise ValueError(f"bad sign character {exc.args[0]!r} in {text!r}") from None


def iter_signvectors(length: int) -> Iterator[SignVector]:
    """Nonzero vectors in ``{-1,0,1}^length`` in lexicographic order ``- < 0 < +``."""
    for s in itertools.product((-1, 0, 1), repeat=length):
        if any(s):
            yield s


def path_to_signvector(p: MonotonePath) -> SignVector:
    out = [0] * (p.n - 1)
    for v in p.interior:
        k = abs(v) - 1
        if out[k] != 0:
            raise NotCoherentEncoding(f"path {p} contains both e_{k + 1} and -e_{k + 1}")
        out[k] = 1 if v > 0 else -1
    return tuple(out)


def signvector_to_path(s: Sequence[int]) -> MonotonePath:
    s = tuple(s)
    if not any(s):
        raise InvalidPath("the zero sign vector does not encode a path")
    n = len(s) + 1
    return MonotonePath(n, sort_signed((k if x > 0 else -k) for k, x in enumerate(s, start=1) if x))


def signvector_to_mask(s: Sequence[int]) -> int:
    return interior_to_mask([(k if x > 0 else -k) for k, x in enumerate(s, start=1) if x])


def mask_to_signvector(mask: int, n: int) -> SignVector:
    out = []
    for k in range(n - 1):
        plus, minus = mask >> (2 * k) & 1, mask >> (2 * k + 1) & 1
        if plus and minus:
            raise NotCoherentEncoding(f"mask {mask:b} has both signs on coordinate {k + 1}")
        out.append(1 if plus else -1 if minus else 0)
    return tuple(out)


# ---------------------------------------------------------------------------
# cellular strings


@dataclass(frozen=True)
class CellularString:
    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(sort_signed(c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        problem = _string_problem(self.n, cells)
        if problem:
            raise InvalidString(f"{[list(c) for c in cells]} on n={self.n}: {problem}")

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for c in self.cells for v in c)

    @property
    def endpoints(self) -> tuple[int, ...]:
        return (self.cells[0][0],) + tuple(c[-1] for c in self.cells)

    def extremes_path(self) -> MonotonePath:
        return MonotonePath(self.n, self.endpoints[1:-1])

    def __str__(self) -> str:
        return "[" + ",".join("{" + ",".join(map(str, c)) + "}" for c in self.cells) + "]"


def _string_problem(n: int, cells) -> str | None:
    if not cells:
        return "no cells"
    for c in cells:
        if len(c) < 2:
            return f"cell {list(c)} has fewer than 2 vertices"
        if len(set(c)) != len(c):
            return f"cell {list(c)} repeats a vertex"
        if any(s == 0 or abs(s) > n for s in c):
            return f"cell {list(c)} has an out-of-range index"
        if any(-v in c for v in c):
            return f"cell {list(c)} contains an antipodal pair"
    if cells[0][0] != -n:
        return "first cell does not start at -e_n"
    if cells[-1][-1] != n:
        return "last cell does not end at e_n"
    for x, y in zip(cells, cells[1:]):
        if x[-1] != y[0]:
            return f"cells {list(x)} and {list(y)} do not chain"
    return None


def string_from_path(p: MonotonePath) -> CellularString:
    v = p.vertices
    return CellularString(p.n, tuple((x, y) for x, y in zip(v, v[1:])))


def _between(b: int, c: int, order: list[int]) -> list[int]:
    i, j = order.index(b), order.index(c)
    return order[i + 1 : j]


def iter_strings(n: int) -> Iterator[CellularString]:
    """Depth-first enumeration of all cellular strings, from ``-e_n`` to ``e_n``."""
    order = [-i for i in range(n, 0, -1)] + list(range(1, n + 1))
    pos = {s: i for i, s in enumerate(order)}
    cells_from: dict[int, list[tuple[int, ...]]] = {}

    def cells_starting_at(b: int) -> list[tuple[int, ...]]:
        if b in cells_from:
            return cells_from[b]
        out = []
        for c in order[pos[b] + 1 :]:
            if c == -b:
                continue
            mid = [v for v in _between(b, c, order) if v not in (-b, -c)]
            for r in range(len(mid) + 1):
                for extra in itertools.combinations(mid, r):
                    if any(-v in extra for v in extra):
                        continue
                    out.append(sort_signed((b, c) + extra))
        cells_from[b] = out
        return out

    def walk(b: int, prefix: tuple) -> Iterator[tuple]:
        for cell in cells_starting_at(b):
            chain = prefix + (cell,)
            if cell[-1] == n:
                yield chain
            else:
                yield from walk(cell[-1], chain)

    for chain in walk(-n, ()):
        yield CellularString(n, chain)


def enumerate_strings(n: int) -> list[CellularString]:
    return list(iter_strings(n))


def string_is_coherent(s: CellularString) -> bool:
    vs = s.vertex_set
    return not any(-v in vs for v in vs if abs(v) != s.n)
