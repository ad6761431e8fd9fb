"""The flip graph on all monotone paths of the cross-polytope.

For ``n >= 3`` every 2-face is a triangle, so a flip adds or removes one
interior vertex.  For ``n = 2`` the only 2-face is the square itself and its
flip exchanges the two paths ``[-1]`` and ``[1]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphkern import Graph, diameter, toggle_graph
from .pathspace import MonotonePath, enumerate_paths, path_is_coherent


def flip_adjacent(p: MonotonePath, q: MonotonePath) -> bool:
    if p.n != q.n or p == q:
        return False
    if p.n == 2:
        return True
    return len(set(p.interior) ^ set(q.interior)) == 1


def flip_graph(n: int) -> Graph:
    paths = enumerate_paths(n)
    indptr, indices = toggle_graph([p.mask for p in paths], 2 * (n - 1))
    g = Graph(paths, indptr, indices)
    if n == 2:
        g = g.add_edge(paths[0], paths[1])
    return g


def flip_diameter(n: int) -> int | None:
    return diameter(flip_graph(n))


def extremal_path(n: int) -> MonotonePath:
    """``(-e_{n-1}, ..., -e_1, e_2, ..., e_{n-1})``: farthest from every coherent path."""
    return MonotonePath(n, tuple(range(-(n - 1), 0)) + tuple(range(2, n)))


@dataclass
class CoherenceDistance:
    n: int
    distance: dict  # MonotonePath -> int
    maximum: int
    attained_by: list  # paths at maximal distance


def dist_to_coherent(n: int, g: Graph | None = None) -> CoherenceDistance:
    """Flip distance from every path to its nearest coherent path (multi-source BFS)."""
    g = g or flip_graph(n)
    sources = [p for p in g.labels if path_is_coherent(p)]
    dist = g.distances_from(sources)
    table = dict(zip(g.labels, dist))
    top = max(dist)
    return CoherenceDistance(n, table, top, [p for p, d in table.items() if d == top])


def max_dist_to_coherent(n: int) -> int:
    return dist_to_coherent(n).maximum
