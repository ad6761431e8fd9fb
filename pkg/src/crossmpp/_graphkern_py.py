"""Pure-Python graph kernels; same contract as the compiled ``_graphkern``.

Graphs are in CSR form: neighbours of ``v`` are
``indices[indptr[v]:indptr[v + 1]]``.
"""

from __future__ import annotations

from array import array
from collections import deque
from typing import Sequence


def toggle_graph(masks: Sequence[int], nbits: int) -> tuple[array, array]:
    """CSR graph on ``masks`` joining two masks that differ in exactly one bit."""
    index = {m: i for i, m in enumerate(masks)}
    indptr = array("i", [0])
    indices = array("i")
    for m in masks:
        for b in range(nbits):
            j = index.get(m ^ (1 << b))
            if j is not None:
                indices.append(j)
        indptr.append(len(indices))
    return indptr, indices


def bfs_distances(indptr: Sequence[int], indices: Sequence[int], sources: Sequence[int]) -> array:
    """Multi-source BFS; unreachable vertices get -1."""
    nv = len(indptr) - 1
    dist = array("i", [-1]) * nv
    queue = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def eccentricities(indptr: Sequence[int], indices: Sequence[int]) -> array:
    """Eccentricity of every vertex; -1 where some vertex is unreachable."""
    nv = len(indptr) - 1
    out = array("i", [0]) * nv
    for s in range(nv):
        d = bfs_distances(indptr, indices, [s])
        out[s] = -1 if min(d, default=0) < 0 else max(d, default=0)
    return out
