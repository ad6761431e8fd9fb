"""Graph kernels with a compiled backend and a pure-Python fallback.

The compiled extension is used when it was built; set
``CROSSMPP_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the one
in use.
"""

from __future__ import annotations

import os
from array import array
from types import ModuleType

from . import _graphkern_py


def _load() -> ModuleType:
    if os.environ.get("CROSSMPP_PURE_PYTHON", "") not in ("", "0"):
        return _graphkern_py
    try:
        from . import _graphkern
    except ImportError:
        return _graphkern_py
    return _graphkern


_impl = _load()
BACKEND = "compiled" if _impl is not _graphkern_py else "python"

toggle_graph = _impl.toggle_graph
bfs_distances = _impl.bfs_distances
eccentricities = _impl.eccentricities


def backends() -> dict[str, ModuleType]:
    """Every importable backend, for tests and benchmarks."""
    out = {"python": _graphkern_py}
    try:
        from . import _graphkern
    except ImportError:
        pass
    else:
        out["compiled"] = _graphkern
    return out


class Graph:
    """Labelled undirected graph in CSR form."""

    def __init__(self, labels: list, indptr, indices):
        self.labels = labels
        self.indptr = indptr
        self.indices = indices
        self.index = {lab: i for i, lab in enumerate(labels)}

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, label) -> list:
        i = self.index[label]
        return [self.labels[j] for j in self.indices[self.indptr[i] : self.indptr[i + 1]]]

    def adjacent(self, u, v) -> bool:
        return v in self.neighbors(u)

    def add_edge(self, u, v) -> "Graph":
        """New graph with one extra edge (CSR is rebuilt; only for tiny special cases)."""
        adj = {lab: self.neighbors(lab) for lab in self.labels}
        adj[u].append(v)
        adj[v].append(u)
        return from_adjacency(self.labels, adj)

    def eccentricities(self) -> list[int]:
        return list(eccentricities(self.indptr, self.indices))

    def distances_from(self, sources) -> list[int]:
        return list(bfs_distances(self.indptr, self.indices, [self.index[s] for s in sources]))


def from_adjacency(labels: list, adj: dict) -> Graph:
    index = {lab: i for i, lab in enumerate(labels)}
    indptr = array("i", [0])
    indices = array("i")
    for lab in labels:
        indices.extend(index[x] for x in adj[lab])
        indptr.append(len(indices))
    return Graph(labels, indptr, indices)


def diameter(g: Graph) -> int | None:
    """Graph diameter by BFS from every vertex; ``None`` when disconnected."""
    ecc = g.eccentricities()
    if not ecc:
        return 0
    return None if min(ecc) < 0 else max(ecc)
