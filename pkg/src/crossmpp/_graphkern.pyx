# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled graph kernels: toggle-graph construction and BFS.

Same contract as ``_graphkern_py``.
"""

from array import array

from cpython cimport array as carray
from libc.stdlib cimport free, malloc


def toggle_graph(masks, int nbits):
    cdef Py_ssize_t nv = len(masks), i, cnt = 0
    cdef long size = 1L << nbits
    cdef int b, j
    cdef carray.array cmasks = array("l", masks)
    cdef long[:] mv = cmasks
    cdef carray.array indptr = array("i", [0]) * (nv + 1)
    cdef carray.array indices = array("i", [0]) * (nv * nbits)
    cdef int[:] ip = indptr
    cdef int[:] out = indices
    cdef int *lookup = <int *> malloc(size * sizeof(int))
    if lookup == NULL:
        raise MemoryError()
    try:
        for i in range(size):
            lookup[i] = -1
        for i in range(nv):
            lookup[mv[i]] = <int> i
        for i in range(nv):
            for b in range(nbits):
                j = lookup[mv[i] ^ (1L << b)]
                if j >= 0:
                    out[cnt] = j
                    cnt += 1
            ip[i + 1] = <int> cnt
    finally:
        free(lookup)
    del out
    carray.resize(indices, cnt)
    return indptr, indices


cdef int _bfs_from(const int[:] indptr, const int[:] indices, int *dist, int *queue,
                   int nv, int nseeds) noexcept nogil:
    # queue[0:nseeds] holds the seeds, already at distance 0; returns the
    # largest distance reached, or -1 if some vertex stays unreached
    cdef int head = 0, tail = nseeds, v, w, k, far = 0
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                if dist[w] > far:
                    far = dist[w]
                queue[tail] = w
                tail += 1
    return far if tail == nv else -1


def bfs_distances(indptr, indices, sources):
    cdef carray.array cp = array("i", indptr)
    cdef carray.array ci = array("i", indices) if len(indices) else array("i", [0])
    cdef const int[:] ipv = cp
    cdef const int[:] idv = ci
    cdef int nv = len(cp) - 1, s, nseeds = 0
    cdef carray.array dist = array("i", [-1]) * nv
    if nv == 0:
        return dist
    cdef int[:] dv = dist
    cdef int *queue = <int *> malloc(nv * sizeof(int))
    if queue == NULL:
        raise MemoryError()
    try:
        for s in sources:
            if dv[s] < 0:
                dv[s] = 0
                queue[nseeds] = s
                nseeds += 1
        with nogil:
            _bfs_from(ipv, idv, &dv[0], queue, nv, nseeds)
    finally:
        free(queue)
    return dist


def eccentricities(indptr, indices):
    cdef carray.array cp = array("i", indptr)
    cdef carray.array ci = array("i", indices) if len(indices) else array("i", [0])
    cdef const int[:] ipv = cp
    cdef const int[:] idv = ci
    cdef int nv = len(cp) - 1, s, i
    cdef carray.array out = array("i", [0]) * nv
    if nv == 0:
        return out
    cdef int[:] ov = out
    cdef int *dist = <int *> malloc(nv * sizeof(int))
    cdef int *queue = <int *> malloc(nv * sizeof(int))
    if dist == NULL or queue == NULL:
        free(dist)
        free(queue)
        raise MemoryError()
    try:
        with nogil:
            for s in range(nv):
                for i in range(nv):
                    dist[i] = -1
                dist[s] = 0
                queue[0] = s
                ov[s] = _bfs_from(ipv, idv, dist, queue, nv, 1)
    finally:
        free(dist)
        free(queue)
    return out
