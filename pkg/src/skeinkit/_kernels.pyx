# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum kernel.  Same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, calloc, free


cdef inline int _find(int *parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def state_histogram(crossings, int n_labels):
    cdef int n = len(crossings)
    if n > 40:
        raise ValueError("state sum limited to 40 crossings")
    cdef int *cr = <int *> malloc(4 * n * sizeof(int)) if n else NULL
    cdef int *parent = <int *> malloc(max(n_labels, 1) * sizeof(int))
    cdef int width = n_labels + 1
    cdef long long *hist = <long long *> calloc((n + 1) * width, sizeof(long long))
    cdef int i, j, k, loops, n_a, r1, r2
    cdef unsigned long long mask, total
    if parent == NULL or hist == NULL or (n and cr == NULL):
        free(cr); free(parent); free(hist)
        raise MemoryError()
    try:
        for i in range(n):
            for k in range(4):
                j = crossings[i][k]
                if j < 0 or j >= n_labels:
                    raise ValueError(f"label {j} out of range")
                cr[4 * i + k] = j
        total = (<unsigned long long> 1) << n
        with nogil:
            mask = 0
            while mask < total:
                for j in range(n_labels):
                    parent[j] = j
                loops = n_labels
                n_a = 0
                for i in range(n):
                    if (mask >> i) & 1:
                        r1 = _find(parent, cr[4 * i]); r2 = _find(parent, cr[4 * i + 3])
                        if r1 != r2:
                            parent[r1] = r2; loops -= 1
                        r1 = _find(parent, cr[4 * i + 1]); r2 = _find(parent, cr[4 * i + 2])
                        if r1 != r2:
                            parent[r1] = r2; loops -= 1
                    else:
                        n_a += 1
                        r1 = _find(parent, cr[4 * i]); r2 = _find(parent, cr[4 * i + 1])
                        if r1 != r2:
                            parent[r1] = r2; loops -= 1
                        r1 = _find(parent, cr[4 * i + 2]); r2 = _find(parent, cr[4 * i + 3])
                        if r1 != r2:
                            parent[r1] = r2; loops -= 1
                hist[n_a * width + loops] += 1
                mask += 1
        return [[hist[i * width + j] for j in range(width)] for i in range(n + 1)]
    finally:
        free(cr); free(parent); free(hist)
