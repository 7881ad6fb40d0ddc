# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint8_t
from libc.stdlib cimport malloc, calloc, free

cnp.import_array()

BACKEND = "cython"


cdef inline const int64_t[::1] _view(letters):
    return np.ascontiguousarray(letters, dtype=np.int64)


cdef inline const int32_t[::1] _view32(values):
    return np.ascontiguousarray(values, dtype=np.int32)


cdef inline void _fits32(Py_ssize_t n) except *:
    if n > 2**31 - 3:
        raise ValueError("words longer than 2^31 - 3 letters are not supported")


def arch_ends(letters, Py_ssize_t need, Py_ssize_t cap):
    cdef const int64_t[::1] w = _view(letters)
    cdef Py_ssize_t n = w.shape[0], pos, h, c
    cdef int64_t a
    out = []
    if need <= 0:
        return out
    cdef char *seen = <char *> calloc(cap, 1)
    if seen == NULL:
        raise MemoryError()
    h = need
    try:
        for pos in range(n):
            a = w[pos]
            if not seen[a]:
                seen[a] = 1
                h -= 1
                if h == 0:
                    out.append(pos + 1)
                    h = need
                    for c in range(cap):
                        seen[c] = 0
    finally:
        free(seen)
    return out


def suffix_tables(letters, Py_ssize_t need, Py_ssize_t cap):
    cdef const int64_t[::1] x = _view(letters)
    cdef Py_ssize_t n = x.shape[0]
    if n == 0 or need <= 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    u_arr = np.empty(n + 2, dtype=np.int64)
    t_arr = np.zeros(n + 2, dtype=np.int64)
    m_arr = np.zeros(n + 2, dtype=np.int64)
    cdef int64_t[::1] u = u_arr, t = t_arr, m = m_arr
    cdef int64_t *first = <int64_t *> calloc(cap, sizeof(int64_t))
    if first == NULL:
        raise MemoryError()
    cdef Py_ssize_t h = need, j = n, i, start, last_universal = 0
    cdef int64_t a, top = 0, nxt
    try:
        for i in range(n + 2):
            u[i] = n + 1
        m[n + 1] = n
        while j >= 1 and h > 0:
            a = x[j - 1]
            if first[a] == 0:
                h -= 1
            first[a] = j
            j -= 1
        if h == 0:
            start = j + 1
            for i in range(cap):
                if first[i] > top:
                    top = first[i]
            u[start] = top
            for i in range(start - 1, 0, -1):
                a = x[i - 1]
                if first[a] == top:
                    first[a] = i
                    top -= 1
                    while first[x[top - 1]] != top:
                        top -= 1
                else:
                    first[a] = i
                u[i] = top
            last_universal = start
        for i in range(n, 0, -1):
            if i > last_universal:
                t[i] = 0
                m[i] = i - 1
            else:
                nxt = u[i] + 1
                t[i] = 1 + t[nxt]
                m[i] = m[nxt]
    finally:
        free(first)
    return u_arr[1:n + 1], t_arr[1:n + 1], m_arr[1:n + 1]


def x_coordinates(letters, Py_ssize_t cap):
    cdef const int64_t[::1] w = _view(letters)
    cdef Py_ssize_t n = w.shape[0], i, top
    _fits32(n)
    x_arr = np.zeros(n + 1, dtype=np.int32)
    cdef int32_t[::1] x = x_arr
    cdef int64_t *last = <int64_t *> calloc(cap, sizeof(int64_t))
    cdef int32_t *stack = <int32_t *> malloc((n + 2) * sizeof(int32_t))
    cdef int64_t a, lp
    if last == NULL or stack == NULL:
        free(last); free(stack)
        raise MemoryError()
    try:
        stack[0] = 0
        top = 0
        for i in range(1, n + 1):
            a = w[i - 1]
            lp = last[a]
            last[a] = i
            if lp == 0:
                x[i] = 1
                top = 0
            else:
                while stack[top - 1] >= lp:
                    top -= 1
                x[i] = x[stack[top]] + 1
            top += 1
            stack[top] = i
    finally:
        free(last)
        free(stack)
    return x_arr[1:]


cdef inline Py_ssize_t _root(int32_t *parent, Py_ssize_t j) nogil:
    cdef Py_ssize_t r = j, nxt
    while parent[r] != r:
        r = parent[r]
    while parent[j] != r:
        nxt = parent[j]
        parent[j] = r
        j = nxt
    return r


def y_coordinates(letters, Py_ssize_t cap, Py_ssize_t k, xs):
    cdef const int64_t[::1] w = _view(letters)
    cdef const int32_t[::1] x = _view32(xs)
    cdef Py_ssize_t n = w.shape[0], i, p, owner, top, ra, rb
    cdef int64_t a, j, cand, bound = k + 1
    _fits32(n)
    y_arr = np.zeros(n + 2, dtype=np.int32)
    cdef int32_t[::1] y = y_arr
    cdef int64_t *nnext = <int64_t *> calloc(cap, sizeof(int64_t))
    # 32-bit scratch keeps the working set cache-resident for longer
    cdef int32_t *stack = <int32_t *> malloc((n + 2) * sizeof(int32_t))
    # interval union-find: parent, rank, and bounds kept at the root
    cdef int32_t *parent = <int32_t *> malloc((n + 2) * sizeof(int32_t))
    cdef uint8_t *rank = <uint8_t *> calloc(n + 2, sizeof(uint8_t))
    cdef int32_t *lo = <int32_t *> malloc((n + 2) * sizeof(int32_t))
    cdef int32_t *hi = <int32_t *> malloc((n + 2) * sizeof(int32_t))
    if nnext == NULL or stack == NULL or parent == NULL or rank == NULL or lo == NULL or hi == NULL:
        free(nnext); free(stack); free(parent); free(rank); free(lo); free(hi)
        raise MemoryError()
    try:
        for i in range(n + 2):
            parent[i] = i
            lo[i] = i
            hi[i] = i
        stack[0] = n + 1
        top = 0
        for i in range(n, 0, -1):
            a = w[i - 1]
            j = nnext[a]
            if j == 0:
                owner = n + 1
            else:
                owner = lo[_root(parent, j)]
            cand = y[owner] + 1
            if x[i - 1] + cand <= bound:
                y[i] = cand
                nnext[a] = i
                p = i + 1
                while p < owner and p <= n:
                    ra = _root(parent, i)
                    rb = _root(parent, p)
                    if rank[ra] < rank[rb]:
                        ra, rb = rb, ra
                    parent[rb] = ra
                    if rank[ra] == rank[rb]:
                        rank[ra] += 1
                    lo[ra] = i
                    hi[ra] = hi[rb] if hi[rb] > hi[ra] else hi[ra]
                    p = hi[ra] + 1
                while stack[top] != owner:
                    top -= 1
                top += 1
                stack[top] = i
            else:
                y[i] = n + 1
    finally:
        free(nnext); free(stack); free(parent); free(rank); free(lo); free(hi)
    return y_arr[1:n + 1]


def assemble_normal_form(letters, Py_ssize_t k, xs, ys):
    cdef const int64_t[::1] w = _view(letters)
    cdef const int32_t[::1] x = _view32(xs)
    cdef const int32_t[::1] y = _view32(ys)
    cdef Py_ssize_t n = w.shape[0], i, r, m = 0, blocks = 0, nb = 0, c, cap = 1
    cdef int64_t full = k + 1, px = -1, py = -1
    _fits32(n)
    out_arr = np.empty(n, dtype=np.int64)
    block_arr = np.zeros(n, dtype=np.int32)
    cdef int64_t[::1] out = out_arr
    cdef int32_t[::1] block = block_arr
    for i in range(n):
        if y[i] == n + 1:
            continue
        out[m] = w[i]
        if w[i] + 1 > cap:
            cap = w[i] + 1
        if x[i] + y[i] == full:
            if x[i] != px or y[i] != py:
                blocks += 1
            block[m] = blocks
            px = x[i]
            py = y[i]
            nb += 1
        else:
            px = -1
            py = -1
        m += 1
    if blocks == 0:
        return out_arr[:m]
    # LSD radix sort of (block, letter, slot): slots are already in order,
    # then a stable pass on letter, then a stable pass on block
    slots_arr = np.empty(nb, dtype=np.int32)
    tmp_arr = np.empty(nb, dtype=np.int32)
    cdef int32_t[::1] slots = slots_arr, tmp = tmp_arr
    cdef Py_ssize_t size = cap if cap > blocks + 1 else blocks + 1
    counts_arr = np.zeros(size + 1, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    c = 0
    for r in range(m):
        if block[r]:
            slots[c] = r
            c += 1
    for r in range(nb):
        counts[out[slots[r]] + 1] += 1
    for c in range(size):
        counts[c + 1] += counts[c]
    for r in range(nb):
        i = out[slots[r]]
        tmp[counts[i]] = slots[r]
        counts[i] += 1
    counts[:] = 0
    for r in range(nb):
        counts[block[tmp[r]] + 1] += 1
    for c in range(size):
        counts[c + 1] += counts[c]
    sorted_arr = np.empty(nb, dtype=np.int32)
    cdef int32_t[::1] srt = sorted_arr
    for r in range(nb):
        i = block[tmp[r]]
        srt[counts[i]] = tmp[r]
        counts[i] += 1
    letters_sorted = np.empty(nb, dtype=np.int64)
    cdef int64_t[::1] ls = letters_sorted
    for r in range(nb):
        ls[r] = out[srt[r]]
    for r in range(nb):
        out[slots[r]] = ls[r]
    return out_arr[:m]


def normal_form(letters, Py_ssize_t cap, Py_ssize_t k):
    x = x_coordinates(letters, cap)
    y = y_coordinates(letters, cap, k, x)
    return assemble_normal_form(letters, k, x, y)
