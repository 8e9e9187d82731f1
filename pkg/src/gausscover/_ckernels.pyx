# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``."""
from libc.stdlib cimport malloc, free


cdef long* _to_c(list xs) except NULL:
    cdef Py_ssize_t n = len(xs), i
    cdef long* buf = <long*>malloc((n + 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = xs[i]
    return buf


def chord_indices(list esigns, list tails, list heads):
    cdef Py_ssize_t n = len(esigns), c = len(tails), i
    cdef long* prefix = <long*>malloc((n + 1) * sizeof(long))
    cdef long acc = 0
    if prefix == NULL:
        raise MemoryError()
    prefix[0] = 0
    try:
        for i in range(n):
            acc += <long>esigns[i]
            prefix[i + 1] = acc
        return [prefix[<long>heads[i]] - prefix[<long>tails[i] + 1] for i in range(c)]
    finally:
        free(prefix)


def r1_positions(list partner, bint circular):
    cdef Py_ssize_t n = len(partner), p
    cdef long* part = _to_c(partner)
    cdef list out = []
    try:
        for p in range(n - 1):
            if part[p] == p + 1:
                out.append(p)
        if circular and n >= 2 and part[n - 1] == 0:
            out.append(n - 1)
        return out
    finally:
        free(part)


def r2_blocks(list partner, list is_tail, list csign, bint circular):
    cdef Py_ssize_t n = len(partner), p, q, last
    cdef long pp, pq, other
    cdef long* part = _to_c(partner)
    cdef long* tl = _to_c(is_tail)
    cdef long* sg = _to_c(csign)
    cdef list out = []
    last = n if circular else n - 1
    try:
        for p in range(last):
            q = p + 1 if p + 1 < n else 0
            if part[p] == q or tl[p] != tl[q] or sg[p] != -sg[q]:
                continue
            pp = part[p]
            pq = part[q]
            if pq == pp + 1 or (circular and pp == n - 1 and pq == 0):
                other = pp
            elif pp == pq + 1 or (circular and pq == n - 1 and pp == 0):
                other = pq
            else:
                continue
            if p < other:
                out.append((p, other))
        return out
    finally:
        free(part)
        free(tl)
        free(sg)
