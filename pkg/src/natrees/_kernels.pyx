# cython: language_level=3
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdlib cimport malloc, free


cdef bint _next_perm(int* a, int n) noexcept:
    cdef int i = n - 2, j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


cdef bint _valid(int* p, int* anc, int m) noexcept:
    cdef int j
    for j in range(m):
        if anc[j] >= 0 and p[anc[j]] <= p[j]:
            return False
    return True


cdef int* _to_c(seq, int m) except NULL:
    cdef int* out = <int*> malloc((m + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef int j
    for j in range(m):
        out[j] = seq[j]
    return out


cdef void _identity(int* p, int m) noexcept:
    cdef int j
    for j in range(m):
        p[j] = j + 1


cdef tuple _as_tuple(int* p, int m):
    return tuple([p[j] for j in range(m)])


def valid_labellings(anc):
    cdef int m = len(anc)
    cdef int* a = _to_c(anc, m)
    cdef int* p = _to_c(anc, m)
    out = []
    try:
        _identity(p, m)
        while True:
            if _valid(p, a, m):
                out.append(_as_tuple(p, m))
            if not _next_perm(p, m):
                break
    finally:
        free(a)
        free(p)
    return out


def count_valid(anc):
    cdef int m = len(anc)
    cdef int* a = _to_c(anc, m)
    cdef int* p = _to_c(anc, m)
    cdef long long count = 0
    try:
        _identity(p, m)
        while True:
            if _valid(p, a, m):
                count += 1
            if not _next_perm(p, m):
                break
    finally:
        free(a)
        free(p)
    return count


def brute_force_labellings(left_anc, right_anc):
    cdef int ml = len(left_anc), mr = len(right_anc)
    cdef int* la = _to_c(left_anc, ml)
    cdef int* ra = _to_c(right_anc, mr)
    cdef int* lp = _to_c(left_anc, ml)
    cdef int* rp = _to_c(right_anc, mr)
    cdef bint lv
    out = []
    try:
        _identity(lp, ml)
        while True:
            lv = _valid(lp, la, ml)
            _identity(rp, mr)
            while True:
                if lv and _valid(rp, ra, mr):
                    out.append((_as_tuple(lp, ml), _as_tuple(rp, mr)))
                if not _next_perm(rp, mr):
                    break
            if not _next_perm(lp, ml):
                break
    finally:
        free(la)
        free(ra)
        free(lp)
        free(rp)
    return out


def inversions(seq):
    cdef int n = len(seq)
    cdef int* a = _to_c(seq, n)
    cdef int i, j
    cdef long long count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] > a[j]:
                count += 1
    free(a)
    return count


def imaj(seq):
    cdef int n = len(seq)
    cdef int* pos = <int*> malloc((n + 2) * sizeof(int))
    if pos == NULL:
        raise MemoryError()
    cdef int i
    cdef long long total = 0
    for i in range(n):
        pos[<int> seq[i]] = i
    for i in range(1, n):
        if pos[i] > pos[i + 1]:
            total += i
    free(pos)
    return total
