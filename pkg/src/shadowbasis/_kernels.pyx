# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; mirrors ``_fallback`` exactly."""
from libc.stdlib cimport malloc, free


cdef int _lis(int* seq, int m, int* tops) noexcept nogil:
    cdef int length = 0, lo, hi, mid, i, x
    for i in range(m):
        x = seq[i]
        lo = 0
        hi = length
        while lo < hi:
            mid = (lo + hi) >> 1
            if tops[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        tops[lo] = x
        if lo == length:
            length += 1
    return length


def lis(seq):
    cdef int m = len(seq)
    cdef int* buf = <int*>malloc(2 * (m + 1) * sizeof(int))
    cdef int i, out
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            buf[i] = seq[i]
        out = _lis(buf, m, buf + m + 1)
    finally:
        free(buf)
    return out


def rsk(word):
    P = []
    Q = []
    cdef Py_ssize_t step, row, lo, hi, mid
    for step in range(len(word)):
        x = word[step]
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step + 1])
                break
            cur = P[row]
            lo = 0
            hi = len(cur)
            while lo < hi:
                mid = (lo + hi) >> 1
                if cur[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == len(cur):
                cur.append(x)
                Q[row].append(step + 1)
                break
            x, cur[lo] = cur[lo], x
            row += 1
    return P, Q


cdef bint _next_permutation(int* a, int n) noexcept nogil:
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


def stat_histogram(int n, int r, int first=0):
    cdef int size = r * n + 1
    cdef long long* counts = <long long*>malloc(size * sizeof(long long))
    cdef int* sigma = <int*>malloc((n + 1) * sizeof(int))
    cdef int* colors = <int*>malloc((n + 1) * sizeof(int))
    cdef int* zero = <int*>malloc((n + 1) * sizeof(int))
    cdef int* tops = <int*>malloc((n + 1) * sizeof(int))
    cdef int i, m, k, pos
    cdef bint more = True
    if counts == NULL or sigma == NULL or colors == NULL or zero == NULL or tops == NULL:
        free(counts); free(sigma); free(colors); free(zero); free(tops)
        raise MemoryError()
    try:
        with nogil:
            for i in range(size):
                counts[i] = 0
            for i in range(n):
                sigma[i] = i + 1
            while more:
                if first == 0 or sigma[0] == first:
                    for i in range(n):
                        colors[i] = 0
                    while True:
                        m = 0
                        k = 0
                        for i in range(n):
                            if colors[i] == 0:
                                zero[m] = sigma[i]
                                m += 1
                            else:
                                k += r - colors[i]
                        k += r * _lis(zero, m, tops)
                        counts[k] += 1
                        # advance colors as a base-r odometer, last position fastest
                        pos = n - 1
                        while pos >= 0:
                            colors[pos] += 1
                            if colors[pos] < r:
                                break
                            colors[pos] = 0
                            pos -= 1
                        if pos < 0:
                            break
                elif first != 0 and sigma[0] > first:
                    break
                more = _next_permutation(sigma, n)
        return [counts[i] for i in range(size)]
    finally:
        free(counts); free(sigma); free(colors); free(zero); free(tops)
