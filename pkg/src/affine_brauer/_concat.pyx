# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled strand tracer; same contract as ``_concat_py.concat_kernel``."""

from libc.stdlib cimport malloc, free

# labels are summed in 64 bits; larger inputs raise OverflowError and the
# caller falls back to the pure-Python tracer
cdef long long LIMIT = 1LL << 40
LABEL_LIMIT = LIMIT


def concat_kernel(int n, xp, xl, yp, yl):
    cdef int two_n = 2 * n
    cdef int flip = two_n - 1
    cdef int i, start, cur, q, m
    cdef bint on_x
    cdef long long acc
    cdef int *buf = <int *> malloc(sizeof(int) * (2 * two_n + two_n + two_n + n))
    cdef long long *lab = <long long *> malloc(sizeof(long long) * 3 * two_n)
    if buf == NULL or lab == NULL:
        free(buf)
        free(lab)
        raise MemoryError()
    cdef int *XP = buf
    cdef int *YP = buf + two_n
    cdef int *RP = buf + 2 * two_n
    cdef int *done = buf + 3 * two_n
    cdef int *seen = buf + 4 * two_n
    cdef long long *XL = lab
    cdef long long *YL = lab + two_n
    cdef long long *RL = lab + 2 * two_n
    cdef int *P
    cdef long long *L
    loops = []
    try:
        for i in range(two_n):
            XP[i] = xp[i]
            YP[i] = yp[i]
            XL[i] = xl[i]
            YL[i] = yl[i]
            if not (-LIMIT < XL[i] < LIMIT and -LIMIT < YL[i] < LIMIT):
                raise OverflowError("label outside the compiled kernel's range")
            done[i] = 0
        for i in range(n):
            seen[i] = 0
        for start in range(two_n):
            if done[start]:
                continue
            if start < n:
                P = XP
                L = XL
                on_x = True
            else:
                P = YP
                L = YL
                on_x = False
            cur = start
            acc = 0
            while True:
                q = P[cur]
                acc += L[cur]
                if on_x:
                    if q < n:
                        break
                    seen[flip - q] = 1
                    P = YP
                    L = YL
                    on_x = False
                else:
                    if q >= n:
                        break
                    seen[q] = 1
                    P = XP
                    L = XL
                    on_x = True
                cur = flip - q
            RP[start] = q
            RP[q] = start
            RL[start] = acc
            RL[q] = -acc
            done[start] = 1
            done[q] = 1
        for m in range(n):
            if seen[m]:
                continue
            start = flip - m
            cur = start
            P = XP
            L = XL
            on_x = True
            acc = 0
            while True:
                q = P[cur]
                acc += L[cur]
                if on_x:
                    seen[flip - q] = 1
                    P = YP
                    L = YL
                    on_x = False
                else:
                    seen[q] = 1
                    P = XP
                    L = XL
                    on_x = True
                cur = flip - q
                if on_x and cur == start:
                    break
            loops.append(acc)
        partner = tuple([RP[i] for i in range(two_n)])
        label = tuple([RL[i] for i in range(two_n)])
    finally:
        free(buf)
        free(lab)
    return partner, label, loops
