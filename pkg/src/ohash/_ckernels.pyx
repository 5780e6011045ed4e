# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
"""Compiled search kernels; argument-compatible with ``_pykernels``."""


def naive_positions(const unsigned char[::1] x, const unsigned char[::1] y):
    cdef Py_ssize_t m = x.shape[0]
    cdef Py_ssize_t n = y.shape[0]
    cdef Py_ssize_t j, k
    cdef bint ok
    out = []
    for j in range(n - m + 1):
        ok = True
        for k in range(m):
            if y[j + k] != x[k]:
                ok = False
                break
        if ok:
            out.append(j)
    return out


def qgram_positions(const unsigned char[::1] x, const unsigned char[::1] y,
                    int q, const unsigned short[::1] shifts, Py_ssize_t sh, int kind):
    cdef Py_ssize_t m = x.shape[0]
    cdef Py_ssize_t n = y.shape[0]
    cdef Py_ssize_t t = m - 1
    cdef Py_ssize_t j, k
    cdef unsigned int h
    cdef unsigned short s
    cdef bint ok
    out = []
    while t < n:
        if kind == 1:
            h = y[t]
        elif kind == 2:
            h = (y[t - 1] << 8) | y[t]
        else:
            h = 0
            for k in range(t - q + 1, t + 1):
                h = (h << 1) + y[k]
            h &= 0xFF
        s = shifts[h]
        if s > 0:
            t += s
        else:
            j = t - m + 1
            ok = True
            for k in range(m):
                if y[j + k] != x[k]:
                    ok = False
                    break
            if ok:
                out.append(j)
            t += sh
    return out


def perfect_positions(const unsigned char[::1] x, const unsigned char[::1] y,
                      int q, const unsigned short[::1] shifts, Py_ssize_t sh,
                      int kind, unsigned int final_hash):
    cdef Py_ssize_t m = x.shape[0]
    cdef Py_ssize_t n = y.shape[0]
    cdef Py_ssize_t plen = m - q
    cdef Py_ssize_t t = m - 1
    cdef Py_ssize_t j, k
    cdef unsigned int h
    cdef bint ok
    out = []
    while t < n:
        if kind == 1:
            h = y[t]
        else:
            h = (y[t - 1] << 8) | y[t]
        if shifts[h] > 0:
            t += shifts[h]
        else:
            if h == final_hash:
                j = t - m + 1
                ok = True
                for k in range(plen):
                    if y[j + k] != x[k]:
                        ok = False
                        break
                if ok:
                    out.append(j)
            t += sh
    return out
