# cython: language_level=3
"""Compiled hot kernels on flat term dictionaries.

Same contract as ``_kernels_py``: a term dictionary maps
``(q, e_1, ..., e_ell)`` to a nonzero Python integer.
"""


def pi_terms(dict data, Py_ssize_t i):
    cdef dict out = {}
    cdef tuple key, head, tail, nk
    cdef long a, b, s, k
    cdef object c, v
    for key, c in data.items():
        a = key[i]
        b = key[i + 1]
        head = key[:i]
        tail = key[i + 2:]
        s = a + b
        if a >= b:
            for k in range(b, a + 1):
                nk = head + (k, s - k) + tail
                v = out.get(nk, 0) + c
                if v:
                    out[nk] = v
                else:
                    del out[nk]
        elif a + 1 < b:
            for k in range(a + 1, b):
                nk = head + (k, s - k) + tail
                v = out.get(nk, 0) - c
                if v:
                    out[nk] = v
                else:
                    del out[nk]
    return out


def phi_terms(dict data):
    cdef dict out = {}
    cdef tuple key
    cdef object c, last
    cdef Py_ssize_t n
    for key, c in data.items():
        n = len(key)
        last = key[n - 1]
        out[(key[0] + last, last) + key[1:n - 1]] = c
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ka, kb, nk
    cdef object ca, cb, v
    cdef Py_ssize_t j, n
    cdef list buf
    if len(a) < len(b):
        a, b = b, a
    for kb, cb in b.items():
        n = len(kb)
        for ka, ca in a.items():
            buf = [0] * n
            for j in range(n):
                buf[j] = ka[j] + kb[j]
            nk = tuple(buf)
            v = out.get(nk, 0) + ca * cb
            if v:
                out[nk] = v
            else:
                del out[nk]
    return out
