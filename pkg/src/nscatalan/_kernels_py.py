"""Pure-Python hot kernels on flat term dictionaries.

A term dictionary maps ``(q, e_1, ..., e_ell)`` to a nonzero integer.
The compiled module ``_kernels`` exposes the same functions.
"""

from __future__ import annotations


def pi_terms(data: dict, i: int) -> dict:
    """Demazure operator pi_i applied monomial-wise (closed geometric sums)."""
    out: dict = {}
    get = out.get
    for key, c in data.items():
        a = key[i]
        b = key[i + 1]
        head = key[:i]
        tail = key[i + 2 :]
        if a >= b:
            s = a + b
            for k in range(b, a + 1):
                nk = head + (k, s - k) + tail
                v = get(nk, 0) + c
                if v:
                    out[nk] = v
                else:
                    del out[nk]
        elif a + 1 < b:
            s = a + b
            for k in range(a + 1, b):
                nk = head + (k, s - k) + tail
                v = get(nk, 0) - c
                if v:
                    out[nk] = v
                else:
                    del out[nk]
    return out


def phi_terms(data: dict) -> dict:
    """Phi: x_i -> x_{i+1}, x_ell -> q x_1 (exponents rotate right)."""
    out = {}
    for key, c in data.items():
        last = key[-1]
        out[(key[0] + last, last) + key[1:-1]] = c
    return out


def mul_terms(a: dict, b: dict) -> dict:
    """Product of two term dictionaries."""
    out: dict = {}
    get = out.get
    if len(a) < len(b):
        a, b = b, a
    for kb, cb in b.items():
        for ka, ca in a.items():
            nk = tuple(x + y for x, y in zip(ka, kb))
            v = get(nk, 0) + ca * cb
            if v:
                out[nk] = v
            else:
                del out[nk]
    return out
