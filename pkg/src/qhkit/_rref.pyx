# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gauss-Jordan kernels; same contract as qhkit._rref_py."""
import numpy as np
cimport numpy as cnp

ctypedef long long i64


def rref_modp(rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [], []
    arr = np.array(rows, dtype=np.int64).reshape(nrows, ncols) % p
    cdef i64[:, ::1] m = arr
    cdef Py_ssize_t r = 0, c, i, k, piv
    cdef i64 inv, f, t
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(c, ncols):
                t = m[r, k]
                m[r, k] = m[piv, k]
                m[piv, k] = t
        inv = pow(int(m[r, c]), -1, int(p))
        if inv != 1:
            for k in range(c, ncols):
                m[r, k] = (m[r, k] * inv) % p
        for i in range(nrows):
            if i != r:
                f = m[i, c]
                if f != 0:
                    for k in range(c, ncols):
                        if m[r, k] != 0:
                            t = (m[i, k] - f * m[r, k]) % p
                            if t < 0:
                                t += p
                            m[i, k] = t
        pivots.append(c)
        r += 1
    return arr[:r].tolist(), pivots


def rref_exact(rows, Py_ssize_t ncols):
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t r = 0, c, i, k, piv
    cdef list row, other
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        m[r], m[piv] = m[piv], m[r]
        row = m[r]
        lead = row[c]
        if lead != 1:
            for k in range(c, ncols):
                if row[k]:
                    row[k] = row[k] / lead
        for i in range(nrows):
            if i != r:
                other = m[i]
                f = other[c]
                if f:
                    for k in range(c, ncols):
                        b = row[k]
                        if b:
                            other[k] = other[k] - f * b
        pivots.append(c)
        r += 1
    return m[:r], pivots
