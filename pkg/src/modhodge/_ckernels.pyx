# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse multiplication kernel.

Same contract as ``_pykernels``.  Integer inputs whose products provably fit
in 64 bits are convolved in C, either into a dense exponent box or through a
sorted list of packed keys; everything else (``Fraction`` coefficients, huge
integers) takes a compiled object loop.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, calloc, free, qsort

from fractions import Fraction

BACKEND = "cython"


cdef inline object _norm(object c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c

cdef int64_t DENSE_MAX = 1 << 22
cdef object SAFE = 1 << 62

ctypedef struct entry:
    int64_t key
    int64_t c


cdef int cmp_entry(const void *x, const void *y) noexcept nogil:
    cdef int64_t a = (<entry *> x).key
    cdef int64_t b = (<entry *> y).key
    return (a > b) - (a < b)


cdef bint _int_bounds(dict d, int64_t *mx):
    """Max exponent per axis into mx[0..2]; False if any coefficient is not a plain int."""
    cdef object c
    cdef tuple k
    mx[0] = mx[1] = mx[2] = 0
    for k, c in d.items():
        if type(c) is not int:
            return False
        if <int64_t> k[0] > mx[0]:
            mx[0] = k[0]
        if <int64_t> k[1] > mx[1]:
            mx[1] = k[1]
        if <int64_t> k[2] > mx[2]:
            mx[2] = k[2]
    return True


cdef object _maxabs(dict d):
    cdef object m = 0
    for c in d.values():
        if c > m:
            m = c
        elif -c > m:
            m = -c
    return m


cdef dict _object_mul(dict a, dict b):
    cdef dict out = {}
    cdef list bitems = list(b.items())
    cdef tuple ka, kb, k
    cdef Py_ssize_t ta, ua, va
    for ka, ca in a.items():
        ta = ka[0]; ua = ka[1]; va = ka[2]
        for kb, cb in bitems:
            k = (ta + <Py_ssize_t> kb[0], ua + <Py_ssize_t> kb[1], va + <Py_ssize_t> kb[2])
            out[k] = out.get(k, 0) + ca * cb
    return {k: _norm(out[k]) for k in sorted(out) if out[k]}


cdef dict _dense_mul(dict a, dict b, int64_t du, int64_t dv, int64_t box):
    cdef int64_t *acc = <int64_t *> calloc(box, sizeof(int64_t))
    if acc == NULL:
        raise MemoryError()
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef int64_t *ka = <int64_t *> malloc(na * sizeof(int64_t))
    cdef int64_t *ca = <int64_t *> malloc(na * sizeof(int64_t))
    cdef int64_t *kb = <int64_t *> malloc(nb * sizeof(int64_t))
    cdef int64_t *cb = <int64_t *> malloc(nb * sizeof(int64_t))
    cdef dict out = {}
    cdef int64_t idx, c, t, rem
    try:
        if ka == NULL or ca == NULL or kb == NULL or cb == NULL:
            raise MemoryError()
        i = 0
        for k, c0 in a.items():
            ka[i] = (<int64_t> k[0] * du + <int64_t> k[1]) * dv + <int64_t> k[2]
            ca[i] = c0
            i += 1
        j = 0
        for k, c0 in b.items():
            kb[j] = (<int64_t> k[0] * du + <int64_t> k[1]) * dv + <int64_t> k[2]
            cb[j] = c0
            j += 1
        with nogil:
            for i in range(na):
                for j in range(nb):
                    acc[ka[i] + kb[j]] += ca[i] * cb[j]
        for idx in range(box):
            c = acc[idx]
            if c != 0:
                t = idx // (du * dv)
                rem = idx - t * du * dv
                out[(t, rem // dv, rem % dv)] = c
    finally:
        free(acc); free(ka); free(ca); free(kb); free(cb)
    return out


cdef dict _sparse_mul(dict a, dict b, int64_t du, int64_t dv):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j, n = na * nb, p
    cdef entry *buf = <entry *> malloc(n * sizeof(entry))
    cdef int64_t *ka = <int64_t *> malloc(na * sizeof(int64_t))
    cdef int64_t *ca = <int64_t *> malloc(na * sizeof(int64_t))
    cdef int64_t *kb = <int64_t *> malloc(nb * sizeof(int64_t))
    cdef int64_t *cb = <int64_t *> malloc(nb * sizeof(int64_t))
    cdef dict out = {}
    cdef int64_t key, c, t, rem
    try:
        if buf == NULL or ka == NULL or ca == NULL or kb == NULL or cb == NULL:
            raise MemoryError()
        i = 0
        for k, c0 in a.items():
            ka[i] = (<int64_t> k[0] * du + <int64_t> k[1]) * dv + <int64_t> k[2]
            ca[i] = c0
            i += 1
        j = 0
        for k, c0 in b.items():
            kb[j] = (<int64_t> k[0] * du + <int64_t> k[1]) * dv + <int64_t> k[2]
            cb[j] = c0
            j += 1
        with nogil:
            p = 0
            for i in range(na):
                for j in range(nb):
                    buf[p].key = ka[i] + kb[j]
                    buf[p].c = ca[i] * cb[j]
                    p += 1
            qsort(buf, n, sizeof(entry), cmp_entry)
        p = 0
        while p < n:
            key = buf[p].key
            c = 0
            while p < n and buf[p].key == key:
                c += buf[p].c
                p += 1
            if c != 0:
                t = key // (du * dv)
                rem = key - t * du * dv
                out[(t, rem // dv, rem % dv)] = c
    finally:
        free(buf); free(ka); free(ca); free(kb); free(cb)
    return out


def mul_terms(dict a, dict b):
    if not a or not b:
        return {}
    cdef int64_t ma[3]
    cdef int64_t mb[3]
    if not (_int_bounds(a, ma) and _int_bounds(b, mb)):
        return _object_mul(a, b)
    cdef Py_ssize_t na = len(a), nb = len(b)
    if _maxabs(a) * _maxabs(b) * min(na, nb) >= SAFE:
        return _object_mul(a, b)
    cdef object dt = ma[0] + mb[0] + 1, du = ma[1] + mb[1] + 1, dv = ma[2] + mb[2] + 1
    cdef object box = dt * du * dv
    if box >= SAFE:
        return _object_mul(a, b)
    if box <= DENSE_MAX and box <= 8 * na * nb + 4096:
        return _dense_mul(a, b, du, dv, box)
    return _sparse_mul(a, b, du, dv)


def add_terms(dict a, dict b, scale=1):
    """Return ``a + scale * b``."""
    cdef dict out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + scale * c
    return {k: _norm(out[k]) for k in sorted(out) if out[k]}
