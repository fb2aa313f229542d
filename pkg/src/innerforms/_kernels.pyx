# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact integer matrix kernels.

Same contracts as ``innerforms._pykernels`` restricted to values that
fit machine words: entries and every intermediate minor must fit in a
signed 64-bit integer (products are accumulated in 128 bits).  On any
risk of overflow the functions raise OverflowError and the caller falls
back to the pure-Python backend, so results are never silently wrong.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long int128 "__int128"

BACKEND = "compiled"

DEF I64_MAX = 9223372036854775807


cdef inline long long _checked_i64(int128 v) except? -1:
    if v > I64_MAX or v < -I64_MAX:
        raise OverflowError("intermediate value exceeds 64 bits")
    return <long long> v


def rank_flat(data, Py_ssize_t nrows, Py_ssize_t ncols):
    """Bareiss fraction-free rank of a flat row-major int matrix."""
    cdef Py_ssize_t i, j, col, piv, rank
    cdef long long pivot, head, prev
    cdef int128 acc
    cdef long long *m = <long long *>malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows * ncols):
            m[i] = data[i]  # raises OverflowError on values beyond int64
        rank = 0
        prev = 1
        for col in range(ncols):
            piv = -1
            for i in range(rank, nrows):
                if m[i * ncols + col] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    m[piv * ncols + j], m[rank * ncols + j] = (
                        m[rank * ncols + j], m[piv * ncols + j])
            pivot = m[rank * ncols + col]
            for i in range(rank + 1, nrows):
                head = m[i * ncols + col]
                for j in range(col + 1, ncols):
                    acc = (<int128> pivot) * m[i * ncols + j]
                    acc -= (<int128> head) * m[rank * ncols + j]
                    m[i * ncols + j] = _checked_i64(acc / prev)
                m[i * ncols + col] = 0
            prev = pivot
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(m)


DEF MATMUL_ENTRY_MAX = 576460752303423487  # 2^59 - 1


def matmul_flat(a, b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """Product of flat row-major int matrices (n*k by k*m).

    Entries are capped at 2^59 and the inner dimension at 256 so the
    128-bit accumulator cannot wrap.
    """
    cdef Py_ssize_t i, j, t
    cdef int128 acc
    if k > 256:
        raise OverflowError("inner dimension too large for compiled kernel")
    cdef long long *ca = <long long *>malloc(n * k * sizeof(long long))
    cdef long long *cb = <long long *>malloc(k * m * sizeof(long long))
    if ca == NULL or cb == NULL:
        free(ca)
        free(cb)
        raise MemoryError()
    try:
        for i in range(n * k):
            ca[i] = a[i]
            if ca[i] > MATMUL_ENTRY_MAX or ca[i] < -MATMUL_ENTRY_MAX:
                raise OverflowError("entry exceeds compiled matmul bound")
        for i in range(k * m):
            cb[i] = b[i]
            if cb[i] > MATMUL_ENTRY_MAX or cb[i] < -MATMUL_ENTRY_MAX:
                raise OverflowError("entry exceeds compiled matmul bound")
        out = [0] * (n * m)
        for i in range(n):
            for j in range(m):
                acc = 0
                for t in range(k):
                    acc += (<int128> ca[i * k + t]) * cb[t * m + j]
                out[i * m + j] = _checked_i64(acc)
        return out
    finally:
        free(ca)
        free(cb)
