"""Pure-Python exact integer matrix kernels.

Reference implementation of the hot kernels: fraction-free (Bareiss)
rank and integer matrix product.  Arbitrary-precision, so it never
overflows; ``innerforms._kernels`` is the compiled fast path with the
same call signatures, and ``innerforms.linalg`` picks between them.

Matrices are flat row-major lists of Python ints.
"""

BACKEND = "pure"


def rank_flat(data, nrows, ncols):
    """Rank of an integer matrix via Bareiss fraction-free elimination.

    All intermediate values are minors of the input, and every division
    is exact, so the result is certain.
    """
    m = [list(data[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, nrows):
            head = m[i][col]
            row = m[i]
            top = m[rank]
            for j in range(col + 1, ncols):
                row[j] = (pivot * row[j] - head * top[j]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def matmul_flat(a, b, n, k, m):
    """Product of an n*k and a k*m integer matrix, flat row-major."""
    out = [0] * (n * m)
    for i in range(n):
        arow = a[i * k:(i + 1) * k]
        base = i * m
        for t in range(k):
            av = arow[t]
            if not av:
                continue
            brow = b[t * m:(t + 1) * m]
            for j in range(m):
                out[base + j] += av * brow[j]
    return out
