"""Exact linear algebra over the rationals.

Rank decisions throughout the library must be certain, so everything
here is exact: integer matrices go through fraction-free (Bareiss)
elimination, rational matrices are reduced to the integer case by
row scaling.  No floating point anywhere.

The integer kernels have two interchangeable implementations: a
compiled Cython extension (``innerforms._kernels``) and a pure-Python
fallback (``innerforms._pykernels``).  The compiled path is selected at
import time when available; it raises OverflowError whenever a value
might not fit in 64 bits, in which case the call is transparently
retried on the arbitrary-precision pure path.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import _pykernels

try:  # pragma: no cover - depends on the build environment
    from . import _kernels  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover
    _kernels = None

_FAST = _kernels


def backend_name() -> str:
    """Name of the kernel backend selected at import: compiled or pure."""
    return "compiled" if _FAST is not None else "pure"


def _is_int_matrix(rows) -> bool:
    return all(isinstance(x, int) for row in rows for x in row)


def _rows_to_int(rows):
    """Scale each row by its denominator lcm; leaves the rank unchanged."""
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(rows) -> int:
    """Exact rank of a matrix with int or Fraction entries."""
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(rows[0])
    int_rows = rows if _is_int_matrix(rows) else _rows_to_int(rows)
    flat = [x for row in int_rows for x in row]
    if _FAST is not None:
        try:
            return _FAST.rank_flat(flat, nrows, ncols)
        except OverflowError:
            pass
    return _pykernels.rank_flat(flat, nrows, ncols)


def mat_mul(a, b):
    """Exact matrix product; ints stay ints, otherwise Fractions."""
    n, k = len(a), len(a[0])
    m = len(b[0])
    if len(b) != k:
        raise ValueError("inner dimensions do not match")
    if _is_int_matrix(a) and _is_int_matrix(b):
        fa = [x for row in a for x in row]
        fb = [x for row in b for x in row]
        if _FAST is not None:
            try:
                flat = _FAST.matmul_flat(fa, fb, n, k, m)
                return [flat[i * m:(i + 1) * m] for i in range(n)]
            except OverflowError:
                pass
        flat = _pykernels.matmul_flat(fa, fb, n, k, m)
        return [flat[i * m:(i + 1) * m] for i in range(n)]
    return [
        [sum((Fraction(a[i][t]) * Fraction(b[t][j]) for t in range(k)),
             Fraction(0)) for j in range(m)]
        for i in range(n)
    ]


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_pow(a, k: int):
    """k-th power, k >= 0, by repeated squaring."""
    n = len(a)
    result = identity(n)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if k > 1 else base
        k >>= 1
    return result


def poly_at(coeffs, x):
    """Evaluate the monic polynomial T^g + c_{g-1} T^{g-1} + ... + c_0 at a
    square matrix, by Horner's rule.  ``coeffs`` lists c_0, ..., c_{g-1}."""
    n = len(x)
    acc = identity(n)
    for c in reversed(coeffs):
        acc = mat_mul(acc, x)
        if c:
            acc = mat_add(acc, mat_scale(c, identity(n)))
    return acc
