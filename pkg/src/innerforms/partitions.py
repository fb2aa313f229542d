"""Exact partition arithmetic.

A partition is a nonincreasing finite sequence of positive integers;
the empty partition is allowed.  Values are stored normalized (sorted
descending, no zero parts) so equality is canonical, and they are
immutable, hence safe to share across threads.

Two scaling operations appear throughout:

* ``times(e, lam)`` repeats every part e times,
* ``dot(e, lam)`` multiplies every part by e,

together with the matching divisibility predicates and the transpose.
They satisfy transpose(dot(e, lam)) == times(e, transpose(lam)) and
transpose(times(e, lam)) == dot(e, transpose(lam)); note the transpose
on the inner argument, which the exhaustive tests pin down.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence


class Partition(tuple):
    """Normalized integer partition; behaves as a tuple of parts."""

    def __new__(cls, parts: Iterable[int] = ()):
        cleaned = []
        for p in parts:
            p = int(p)
            if p < 0:
                raise ValueError(f"partition parts must be positive, got {p}")
            if p > 0:
                cleaned.append(p)
        cleaned.sort(reverse=True)
        return super().__new__(cls, cleaned)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


def transpose(lam: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths of ``lam``."""
    if not lam:
        return EMPTY
    cols = [0] * lam[0]
    for part in lam:
        for i in range(part):
            cols[i] += 1
    return Partition(cols)


def times(e: int, lam: Partition) -> Partition:
    """Each part repeated e times (e >= 1)."""
    _check_scale(e)
    return Partition(p for p in lam for _ in range(e))


def dot(e: int, lam: Partition) -> Partition:
    """Each part multiplied by e (e >= 1)."""
    _check_scale(e)
    return Partition(e * p for p in lam)


def divides_times(e: int, lam: Partition) -> bool:
    """True iff lam == times(e, mu) for some partition mu, i.e. every
    distinct part occurs with multiplicity divisible by e."""
    _check_scale(e)
    return all(mult % e == 0 for mult in Counter(lam).values())


def divides_dot(e: int, lam: Partition) -> bool:
    """True iff lam == dot(e, mu) for some mu, i.e. e divides every part."""
    _check_scale(e)
    return all(p % e == 0 for p in lam)


def dominance_leq(lam1: Sequence[int], lam2: Sequence[int]) -> bool:
    """Dominance order: every partial sum of lam1 is <= that of lam2.

    Shorter sequences are zero-padded, so the comparison is total even
    for partitions of different sizes.
    """
    s1 = s2 = 0
    for i in range(max(len(lam1), len(lam2))):
        s1 += lam1[i] if i < len(lam1) else 0
        s2 += lam2[i] if i < len(lam2) else 0
        if s1 > s2:
            return False
    return True


def concat_transpose(lams: Iterable[Partition]) -> Partition:
    """Transpose of the sorted concatenation of the transposes.

    Equivalently the row-aligned sum of the input diagrams; this is the
    partition of the induced orbit in terms of the block partitions.
    """
    merged: list[int] = []
    for lam in lams:
        merged.extend(transpose(Partition(lam)))
    return transpose(Partition(merged))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []

    def grow(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            grow(remaining - part, part, prefix)
            prefix.pop()

    grow(n, n, [])
    return out


def count_partitions(n: int) -> int:
    """Number of partitions of n (Euler recurrence with memo)."""
    return _npartitions(n)


_NPART_CACHE = {0: 1}


def _npartitions(n: int) -> int:
    if n < 0:
        return 0
    if n in _NPART_CACHE:
        return _NPART_CACHE[n]
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        total += sign * (_npartitions(n - g1) + _npartitions(n - g2))
        k += 1
    _NPART_CACHE[n] = total
    return total


def _check_scale(e: int):
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"scaling factor must be a positive integer, got {e}")
