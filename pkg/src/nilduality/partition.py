"""
Integer partitions viewed as Young diagrams.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers (the row lengths). All operations return fresh values, so they can
be shared freely between threads and processes.

Text form is a comma list of parts, ``"3,1"``; the empty diagram is ``"-"``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    BoundExceeded,
    ColumnTooShort,
    EmptyDiagram,
    RowTooShort,
    SizeMismatch,
)

__all__ = [
    "MAX_ENUMERATION_SIZE",
    "Partition",
    "transpose",
    "grow",
    "shrink",
    "strip_first_column",
    "strip_first_row",
    "prepend_row",
    "prepend_column",
    "dominance_leq",
    "dominance_matrix",
    "enumerate_partitions",
]

MAX_ENUMERATION_SIZE = 40

EMPTY_TEXT = "-"


class Partition(tuple):
    """A Young diagram, stored as its row lengths in weakly decreasing order.

    >>> p = Partition([3, 1])
    >>> p.size, p.length, p.r1, p.c1
    (4, 2, 3, 2)
    >>> str(Partition.parse("-"))
    '-'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for x in parts:
            if isinstance(x, bool) or int(x) != x:
                raise ValueError(f"parts must be integers, got {x!r}")
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        # caller guarantees positivity and ordering
        return tuple.__new__(cls, tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"a1,a2,...,ak"``; ``"-"`` (or blank) is the empty diagram."""
        text = text.strip()
        if text in ("", EMPTY_TEXT):
            return EMPTY
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def r1(self) -> int:
        """Length of the first row (0 for the empty diagram)."""
        return self[0] if self else 0

    @property
    def c1(self) -> int:
        """Length of the first column."""
        return len(self)

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else EMPTY_TEXT

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"


EMPTY = Partition._trusted(())


def transpose(p: Partition) -> Partition:
    """Conjugate diagram: columns of ``p`` read as rows."""
    if not p:
        return EMPTY
    cols = [0] * p[0]
    for row in p:
        for j in range(row):
            cols[j] += 1
    return Partition._trusted(cols)


def grow(p: Partition) -> Partition:
    """Add one box at the end of the first row."""
    if not p:
        return Partition._trusted((1,))
    return Partition._trusted((p[0] + 1,) + p[1:])


def shrink(p: Partition) -> Partition:
    """Remove one box from the last row."""
    if not p:
        raise EmptyDiagram("cannot remove a box from the empty diagram")
    last = p[-1] - 1
    if last == 0:
        return Partition._trusted(p[:-1])
    return Partition._trusted(p[:-1] + (last,))


def strip_first_column(p: Partition) -> Partition:
    return Partition._trusted(x - 1 for x in p if x > 1)


def strip_first_row(p: Partition) -> Partition:
    return Partition._trusted(p[1:])


def prepend_row(p: Partition, length: int) -> Partition:
    """Inverse of :func:`strip_first_row`: put a new first row of ``length`` boxes on top."""
    if length < 1 or length < p.r1:
        raise RowTooShort(f"row of length {length} cannot sit above {p}")
    return Partition._trusted((length,) + tuple(p))


def prepend_column(p: Partition, length: int) -> Partition:
    """Inverse of :func:`strip_first_column`: add a new first column of ``length`` boxes."""
    if length < 1 or length < p.c1:
        raise ColumnTooShort(f"column of length {length} cannot precede {p}")
    return Partition._trusted([x + 1 for x in p] + [1] * (length - len(p)))


@lru_cache(maxsize=None)
def _prefix_sums(p: Partition) -> tuple[int, ...]:
    return tuple(accumulate(p))


def dominance_leq(p: Partition, q: Partition) -> bool:
    """True iff ``p`` is dominated by ``q`` (all prefix sums of ``p`` at most those of ``q``)."""
    if sum(p) != sum(q):
        raise SizeMismatch(f"dominance compares equal sizes only: {p} vs {q}")
    sp, sq = _prefix_sums(p), _prefix_sums(q)
    total = sp[-1] if sp else 0
    for k in range(len(sp)):
        if sp[k] > (sq[k] if k < len(sq) else total):
            return False
    return True


def dominance_matrix(parts: Sequence[Partition]) -> np.ndarray:
    """Boolean matrix ``M`` with ``M[i, j] = dominance_leq(parts[i], parts[j])``."""
    k = len(parts)
    if k == 0:
        return np.zeros((0, 0), dtype=bool)
    sizes = {sum(p) for p in parts}
    if len(sizes) > 1:
        raise SizeMismatch(f"mixed sizes {sorted(sizes)}")
    total = sizes.pop()
    width = max(1, max(len(p) for p in parts))
    sums = np.full((k, width), total, dtype=np.int64)
    for i, p in enumerate(parts):
        ps = _prefix_sums(p)
        sums[i, : len(ps)] = ps
    leq = np.ones((k, k), dtype=bool)
    for col in sums.T:
        leq &= col[:, None] <= col[None, :]
    return leq


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(Partition._trusted(t) for t in _descending(n, n))


def enumerate_partitions(n: int, bound: int = MAX_ENUMERATION_SIZE) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    if n > bound:
        raise BoundExceeded(f"size {n} exceeds enumeration bound {bound}")
    return list(_partitions_of(n))
