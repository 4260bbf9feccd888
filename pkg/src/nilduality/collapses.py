"""
B-, C- and D-collapses.

The X-collapse of ``p`` is the largest type-X partition dominated by ``p``.
:func:`collapse` builds it by repeatedly repairing the largest offending
part; :func:`collapse_oracle` finds it by brute force and exists to check
the former.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .errors import BoundExceeded, NoMaximum, UnsupportedFamily
from .orbits import Family, check_parity, is_type
from .partition import Partition, dominance_leq, enumerate_partitions

__all__ = ["ORACLE_BOUND", "collapse", "collapse_oracle"]

ORACLE_BOUND = 18

_RESTRICTED_PARITY = {Family.B: 0, Family.C: 1, Family.D: 0}


def _admissible(p: Partition, f: Family) -> Family:
    f = Family(f)
    if f not in _RESTRICTED_PARITY:
        raise UnsupportedFamily(f"no collapse for type {f}")
    check_parity(f, sum(p))
    return f


def collapse(p: Partition, f: Family) -> Partition:
    """Return the type-``f`` collapse of ``p`` (``f`` one of B, C, D)."""
    return _collapse(Partition(p), _admissible(p, f))


@lru_cache(maxsize=1 << 18)
def _collapse(p: Partition, f: Family) -> Partition:
    bad_parity = _RESTRICTED_PARITY[f]
    parts = list(p)
    while True:
        odd_mult = [q for q, m in Counter(parts).items() if q % 2 == bad_parity and m % 2]
        if not odd_mult:
            return Partition._trusted(parts)
        q = max(odd_mult)
        # last occurrence of q loses a box; the first later row shorter than q-1 gains it
        i = len(parts) - 1 - parts[::-1].index(q)
        parts[i] -= 1
        for j in range(i + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)


def collapse_oracle(p: Partition, f: Family, bound: int = ORACLE_BOUND) -> Partition:
    """Brute-force collapse: the dominance-maximum of all type-``f`` partitions below ``p``."""
    f = _admissible(p, f)
    size = sum(p)
    if size > bound:
        raise BoundExceeded(f"oracle bound is {bound}, got size {size}")
    below = [q for q in enumerate_partitions(size) if is_type(q, f) and dominance_leq(q, p)]
    if not below:
        raise NoMaximum(f"no type-{f} partition below {p}")
    # a dominance maximum is also lexicographically largest, i.e. first in enumeration order
    top = below[0]
    for q in below[1:]:
        if not dominance_leq(q, top):
            raise NoMaximum(f"type-{f} partitions below {p} have no maximum ({q} vs {top})")
    return top
