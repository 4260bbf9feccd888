"""
Partitions as nilpotent orbits of the classical Lie algebras.

Type A: gl_n, any partition. Type B: o_{2n+1}, odd size, even parts with
even multiplicity. Type C: sp_{2n}, even size, odd parts with even
multiplicity. Type D: o_{2n}, even size, even parts with even multiplicity.
Very even type-D partitions carry no I/II label here.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import NotAnOrbit, ParityMismatch, SizeMismatch, UnsupportedFamily
from .partition import (
    MAX_ENUMERATION_SIZE,
    Partition,
    dominance_matrix,
    enumerate_partitions,
    transpose,
)

__all__ = [
    "Family",
    "OrbitFilter",
    "is_type",
    "is_special",
    "is_metaplectic_special",
    "enumerate_orbits",
    "hasse_edges",
    "check_parity",
]


class Family(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    def __str__(self) -> str:
        return self.value


class OrbitFilter(str, Enum):
    ALL = "all"
    SPECIAL = "special"
    METAPLECTIC_SPECIAL = "metaplectic_special"

    @classmethod
    def parse(cls, text: str) -> "OrbitFilter":
        aliases = {"sp": cls.SPECIAL, "ms": cls.METAPLECTIC_SPECIAL}
        return aliases.get(text) or cls(text)


# parity of the parts whose multiplicity must be even
_RESTRICTED_PARITY = {Family.B: 0, Family.C: 1, Family.D: 0}
_SIZE_PARITY = {Family.B: 1, Family.C: 0, Family.D: 0}


def check_parity(f: Family, size: int) -> None:
    f = Family(f)
    if f in _SIZE_PARITY and size % 2 != _SIZE_PARITY[f]:
        raise ParityMismatch(f"type {f} needs {'odd' if _SIZE_PARITY[f] else 'even'} size, got {size}")


def is_type(p: Partition, f: Family) -> bool:
    """Whether ``p`` is the Young diagram of a nilpotent orbit of type ``f``."""
    f = Family(f)
    if f is Family.A:
        return True
    if sum(p) % 2 != _SIZE_PARITY[f]:
        return False
    bad = _RESTRICTED_PARITY[f]
    return all(m % 2 == 0 for part, m in Counter(p).items() if part % 2 == bad)


def is_special(p: Partition, f: Family) -> bool:
    """Lusztig-special: the transpose is of type B, C, C for ``f`` = B, C, D.

    Every type-A orbit counts as special.
    """
    f = Family(f)
    if not is_type(p, f):
        raise NotAnOrbit(f"{p} is not a type-{f} orbit")
    if f is Family.A:
        return True
    dual = Family.B if f is Family.B else Family.C
    return is_type(transpose(p), dual)


def is_metaplectic_special(p: Partition) -> bool:
    """A type-C orbit is metaplectic special when its transpose is of type D."""
    if not is_type(p, Family.C):
        raise NotAnOrbit(f"{p} is not a type-C orbit")
    return is_type(transpose(p), Family.D)


def enumerate_orbits(
    f: Family,
    size: int,
    kind: OrbitFilter = OrbitFilter.ALL,
    bound: int = MAX_ENUMERATION_SIZE,
) -> list[Partition]:
    """Orbits of type ``f`` and the given size passing ``kind``, in enumeration order."""
    f = Family(f)
    kind = OrbitFilter(kind)
    check_parity(f, size)
    if kind is OrbitFilter.METAPLECTIC_SPECIAL and f is not Family.C:
        raise UnsupportedFamily("metaplectic special orbits live in type C only")
    orbits = [p for p in enumerate_partitions(size, bound) if is_type(p, f)]
    if kind is OrbitFilter.SPECIAL:
        orbits = [p for p in orbits if is_special(p, f)]
    elif kind is OrbitFilter.METAPLECTIC_SPECIAL:
        orbits = [p for p in orbits if is_metaplectic_special(p)]
    return orbits


def hasse_edges(orbits: Sequence[Partition]) -> list[tuple[Partition, Partition]]:
    """Covering pairs ``(p, q)`` of dominance order restricted to ``orbits``; ``p`` is the smaller."""
    orbits = list(dict.fromkeys(orbits))
    if len({sum(p) for p in orbits}) > 1:
        raise SizeMismatch("hasse_edges needs orbits of a single size")
    if len(orbits) < 2:
        return []
    leq = dominance_matrix(orbits)
    less = leq & ~np.eye(len(orbits), dtype=bool)
    through = (less.astype(np.int64) @ less.astype(np.int64)) > 0
    cover = less & ~through
    return [(orbits[i], orbits[j]) for i, j in zip(*np.nonzero(cover))]
