"""
Infinitesimal characters attached to nilpotent orbits.

All values are half-integers stored as doubled ints, so equality is exact.
An :class:`InfChar` is kept in its canonical Weyl-group form (absolute
values sorted descending), which is a complete invariant of the orbit of a
real vector under signed permutations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable

from .duality import md_BV
from .errors import NotAnOrbit, PairingImpossible, RankTooSmall
from .orbits import Family, is_type
from .partition import Partition, transpose

__all__ = [
    "HalfInt",
    "InfChar",
    "RowPairing",
    "rho",
    "infinitesimal_character",
    "is_metaplectic_integral",
    "theta_lift_character",
    "row_pairing",
    "unipotent_attachment",
]


@total_ordering
@dataclass(frozen=True)
class HalfInt:
    """An element of (1/2)Z, stored as ``twice_value``."""

    twice_value: int

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        value = Fraction(text.strip())
        if value.denominator not in (1, 2):
            raise ValueError(f"not a half-integer: {text!r}")
        return cls(int(2 * value))

    @property
    def is_integral(self) -> bool:
        return self.twice_value % 2 == 0

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.twice_value))

    def __lt__(self, other: "HalfInt") -> bool:
        return self.twice_value < other.twice_value

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self) -> str:
        if self.twice_value % 2 == 0:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


class InfChar:
    """A W_n-orbit in (1/2 Z)^n, held by its canonical representative."""

    __slots__ = ("_twice",)

    def __init__(self, entries: Iterable[HalfInt | int | str | Fraction] = ()):
        twice = []
        for e in entries:
            if isinstance(e, HalfInt):
                twice.append(e.twice_value)
            elif isinstance(e, str):
                twice.append(HalfInt.parse(e).twice_value)
            else:
                value = Fraction(e)
                if value.denominator not in (1, 2):
                    raise ValueError(f"not a half-integer: {e!r}")
                twice.append(int(2 * value))
        self._twice = tuple(sorted((abs(t) for t in twice), reverse=True))

    @classmethod
    def from_twice(cls, twice: Iterable[int]) -> "InfChar":
        return cls(HalfInt(t) for t in twice)

    @classmethod
    def parse(cls, text: str) -> "InfChar":
        text = text.strip()
        if text in ("", "-"):
            return cls()
        return cls(HalfInt.parse(tok) for tok in text.split(","))

    @property
    def entries(self) -> tuple[HalfInt, ...]:
        return tuple(HalfInt(t) for t in self._twice)

    @property
    def twice(self) -> tuple[int, ...]:
        return self._twice

    @property
    def rank(self) -> int:
        return len(self._twice)

    def canonical(self) -> "InfChar":
        return InfChar.from_twice(self._twice)

    def __eq__(self, other) -> bool:
        return isinstance(other, InfChar) and self._twice == other._twice

    def __hash__(self) -> int:
        return hash(self._twice)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries) if self._twice else "-"

    def __repr__(self) -> str:
        return f"InfChar({str(self)!r})"


def _rho_twice(a: int) -> range:
    # odd a: 1, 2, ..., (a-1)/2; even a: 1/2, 3/2, ..., (a-1)/2
    return range(1 + a % 2, a, 2)


def rho(a: int) -> list[HalfInt]:
    """The string attached to a row of length ``a``; empty for ``a`` in {0, 1}."""
    if a < 0:
        raise ValueError(f"row length must be nonnegative, got {a}")
    return [HalfInt(t) for t in _rho_twice(a)]


def infinitesimal_character(p: Partition, rank: int) -> InfChar:
    """Concatenate ``rho`` over the rows of ``p`` and pad with zeros up to ``rank``."""
    twice = [t for row in p for t in _rho_twice(row)]
    if len(twice) > rank:
        raise RankTooSmall(f"{p} needs rank at least {len(twice)}, got {rank}")
    zeros = rank - len(twice)
    if 2 * rank == sum(p) and is_type(p, Family.C):
        odd_rows = sum(1 for row in p if row % 2)
        assert 2 * zeros == odd_rows, (p, zeros, odd_rows)
    return InfChar.from_twice(twice + [0] * zeros)


def is_metaplectic_integral(c: InfChar) -> bool:
    return all(t % 2 for t in c.twice)


def theta_lift_character(c: InfChar, a: int) -> InfChar:
    """Append 1/2, 3/2, ..., (2a-1)/2 to ``c``."""
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    return InfChar.from_twice(c.twice + tuple(range(1, 2 * a, 2)))


@dataclass(frozen=True)
class RowPairing:
    """Rows of a type-C diagram split into distinct even rows and equal pairs.

    ``distinct_even`` is strictly increasing with an even number of entries
    (a leading 0 is allowed); ``paired`` holds one entry per pair of equal
    rows, descending; ``core_columns`` are the column lengths
    ``(a_{2p}-1, a_{2p-1}+1, ..., a_2-1, a_1+1)`` of the core orbit.
    """

    distinct_even: tuple[int, ...]
    paired: tuple[int, ...]
    core_columns: tuple[int, ...]

    def rows(self) -> Partition:
        rows = [a for a in self.distinct_even if a] + [b for b in self.paired for _ in (0, 1)]
        return Partition(sorted(rows, reverse=True))

    def core(self) -> Partition:
        """The core orbit, columns re-read as rows."""
        return transpose(Partition(self.core_columns))


def row_pairing(p: Partition) -> RowPairing:
    if not is_type(p, Family.C):
        raise NotAnOrbit(f"{p} is not a type-C orbit")
    distinct, paired = [], []
    for part, m in sorted(Counter(p).items(), reverse=True):
        if m % 2:
            if part % 2:
                raise PairingImpossible(f"odd row {part} of {p} has odd multiplicity")
            distinct.append(part)
        paired.extend([part] * (m // 2))
    distinct.sort()
    if len(distinct) % 2:
        distinct.insert(0, 0)
    columns = []
    for k in range(len(distinct) - 1, 0, -2):
        columns += [distinct[k] - 1, distinct[k - 1] + 1]
    return RowPairing(tuple(distinct), tuple(paired), tuple(c for c in columns if c))


def unipotent_attachment(p: Partition) -> tuple[InfChar, Partition]:
    """Infinitesimal character and orbit a special unipotent representation attached to ``p`` must have."""
    if not is_type(p, Family.C):
        raise NotAnOrbit(f"{p} is not a type-C orbit")
    return infinitesimal_character(p, sum(p) // 2), md_BV(p)
