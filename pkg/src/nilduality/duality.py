"""
Duality maps between nilpotent orbits.

Classical (Langlands dual pairs):

* ``d_LS``: collapse of the transpose, within the same family.
* ``d_SP``: special orbits to special orbits of the Langlands dual family.
* ``d_BV = d_SP o d_LS``.

Metaplectic (sp_{2n} is its own metaplectic dual):

* ``md_LS``: D-collapse of the transpose, Nil(sp_2n) -> special Nil(o_2n).
* ``md_SP``: C-collapse of ``shrink(grow(d))``, special Nil(o_2n) -> metaplectic special Nil(sp_2n).
* ``md_BV = md_SP o md_LS``.

Also the orbit side of the stable-range theta lift Sp_2n -> O_{2n+2a+1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .collapses import collapse
from .errors import (
    InvalidDualPair,
    LiftNotTypeB,
    NotAnOrbit,
    NotSpecial,
    SizeMismatch,
    StableRangeViolated,
    UnsupportedFamily,
)
from .orbits import Family, is_special, is_type
from .partition import Partition, grow, prepend_column, shrink, transpose

__all__ = [
    "DualPair",
    "d_LS",
    "d_SP",
    "d_BV",
    "md_LS",
    "md_SP",
    "md_BV",
    "theta_lift_orbit",
]

_LANGLANDS = {Family.B: (Family.C, -1), Family.C: (Family.B, +1), Family.D: (Family.D, 0)}


@dataclass(frozen=True)
class DualPair:
    """Source and target (family, size) of a duality map.

    Allowed: (B, 2n+1) <-> (C, 2n) and (D, 2n) <-> (D, 2n) (Langlands duals),
    or (C, 2n) <-> (C, 2n) (metaplectic duals).
    """

    source_family: Family
    source_size: int
    target_family: Family
    target_size: int

    def __post_init__(self):
        object.__setattr__(self, "source_family", Family(self.source_family))
        object.__setattr__(self, "target_family", Family(self.target_family))
        src, tgt = self.source_family, self.target_family
        if src is Family.B and self.source_size % 2 == 0:
            raise InvalidDualPair(f"type B needs odd size, got {self.source_size}")
        if src in (Family.C, Family.D) and self.source_size % 2:
            raise InvalidDualPair(f"type {src} needs even size, got {self.source_size}")
        if self.is_metaplectic:
            return
        if src not in _LANGLANDS:
            raise InvalidDualPair(f"no dual pair for type {src}")
        family, shift = _LANGLANDS[src]
        if tgt is not family or self.target_size != self.source_size + shift:
            raise InvalidDualPair(
                f"({src},{self.source_size}) and ({tgt},{self.target_size}) are not dual"
            )

    @property
    def is_metaplectic(self) -> bool:
        return (
            self.source_family is Family.C
            and self.target_family is Family.C
            and self.source_size == self.target_size
        )

    @classmethod
    def langlands(cls, family: Family, size: int) -> "DualPair":
        family = Family(family)
        if family not in _LANGLANDS:
            raise InvalidDualPair(f"no Langlands dual for type {family}")
        target, shift = _LANGLANDS[family]
        return cls(family, size, target, size + shift)

    @classmethod
    def metaplectic(cls, size: int) -> "DualPair":
        return cls(Family.C, size, Family.C, size)


def _require_type(p: Partition, f: Family) -> None:
    if not is_type(p, f):
        raise NotAnOrbit(f"{p} is not a type-{f} orbit")


def _require_special(p: Partition, f: Family) -> None:
    if not is_type(p, f) or not is_special(p, f):
        raise NotSpecial(f"{p} is not a special type-{f} orbit")


def d_LS(p: Partition, f: Family) -> Partition:
    """Lusztig-Spaltenstein duality: the type-``f`` collapse of the transpose."""
    f = Family(f)
    if f not in _LANGLANDS:
        raise UnsupportedFamily(f"d_LS is defined for types B, C, D, not {f}")
    _require_type(p, f)
    return collapse(transpose(p), f)


def d_SP(p: Partition, source: Family) -> Partition:
    """Bijection between special orbits of Langlands-dual families.

    From B: C-collapse of ``shrink(p)``; from C: B-collapse of ``grow(p)``;
    from D: identity.
    """
    source = Family(source)
    if source not in _LANGLANDS:
        raise UnsupportedFamily(f"d_SP is defined for types B, C, D, not {source}")
    _require_special(p, source)
    if source is Family.B:
        return collapse(shrink(p), Family.C)
    if source is Family.C:
        return collapse(grow(p), Family.B)
    return Partition(p)


def d_BV(p: Partition, pair: DualPair) -> Partition:
    """Barbasch-Vogan duality ``d_SP(d_LS(p))`` from ``pair``'s source to its target.

    A metaplectic pair dispatches to :func:`md_BV`.
    """
    if sum(p) != pair.source_size:
        raise SizeMismatch(f"{p} has size {sum(p)}, pair expects {pair.source_size}")
    if pair.is_metaplectic:
        return md_BV(p)
    return d_SP(d_LS(p, pair.source_family), pair.source_family)


def md_LS(p: Partition) -> Partition:
    _require_type(p, Family.C)
    return collapse(transpose(p), Family.D)


def md_SP(p: Partition) -> Partition:
    _require_special(p, Family.D)
    return collapse(shrink(grow(p)), Family.C)


def md_BV(p: Partition) -> Partition:
    """Metaplectic Barbasch-Vogan dual of a type-C orbit.

    >>> str(md_BV(Partition([4])))
    '2,1,1'
    """
    return md_SP(md_LS(p))


def theta_lift_orbit(p: Partition, a: int) -> Partition:
    """Orbit of the stable-range lift of ``p`` in Nil(sp_2n) to o_{2n+2a+1}.

    The lifted diagram has a first column of length ``2a + 1`` and ``p``
    left over once that column is removed.
    """
    _require_type(p, Family.C)
    n = sum(p) // 2
    if a < n:
        raise StableRangeViolated(f"need a >= n, got a={a}, n={n}")
    lifted = prepend_column(p, 2 * a + 1)
    if not is_type(lifted, Family.B):
        raise LiftNotTypeB(f"lift {lifted} of {p} is not of type B")
    return lifted
