"""
Exhaustive finite-range checks of the combinatorial statements about the
duality maps.

Each check is split into independent work units (one per rank ``n``, or per
``(n, a)`` pair for the checks that involve a stable-range parameter
``n <= a <= n + a_offset``). Units can run in a process pool; results are
merged in unit order, so the report does not depend on ``jobs``.

    >>> run_check("C14", max_n=3).failures
    0
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from . import characters, collapses, duality
from .errors import BoundExceeded, UnknownCheck
from .orbits import Family, OrbitFilter, enumerate_orbits, is_metaplectic_special, is_special, is_type
from .partition import (
    MAX_ENUMERATION_SIZE,
    Partition,
    dominance_matrix,
    enumerate_partitions,
    grow,
    prepend_column,
    prepend_row,
    shrink,
    strip_first_column,
    strip_first_row,
    transpose,
)

__all__ = ["MAX_RANK", "CHECK_IDS", "CheckReport", "run_check", "run_all", "describe"]

MAX_RANK = 10
DEFAULT_A_OFFSET = 3
DEFAULT_WITNESS_LIMIT = 10

ALL, SP, MS = OrbitFilter.ALL, OrbitFilter.SPECIAL, OrbitFilter.METAPLECTIC_SPECIAL
B, C, D = Family.B, Family.C, Family.D


@dataclass
class CheckReport:
    id: str
    params: dict
    instances: int = 0
    failures: int = 0
    witnesses: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "check": self.id,
            "params": dict(self.params),
            "instances": self.instances,
            "failures": self.failures,
            "witnesses": [dict(w) for w in self.witnesses],
        }
        if include_elapsed:
            out["elapsed_ms"] = int(round(self.elapsed * 1000))
        return out


class _Tally:
    """Per-unit accumulator. Witnesses carry the size used for minimal-first ordering."""

    def __init__(self, limit: int):
        self.limit = limit
        self.instances = 0
        self.failures = 0
        self.witnesses: list[tuple[int, dict]] = []

    def fail(self, size: int, reason: str, **inputs) -> None:
        self.failures += 1
        if len(self.witnesses) < self.limit:
            shown = {k: _show(v) for k, v in inputs.items()}
            self.witnesses.append((size, {"input": shown, "reason": reason}))

    def expect(self, ok: bool, size: int, reason: str, **inputs) -> None:
        if not ok:
            self.fail(size, reason, **inputs)

    def result(self):
        return self.instances, self.failures, self.witnesses


def _show(value):
    if isinstance(value, Partition):
        return str(value)
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_show(v) for v in value]
    if isinstance(value, (Family, OrbitFilter)):
        return value.value
    if isinstance(value, characters.InfChar):
        return str(value)
    return value


# -- shared map properties ------------------------------------------------

def _check_map(
    t: _Tally,
    size: int,
    domain: Sequence[Partition],
    images: Sequence[Partition],
    target: Sequence[Partition],
    order: str,
    injective: bool,
    label: str,
) -> None:
    """Image equals ``target`` as a set; optional injectivity; order behaviour on all pairs."""
    target_set = set(target)
    for p, img in zip(domain, images):
        t.expect(img in target_set, size, f"{label} lands outside the target set", p=p, image=img)
    missed = [q for q in target if q not in set(images)]
    if missed:
        t.fail(size, f"{label} is not surjective", size=size, missing=missed)
    if injective:
        for img, count in Counter(images).items():
            if count > 1:
                hits = [p for p, i in zip(domain, images) if i == img]
                t.fail(size, f"{label} is not injective", image=img, preimages=hits)
    if len(domain) < 2:
        return
    src = dominance_matrix(domain)
    dst = dominance_matrix(images)
    # order: p <= q must give f(p) <= f(q) ("preserve") or f(q) <= f(p) ("reverse")
    bad = src & ~(dst if order == "preserve" else dst.T)
    for i, j in zip(*np.nonzero(bad)):
        t.fail(size, f"{label} does not {order} dominance", p=domain[i], q=domain[j],
               image_p=images[i], image_q=images[j])


def _ranks(max_n: int, start: int = 0) -> list[tuple]:
    return [(n,) for n in range(start, max_n + 1)]


def _grid(max_n: int, a_offset: int) -> list[tuple]:
    return [(n, a) for n in range(max_n + 1) for a in range(n, n + a_offset + 1)]


def _enlarge(q: Partition, a: int) -> Partition:
    # the orbit of sp_{2n+2a} with first row 2a sitting above q; a = 0 only when q is empty
    return prepend_row(q, 2 * a) if a else q


# -- the checks -----------------------------------------------------------

def _c1(unit, limit):
    (n,) = unit
    t = _Tally(limit)
    domain = enumerate_orbits(C, 2 * n)
    images = [duality.md_LS(p) for p in domain]
    t.instances += len(domain)
    _check_map(t, 2 * n, domain, images, enumerate_orbits(D, 2 * n, SP), "reverse", False, "md_LS")
    return t.result()


def _c2(unit, limit):
    (n,) = unit
    t = _Tally(limit)
    domain = enumerate_orbits(D, 2 * n, SP)
    images = [duality.md_SP(p) for p in domain]
    t.instances += len(domain)
    _check_map(t, 2 * n, domain, images, enumerate_orbits(C, 2 * n, MS), "preserve", True, "md_SP")
    return t.result()


def _c3(unit, limit):
    n, a = unit
    t = _Tally(limit)
    size = 2 * n + 2 * a
    top = [o for o in enumerate_orbits(C, size) if o.r1 == 2 * a]
    stripped = [strip_first_row(o) for o in top]
    if sorted(stripped) != sorted(enumerate_orbits(C, 2 * n)):
        t.fail(size, "removing the first row is not a bijection onto Nil(sp_2n)", n=n, a=a)
    for o, rest in zip(top, stripped):
        t.instances += 1
        left = collapses.collapse(transpose(o), C)
        t.expect(left.c1 == 2 * a, size, "C-collapse of the transpose has c1 != 2a", orbit=o, a=a, image=left)
        right = collapses.collapse(transpose(rest), D)
        t.expect(strip_first_column(left) == right, size, "diagram does not commute",
                 orbit=o, a=a, down_then_across=strip_first_column(left), across_then_down=right)
    return t.result()


def _c4(unit, limit):
    n, a = unit
    t = _Tally(limit)
    size = 2 * n + 2 * a
    for d in enumerate_partitions(size):
        t.instances += 1
        collapsed = collapses.collapse(d, C)
        if collapsed.c1 == 2 * a:
            t.expect(d.c1 == 2 * a, size, "c1 of the C-collapse is 2a but c1 of the diagram is not",
                     diagram=d, a=a, collapse=collapsed)
    return t.result()


def _c5(unit, limit):
    (m,) = unit
    t = _Tally(limit)
    size = 2 * m + 1
    for d2 in enumerate_partitions(size):
        rest2 = strip_first_column(d2)
        if not rest2:
            continue
        # the unique d1 of this size with strip_first_column(d1) = shrink(rest2)
        d1 = prepend_column(shrink(rest2), d2.c1 + 1)
        if d1.c1 % 2 == 0:
            continue
        t.instances += 1
        b1, b2 = collapses.collapse(d1, B), collapses.collapse(d2, B)
        t.expect(b1 == b2, size, "B-collapses differ", d1=d1, d2=d2, collapse_d1=b1, collapse_d2=b2)
    return t.result()


def _c6(unit, limit):
    n, a = unit
    t = _Tally(limit)
    size = 2 * n + 2 * a
    for o in enumerate_orbits(C, size):
        if o.c1 != 2 * a:
            continue
        t.instances += 1
        left = collapses.collapse(grow(o), B)
        t.expect(left.c1 == 2 * a + 1, size, "B-collapse of grow has c1 != 2a+1", orbit=o, a=a, image=left)
        right = collapses.collapse(shrink(grow(strip_first_column(o))), C)
        t.expect(strip_first_column(left) == right, size, "diagram does not commute",
                 orbit=o, a=a, down_then_across=strip_first_column(left), across_then_down=right)
    return t.result()


def _c7(unit, limit):
    n, a = unit
    t = _Tally(limit)
    size = 2 * n + 2 * a
    domain = [o for o in enumerate_orbits(C, size, SP) if o.c1 == 2 * a]
    target = [o for o in enumerate_orbits(B, size + 1, SP) if o.c1 == 2 * a + 1]
    images = [duality.d_SP(o, C) for o in domain]
    t.instances += len(domain)
    _check_map(t, size, domain, images, target, "preserve", True, "d_SP restricted to c1 = 2a")
    return t.result()


def _c8(unit, limit):
    n, a = unit
    t = _Tally(limit)
    size = 2 * n + 2 * a
    pair = duality.DualPair.langlands(C, size)
    for q in enumerate_orbits(C, 2 * n):
        t.instances += 1
        big = duality.d_BV(_enlarge(q, a), pair)
        ok = big.c1 == 2 * a + 1 and is_special(big, B)
        t.expect(ok, size, "d_BV misses the special c1 = 2a+1 set", orbit=q, a=a, image=big)
        small = duality.md_BV(q)
        t.expect(strip_first_column(big) == small, size, "diagram does not commute",
                 orbit=q, a=a, down_then_across=strip_first_column(big), across_then_down=small)
    return t.result()


_LANGLANDS_SIZES = ((B, 1), (C, 0), (D, 0))


def _c9(unit, limit):
    (n,) = unit
    t = _Tally(limit)
    for f, shift in _LANGLANDS_SIZES:
        size = 2 * n + shift
        domain = enumerate_orbits(f, size)
        images = [duality.d_LS(p, f) for p in domain]
        t.instances += len(domain)
        _check_map(t, size, domain, images, enumerate_orbits(f, size, SP), "reverse", False, f"d_LS type {f}")
    return t.result()


def _c10(unit, limit):
    (n,) = unit
    t = _Tally(limit)
    for f, shift in _LANGLANDS_SIZES:
        size = 2 * n + shift
        pair = duality.DualPair.langlands(f, size)
        domain = enumerate_orbits(f, size, SP)
        images = [duality.d_SP(p, f) for p in domain]
        target = enumerate_orbits(pair.target_family, pair.target_size, SP)
        t.instances += len(domain)
        _check_map(t, size, domain, images, target, "preserve", True, f"d_SP type {f}")
    return t.result()


def _c11(unit, limit):
    (size,) = unit
    t = _Tally(limit)
    parts = enumerate_partitions(size)
    for f in ((B,) if size % 2 else (C, D)):
        images = []
        for p in parts:
            t.instances += 1
            c = collapses.collapse(p, f)
            images.append(c)
            oracle = collapses.collapse_oracle(p, f)
            t.expect(c == oracle, size, "constructive collapse differs from oracle",
                     partition=p, family=f, collapse=c, oracle=oracle)
            t.expect(collapses.collapse(c, f) == c, size, "collapse is not idempotent", partition=p, family=f)
            t.expect((c == p) == is_type(p, f), size, "fixed points differ from typed partitions",
                     partition=p, family=f)
        src, dst = dominance_matrix(parts), dominance_matrix(images)
        for i, j in zip(*np.nonzero(src & ~dst)):
            t.fail(size, "collapse is not monotone", p=parts[i], q=parts[j], family=f)
    return t.result()


def _c12(unit, limit):
    n, a = unit
    t = _Tally(limit)
    size = 2 * n + 2 * a
    pair = duality.DualPair.langlands(C, size)
    for o in enumerate_orbits(C, 2 * n):
        t.instances += 1
        big = _enlarge(o, a)
        chi = characters.infinitesimal_character(o, n)
        lhs = characters.infinitesimal_character(big, n + a)
        rhs = characters.theta_lift_character(chi, a)
        t.expect(lhs == rhs, size, "character of the enlarged orbit differs from the lifted character",
                 orbit=o, a=a, enlarged=lhs, lifted=rhs)
        all_even = all(r % 2 == 0 for r in o)
        t.expect(characters.is_metaplectic_integral(chi) == all_even, size,
                 "metaplectic integrality disagrees with row parities", orbit=o, character=chi)
        t.expect(not characters.is_metaplectic_integral(lhs) or characters.is_metaplectic_integral(chi),
                 size, "lift created metaplectic integrality", orbit=o, a=a)
        lifted = duality.theta_lift_orbit(duality.md_BV(o), a)
        expected = duality.d_BV(big, pair)
        t.expect(lifted == expected, size, "lifted md_BV orbit differs from d_BV of the enlarged orbit",
                 orbit=o, a=a, lifted=lifted, d_bv=expected)
    return t.result()


def _c13(unit, limit):
    (n,) = unit
    t = _Tally(limit)
    size = 2 * n
    for o in enumerate_orbits(C, size):
        t.instances += 1
        chi, orbit = characters.unipotent_attachment(o)
        t.expect(is_metaplectic_special(orbit), size, "md_BV image is not metaplectic special", orbit=o, image=orbit)
        t.expect(chi.rank == n, size, "attached character has the wrong rank", orbit=o, character=chi)
        pairing = characters.row_pairing(o)
        t.expect(pairing.rows() == o, size, "row pairing does not reconstruct the rows", orbit=o)
        t.expect(sum(pairing.core_columns) == sum(pairing.distinct_even), size, "core size mismatch", orbit=o)
        t.expect(is_type(pairing.core(), C), size, "core is not of type C", orbit=o, core=pairing.core())
        # the character splits into the core character and one GL-block string per pair
        core_rows = Partition(sorted((x for x in pairing.distinct_even if x), reverse=True))
        twice = list(characters.infinitesimal_character(core_rows, core_rows.size // 2).twice)
        for b in pairing.paired:
            block = [h.twice_value for h in characters.rho(b)]
            twice += block + block + ([0] if b % 2 else [])
        t.expect(characters.InfChar.from_twice(twice) == chi, size,
                 "character does not split along the row pairing", orbit=o, character=chi)
    return t.result()


def _c14(unit, limit):
    (n,) = unit
    t = _Tally(limit)
    principal = Partition([2 * n])
    minimal = Partition([2] + [1] * (2 * n - 2))
    zero = Partition([1] * (2 * n))
    t.instances += 2
    got = duality.md_BV(principal)
    t.expect(got == minimal, 2 * n, "principal orbit does not go to the minimal orbit", orbit=principal, image=got)
    got = duality.md_BV(zero)
    t.expect(got == principal, 2 * n, "zero orbit does not go to the principal orbit", orbit=zero, image=got)
    return t.result()


class _Check(NamedTuple):
    description: str
    units: Callable[[int, int], list]
    run: Callable
    max_size: Callable[[int, int], int]
    bound: int


def _grid_size(max_n, a_offset):
    return 2 * max_n + 2 * (max_n + a_offset) + 1


CHECKS: dict[str, _Check] = {
    "C1": _Check("md_LS: well-defined, onto special Nil(o_2n), order reversing",
                 lambda n, k: _ranks(n), _c1, lambda n, k: 2 * n, MAX_ENUMERATION_SIZE),
    "C2": _Check("md_SP: order-preserving bijection onto metaplectic special Nil(sp_2n)",
                 lambda n, k: _ranks(n), _c2, lambda n, k: 2 * n, MAX_ENUMERATION_SIZE),
    "C3": _Check("remove first row / C-collapse of transpose / D-collapse of transpose commute",
                 _grid, _c3, lambda n, k: 4 * n + 2 * k, MAX_ENUMERATION_SIZE),
    "C4": _Check("c1 of C-collapse equal to 2a forces c1 equal to 2a",
                 _grid, _c4, lambda n, k: 4 * n + 2 * k, MAX_ENUMERATION_SIZE),
    "C5": _Check("odd first column and strip(d1) = shrink(strip(d2)) give equal B-collapses",
                 lambda n, k: [(m,) for m in range(2 * n + k + 1)], _c5,
                 lambda n, k: 4 * n + 2 * k + 1, MAX_ENUMERATION_SIZE),
    "C6": _Check("B-collapse of grow / C-collapse of shrink(grow) commute with column removal",
                 _grid, _c6, lambda n, k: 4 * n + 2 * k + 1, MAX_ENUMERATION_SIZE),
    "C7": _Check("d_SP is a bijection between the c1-constrained special sets",
                 _grid, _c7, lambda n, k: 4 * n + 2 * k + 1, MAX_ENUMERATION_SIZE),
    "C8": _Check("column removal after d_BV of the enlarged orbit equals md_BV",
                 _grid, _c8, lambda n, k: 4 * n + 2 * k + 1, MAX_ENUMERATION_SIZE),
    "C9": _Check("d_LS image is the special set and d_LS reverses order (B, C, D)",
                 lambda n, k: _ranks(n), _c9, lambda n, k: 2 * n + 1, MAX_ENUMERATION_SIZE),
    "C10": _Check("d_SP is an order-preserving bijection between Langlands-dual special sets",
                  lambda n, k: _ranks(n), _c10, lambda n, k: 2 * n + 1, MAX_ENUMERATION_SIZE),
    "C11": _Check("collapse equals brute force; idempotent, monotone, fixes typed partitions",
                  lambda n, k: [(s,) for s in range(2 * n + 1)], _c11, lambda n, k: 2 * n, collapses.ORACLE_BOUND),
    "C12": _Check("character of the enlarged orbit is the lifted character; lifted orbit matches d_BV",
                  _grid, _c12, lambda n, k: 4 * n + 2 * k + 1, MAX_ENUMERATION_SIZE),
    "C13": _Check("md_BV lands in metaplectic special orbits; attachment datum and row pairing",
                  lambda n, k: _ranks(n), _c13, lambda n, k: 2 * n, MAX_ENUMERATION_SIZE),
    "C14": _Check("md_BV sends principal to minimal and zero to principal",
                  lambda n, k: _ranks(n, start=1), _c14, lambda n, k: 2 * n, MAX_ENUMERATION_SIZE),
}

CHECK_IDS = tuple(CHECKS)


def describe(check_id: str) -> str:
    return _lookup(check_id).description


def _lookup(check_id: str) -> _Check:
    try:
        return CHECKS[check_id.upper()]
    except KeyError:
        raise UnknownCheck(f"unknown check {check_id!r}; expected one of {', '.join(CHECK_IDS)}") from None


def _execute(args):
    check_id, unit, limit = args
    return CHECKS[check_id].run(unit, limit)


def run_check(
    check_id: str,
    max_n: int,
    max_a_offset: int = DEFAULT_A_OFFSET,
    jobs: int = 1,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> CheckReport:
    """Run one check over ranks ``n <= max_n`` (and ``n <= a <= n + max_a_offset``)."""
    check = _lookup(check_id)
    check_id = check_id.upper()
    if max_n < 1 or max_n > MAX_RANK:
        raise BoundExceeded(f"max_n must lie in 1..{MAX_RANK}, got {max_n}")
    if max_a_offset < 0:
        raise ValueError(f"a offset must be nonnegative, got {max_a_offset}")
    needed = check.max_size(max_n, max_a_offset)
    if needed > check.bound:
        raise BoundExceeded(f"{check_id} with max_n={max_n}, a_offset={max_a_offset} "
                            f"needs size {needed} > bound {check.bound}")
    start = time.perf_counter()
    work = [(check_id, unit, witness_limit) for unit in check.units(max_n, max_a_offset)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_execute, work))
    else:
        results = [_execute(w) for w in work]
    report = CheckReport(check_id, {"max_n": max_n, "a_offset": max_a_offset})
    collected = []
    for instances, failures, witnesses in results:
        report.instances += instances
        report.failures += failures
        collected.extend(witnesses)
    collected.sort(key=lambda w: w[0])
    report.witnesses = [w for _, w in collected[:witness_limit]]
    report.elapsed = time.perf_counter() - start
    return report


def run_all(
    max_n: int,
    max_a_offset: int = DEFAULT_A_OFFSET,
    checks: Sequence[str] | None = None,
    jobs: int = 1,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> list[CheckReport]:
    return [run_check(c, max_n, max_a_offset, jobs, witness_limit) for c in (checks or CHECK_IDS)]
