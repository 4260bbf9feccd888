import pytest

import brute
from nilduality.errors import NotAnOrbit, ParityMismatch, SizeMismatch, UnsupportedFamily
from nilduality.orbits import (
    Family,
    OrbitFilter,
    enumerate_orbits,
    hasse_edges,
    is_metaplectic_special,
    is_special,
    is_type,
)
from nilduality.partition import Partition as P, dominance_leq, enumerate_partitions, transpose

A, B, C, D = Family.A, Family.B, Family.C, Family.D


@pytest.mark.parametrize("p, f, expected", [((2, 2), C, True), ((3, 1), C, False), ((3, 1, 1), B, True),
                                            ((2, 1), B, False), ((3, 1), B, False), ((5,), A, True)])
def test_is_type(p, f, expected):
    assert is_type(P(p), f) is expected


def test_is_type_matches_oracle():
    for n in range(17):
        for p in enumerate_partitions(n):
            for f in "ABCD":
                assert is_type(p, f) == brute.is_type(p, f)


@pytest.mark.parametrize("p, f, expected", [((2, 2), C, True), ((2, 1, 1), C, False), ((3, 2, 2, 1), D, False)])
def test_is_special(p, f, expected):
    assert is_special(P(p), f) is expected


def test_is_special_errors_and_type_a():
    with pytest.raises(NotAnOrbit):
        is_special(P([3, 1]), C)
    assert is_special(P([3, 1]), A)


@pytest.mark.parametrize("p, expected", [((2, 1, 1), True), ((1, 1, 1, 1), False), ((4,), True)])
def test_is_metaplectic_special(p, expected):
    assert is_metaplectic_special(P(p)) is expected


def test_metaplectic_special_needs_type_c():
    with pytest.raises(NotAnOrbit):
        is_metaplectic_special(P([3, 1]))


def test_empty_is_orbit_of_every_even_family():
    for f in (A, C, D):
        assert enumerate_orbits(f, 0) == [P()]
        assert is_special(P(), f)
    assert is_metaplectic_special(P())


def test_enumerate_orbits_size_four():
    assert enumerate_orbits(C, 4) == [P([4]), P([2, 2]), P([2, 1, 1]), P([1, 1, 1, 1])]
    assert enumerate_orbits(C, 4, "metaplectic_special") == [P([4]), P([2, 2]), P([2, 1, 1])]
    assert enumerate_orbits(C, 4, OrbitFilter.SPECIAL) == [P([4]), P([2, 2]), P([1, 1, 1, 1])]
    assert len(enumerate_orbits(D, 4, OrbitFilter.SPECIAL)) == 3


def test_enumerate_orbits_errors():
    with pytest.raises(ParityMismatch):
        enumerate_orbits(C, 5)
    with pytest.raises(ParityMismatch):
        enumerate_orbits(B, 4)
    with pytest.raises(UnsupportedFamily):
        enumerate_orbits(D, 4, OrbitFilter.METAPLECTIC_SPECIAL)


def test_filter_aliases():
    assert OrbitFilter.parse("sp") is OrbitFilter.SPECIAL
    assert OrbitFilter.parse("ms") is OrbitFilter.METAPLECTIC_SPECIAL
    assert OrbitFilter.parse("all") is OrbitFilter.ALL


def test_special_subset_and_ms_incomparable():
    for size in range(17):
        for f in ((B,) if size % 2 else (C, D)):
            assert set(enumerate_orbits(f, size, "special")) <= set(enumerate_orbits(f, size))
    sp, ms = set(enumerate_orbits(C, 4, "special")), set(enumerate_orbits(C, 4, "metaplectic_special"))
    assert P([2, 1, 1]) in ms - sp
    assert P([1, 1, 1, 1]) in sp - ms


def test_hasse_examples():
    chain = [P([4]), P([2, 2]), P([2, 1, 1]), P([1, 1, 1, 1])]
    assert set(hasse_edges(chain)) == {
        (P([1, 1, 1, 1]), P([2, 1, 1])), (P([2, 1, 1]), P([2, 2])), (P([2, 2]), P([4]))}
    assert hasse_edges([P([4])]) == []
    assert hasse_edges([]) == []
    with pytest.raises(SizeMismatch):
        hasse_edges([P([2]), P([3])])


@pytest.mark.parametrize("f, size", [(C, 10), (D, 10), (B, 9), (A, 8), (C, 12)])
def test_hasse_closure_is_dominance(f, size):
    nodes = enumerate_orbits(f, size)
    edges = hasse_edges(nodes)
    up = {p: {q for a, q in edges if a == p} for p in nodes}
    # transitive closure by DFS; acyclic means no node reaches itself
    for p in nodes:
        seen, stack = set(), list(up[p])
        while stack:
            q = stack.pop()
            if q not in seen:
                seen.add(q)
                stack.extend(up[q])
        assert p not in seen
        assert seen == {q for q in nodes if q != p and dominance_leq(p, q)}
