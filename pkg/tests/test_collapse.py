import pytest
from hypothesis import given, strategies as st

import brute
from nilduality.collapses import collapse, collapse_oracle
from nilduality.errors import BoundExceeded, ParityMismatch, UnsupportedFamily
from nilduality.orbits import Family, is_type
from nilduality.partition import Partition as P, dominance_leq, enumerate_partitions

B, C, D = Family.B, Family.C, Family.D


@pytest.mark.parametrize("p, f, expected", [((3, 1), C, (2, 2)), ((4, 1), B, (3, 1, 1)),
                                            ((3, 1), D, (3, 1)), ((4,), D, (3, 1))])
def test_collapse_examples(p, f, expected):
    assert collapse(P(p), f) == P(expected)


@pytest.mark.parametrize("p, f, expected", [((3, 1), C, (2, 2)), ((2, 2, 1), B, (2, 2, 1)), ((4,), D, (3, 1))])
def test_oracle_examples(p, f, expected):
    assert collapse_oracle(P(p), f) == P(expected)


def test_errors():
    with pytest.raises(ParityMismatch):
        collapse(P([3]), C)
    with pytest.raises(ParityMismatch):
        collapse(P([2]), B)
    with pytest.raises(UnsupportedFamily):
        collapse(P([2]), Family.A)
    with pytest.raises(BoundExceeded):
        collapse_oracle(P([20]), C)


def _admissible(size):
    return (B,) if size % 2 else (C, D)


def test_oracle_matches_independent_brute_force():
    for size in range(11):
        for p in enumerate_partitions(size):
            for f in _admissible(size):
                assert tuple(collapse_oracle(p, f)) == brute.collapse(p, f.value)


@pytest.mark.parametrize("size", range(17))
def test_constructive_equals_oracle(size):
    for p in enumerate_partitions(size):
        for f in _admissible(size):
            c = collapse(p, f)
            assert c == collapse_oracle(p, f)
            assert is_type(c, f) and dominance_leq(c, p) and c.size == p.size
            assert collapse(c, f) == c
            assert (c == p) == is_type(p, f)


@pytest.mark.parametrize("size", range(15))
def test_monotone(size):
    parts = enumerate_partitions(size)
    for f in _admissible(size):
        for p in parts:
            for q in parts:
                if dominance_leq(p, q):
                    assert dominance_leq(collapse(p, f), collapse(q, f))


@given(st.lists(st.integers(1, 9), min_size=1, max_size=12))
def test_collapse_is_typed_and_below(xs):
    p = P(sorted(xs, reverse=True))
    for f in _admissible(p.size):
        c = collapse(p, f)
        assert is_type(c, f) and dominance_leq(c, p)
