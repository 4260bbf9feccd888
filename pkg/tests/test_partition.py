import pytest
from hypothesis import given, settings, strategies as st

import brute
from nilduality.errors import BoundExceeded, ColumnTooShort, EmptyDiagram, RowTooShort, SizeMismatch
from nilduality.partition import (
    Partition,
    dominance_leq,
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

P = Partition

partitions = st.lists(st.integers(1, 8), max_size=8).map(lambda xs: P(sorted(xs, reverse=True)))


def test_constructor_validates():
    with pytest.raises(ValueError):
        P([1, 2])
    with pytest.raises(ValueError):
        P([2, 0])
    assert P([3, 1]).size == 4 and P([3, 1]).c1 == 2 and P([3, 1]).r1 == 3
    assert P().r1 == 0 and P().c1 == 0


@pytest.mark.parametrize("text, parts", [("3,1", (3, 1)), ("-", ()), ("", ()), (" 2,2 ", (2, 2))])
def test_parse_and_format(text, parts):
    p = Partition.parse(text)
    assert tuple(p) == parts
    assert Partition.parse(str(p)) == p


def test_parse_rejects_garbage():
    for bad in ["a", "1,,2", "1,3", "0"]:
        with pytest.raises(ValueError):
            Partition.parse(bad)


@pytest.mark.parametrize("p, expected", [((), ()), ((4,), (1, 1, 1, 1)), ((3, 1), (2, 1, 1))])
def test_transpose_examples(p, expected):
    assert transpose(P(p)) == P(expected)


@pytest.mark.parametrize("p, expected", [((3, 1), (4, 1)), ((), (1,)), ((2, 2), (3, 2))])
def test_grow(p, expected):
    assert grow(P(p)) == P(expected)


@pytest.mark.parametrize("p, expected", [((3, 1), (3,)), ((1,), ()), ((2, 2), (2, 1))])
def test_shrink(p, expected):
    assert shrink(P(p)) == P(expected)


def test_shrink_empty():
    with pytest.raises(EmptyDiagram):
        shrink(P())


@pytest.mark.parametrize("p, expected", [((3, 1), (2,)), ((1, 1), ()), ((3, 3, 1, 1, 1), (2, 2))])
def test_strip_first_column(p, expected):
    assert strip_first_column(P(p)) == P(expected)


@pytest.mark.parametrize("p, expected", [((3, 1), (1,)), ((4,), ()), ((4, 2, 2), (2, 2))])
def test_strip_first_row(p, expected):
    assert strip_first_row(P(p)) == P(expected)


def test_prepend_row():
    assert prepend_row(P([2, 2]), 4) == P([4, 2, 2])
    assert prepend_row(P(), 4) == P([4])
    with pytest.raises(RowTooShort):
        prepend_row(P([3, 1]), 2)


def test_prepend_column():
    assert prepend_column(P([2]), 3) == P([3, 1, 1])
    assert prepend_column(P([2, 2]), 5) == P([3, 3, 1, 1, 1])
    with pytest.raises(ColumnTooShort):
        prepend_column(P([1, 1, 1]), 2)


@pytest.mark.parametrize("p, q, expected", [((2, 2), (3, 1), True), ((3, 1), (2, 2), False), ((4,), (4,), True)])
def test_dominance_examples(p, q, expected):
    assert dominance_leq(P(p), P(q)) is expected


def test_dominance_size_mismatch():
    with pytest.raises(SizeMismatch):
        dominance_leq(P([2]), P([2, 1]))


def test_enumeration_examples():
    assert enumerate_partitions(0) == [P()]
    assert enumerate_partitions(4) == [P([4]), P([3, 1]), P([2, 2]), P([2, 1, 1]), P([1, 1, 1, 1])]
    assert len(enumerate_partitions(8)) == 22
    with pytest.raises(BoundExceeded):
        enumerate_partitions(41)


@pytest.mark.parametrize("n", range(0, 21))
def test_enumeration_matches_oracles(n):
    parts = enumerate_partitions(n)
    assert len(parts) == brute.partition_count(n)
    assert sorted(parts, reverse=True) == parts
    assert set(parts) == set(brute.all_partitions(n)) if n <= 14 else len(set(parts)) == len(parts)


@given(partitions)
def test_transpose_matches_box_oracle(p):
    assert tuple(transpose(p)) == brute.transpose_boxes(p)


def test_transpose_involution_exhaustive():
    for n in range(21):
        for p in enumerate_partitions(n):
            assert transpose(transpose(p)) == p


@given(partitions)
def test_grow_shrink(p):
    # grow touches the first row and shrink the last, so they only cancel on at most one row
    assert (shrink(grow(p)) == p) == (len(p) <= 1)
    assert shrink(grow(p)).size == p.size
    assert grow(p).size == p.size + 1


def test_grow_after_shrink_exhaustive():
    # boxes leave the last row and return to the first, so only single rows come back
    for n in range(1, 13):
        for p in enumerate_partitions(n):
            assert (grow(shrink(p)) == p) == (len(p) == 1)


@given(partitions, st.integers(0, 12))
def test_prepend_strip_roundtrip(p, extra):
    assert strip_first_column(prepend_column(p, p.c1 + extra + 1)) == p
    assert strip_first_row(prepend_row(p, p.r1 + extra + 1)) == p
    assert strip_first_column(p) == transpose(strip_first_row(transpose(p)))
    assert strip_first_column(p).size == p.size - p.c1


@pytest.mark.parametrize("n", range(0, 15))
def test_dominance_is_partial_order(n):
    parts = enumerate_partitions(n)
    leq = dominance_matrix(parts)
    k = len(parts)
    for i in range(k):
        for j in range(k):
            assert leq[i, j] == dominance_leq(parts[i], parts[j]) == brute.leq(parts[i], parts[j])
    assert leq.diagonal().all()
    assert not (leq & leq.T & ~__import__("numpy").eye(k, dtype=bool)).any()
    closure = (leq.astype(int) @ leq.astype(int)) > 0
    assert (closure <= leq).all()


@pytest.mark.parametrize("n", range(0, 15))
def test_transpose_reverses_dominance(n):
    parts = enumerate_partitions(n)
    for p in parts:
        for q in parts:
            assert dominance_leq(p, q) == dominance_leq(transpose(q), transpose(p))
