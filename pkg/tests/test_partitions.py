"""Partition combinatorics against brute-force oracles."""

import itertools
from math import factorial

import pytest
from hypothesis import given

from jackinf.partitions import (
    Partition,
    add_box,
    addable_rows,
    append_one,
    c_of,
    conjugate,
    dominance_leq,
    enumerate_partitions,
    format_partition,
    parse_partition,
    partitions_upto,
    refinement_count,
    remove_box,
    removable_rows,
    z_of,
)

from conftest import partitions

# number of partitions of n, n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def brute_refinements(lam, mu) -> int:
    """Count maps theta from parts of mu to rows of lam with the right row sums."""
    lam, mu = tuple(lam), tuple(mu)
    if not lam:
        return int(not mu)
    count = 0
    for theta in itertools.product(range(len(lam)), repeat=len(mu)):
        sums = [0] * len(lam)
        for j, row in enumerate(theta):
            sums[row] += mu[j]
        count += sums == list(lam)
    return count


def brute_conjugate(lam):
    return Partition(sum(1 for v in lam if v >= j) for j in range(1, (lam[0] if lam else 0) + 1))


def test_partition_normalizes():
    assert Partition([1, 0, 3, 1]) == (3, 1, 1)
    lam = Partition([3, 1, 1])
    assert lam.size == 5 and lam.length == 3
    assert lam.part(1) == 3 and lam.part(4) == 0
    assert str(Partition()) == "-"


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


def test_dominance_examples():
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1, 1, 1), (2, 2, 2))
    assert not dominance_leq((2, 2, 2), (3, 1, 1, 1))
    assert dominance_leq((4, 2), (4, 2))
    assert not dominance_leq((1,), (2,))


def test_statistics():
    assert z_of(()) == 1
    assert z_of((2, 1)) == 2
    assert z_of((1, 1)) == 2
    assert c_of((1, 1)) == 2
    assert c_of((2, 1)) == 1
    assert c_of((2, 2, 1, 1, 1)) == 12


def test_refinement_examples():
    assert refinement_count((2,), (1, 1)) == 1
    assert refinement_count((1, 1), (1, 1)) == 2
    for n in range(1, 7):
        assert refinement_count((n,), (n,)) == 1
    assert refinement_count((2,), (1,)) == 0


def test_enumeration():
    assert enumerate_partitions(4, 2) == [(3, 1), (2, 2)]
    assert enumerate_partitions(0) == [()]
    assert len(enumerate_partitions(5)) == 7
    for n, count in enumerate(PARTITION_COUNTS):
        parts = enumerate_partitions(n)
        assert len(parts) == count
        assert parts == sorted(parts, reverse=True)
        assert len(set(parts)) == count


def test_append_one():
    assert append_one((2, 1)) == (2, 1, 1)
    assert append_one(()) == (1,)
    assert append_one((1, 1)) == (1, 1, 1)


def test_text_format():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("-") == ()
    assert format_partition((3, 1, 1)) == "3,1,1"
    assert format_partition(()) == "-"
    for bad in ["1,2", "a", "2,0", "-1"]:
        with pytest.raises(ValueError):
            parse_partition(bad)


def test_box_moves():
    assert addable_rows((2, 1)) == [1, 2, 3]
    assert removable_rows((2, 2, 1)) == [2, 3]
    assert add_box((1,), 2) == (1, 1)
    assert remove_box((2, 1), 1) == (1, 1)
    with pytest.raises(ValueError):
        add_box((1, 1), 2)
    with pytest.raises(ValueError):
        remove_box((2, 2), 1)


def test_conjugate_involution_exhaustive():
    for lam in partitions_upto(10):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam) == brute_conjugate(lam)


def test_dominance_is_partial_order():
    for n in range(9):
        ps = enumerate_partitions(n)
        for x in ps:
            assert dominance_leq(x, x)
            for y in ps:
                if x != y and dominance_leq(x, y):
                    assert not dominance_leq(y, x)
                for z in ps:
                    if dominance_leq(x, y) and dominance_leq(y, z):
                        assert dominance_leq(x, z)


def test_reverse_lex_extends_dominance():
    for n in range(9):
        ps = enumerate_partitions(n)
        for i, x in enumerate(ps):
            for y in ps[:i]:
                assert not dominance_leq(y, x) or y == x


def test_refinements_against_brute_force():
    for n in range(8):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                r = refinement_count(lam, mu)
                assert r == brute_refinements(lam, mu)
                if r:
                    assert dominance_leq(mu, lam)


def test_refinement_support_up_to_weight_8():
    for lam in enumerate_partitions(8):
        for mu in enumerate_partitions(8):
            if refinement_count(lam, mu):
                assert dominance_leq(mu, lam)


@given(partitions(10))
def test_z_and_c(lam):
    mult = lam.multiplicities()
    z = 1
    c = 1
    for part, k in mult.items():
        z *= part ** k * factorial(k)
        c *= factorial(k)
    assert z_of(lam) == z
    assert c_of(lam) == c
    assert refinement_count(lam, lam) == c


@given(partitions(10))
def test_box_moves_round_trip(lam):
    for i in addable_rows(lam):
        assert remove_box(add_box(lam, i), i) == lam
    for i in removable_rows(lam):
        assert add_box(remove_box(lam, i), i) == lam
    assert parse_partition(format_partition(lam)) == lam
