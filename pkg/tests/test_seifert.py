from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusfill.seifert import (
    ExceptionalFiber,
    OrientedPartition,
    enumerate_oriented_partitions,
    fiber_flippable,
    flip_moves,
    isotopy_classes,
    normalize_b,
)

LABELS = ("f_i", "f_new", "f_o")


def P(side1, side2):
    return OrientedPartition(frozenset(side1), frozenset(side2))


@pytest.mark.parametrize("a,b,expected", [(62, 63, True), (121, 61, False), (2, 1, True), (-7, 6, True), (5, 2, False)])
def test_fiber_flippable(a, b, expected):
    assert fiber_flippable(ExceptionalFiber(a, b)) is expected


def test_fiber_rejects_small_multiplicity():
    with pytest.raises(ValueError):
        ExceptionalFiber(1, 0)


def test_normalize_b():
    assert normalize_b(62, 63) == 1
    assert normalize_b(121, 61) == 61
    assert normalize_b(9, 0) == 0
    assert normalize_b(-5, 7) == 2
    with pytest.raises(ValueError):
        normalize_b(0, 3)


@given(st.integers(2, 500) | st.integers(-500, -2), st.integers(-10**6, 10**6), st.integers(-5, 5))
def test_b_residue_is_longitude_independent(a, b, k):
    assert normalize_b(a, b + k * a) == normalize_b(a, b)


def test_enumerate_partitions():
    parts = enumerate_oriented_partitions(LABELS)
    assert len(parts) == 6
    assert P({"f_i"}, {"f_new", "f_o"}) in parts and P({"f_new", "f_o"}, {"f_i"}) in parts
    assert len(enumerate_oriented_partitions(["x", "y"])) == 2
    assert enumerate_oriented_partitions(reversed(LABELS)) == parts


def test_partition_rejects_empty_side():
    with pytest.raises(ValueError):
        P(set(LABELS), set())


def test_partition_text():
    assert str(P({"f_i", "f_new"}, {"f_o"})) == "{f_i,f_new || f_o}"


def test_flip_moves_examples():
    only_new = {"f_new": True}
    assert flip_moves(P({"f_i", "f_new"}, {"f_o"}), only_new) == [P({"f_i"}, {"f_new", "f_o"})]
    assert flip_moves(P({"f_new"}, {"f_i", "f_o"}), only_new) == []
    for p in enumerate_oriented_partitions(LABELS):
        assert flip_moves(p, {}) == []


@pytest.mark.parametrize("flags", list(product([False, True], repeat=3)))
def test_flip_moves_symmetric(flags):
    flippable = dict(zip(LABELS, flags))
    parts = enumerate_oriented_partitions(LABELS)
    for p in parts:
        for q in flip_moves(p, flippable):
            assert p in flip_moves(q, flippable)


def test_isotopy_class_counts():
    assert len(isotopy_classes(LABELS, {})) == 6
    assert len(isotopy_classes(LABELS, dict.fromkeys(LABELS, True))) == 1
    classes = isotopy_classes(LABELS, {"f_new": True})
    assert len(classes) == 4
    merged = classes.orbit_of(P({"f_i", "f_new"}, {"f_o"}))
    assert merged == {P({"f_i", "f_new"}, {"f_o"}), P({"f_i"}, {"f_new", "f_o"})}


@pytest.mark.parametrize("flags", list(product([False, True], repeat=3)))
def test_orbits_partition_and_reversal(flags):
    flippable = dict(zip(LABELS, flags))
    classes = isotopy_classes(LABELS, flippable)
    parts = enumerate_oriented_partitions(LABELS)
    flat = [p for orbit in classes.orbits for p in orbit]
    assert sorted(flat, key=OrientedPartition.key) == parts
    for orbit in classes.orbits:
        rev = frozenset(p.reversed() for p in orbit)
        assert rev in classes.orbits
        assert (rev == orbit) == classes.flips(orbit)
        assert classes.representative(orbit) == min(orbit, key=OrientedPartition.key)
