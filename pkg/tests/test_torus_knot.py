import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusfill.lens import normal_form
from torusfill.seifert import fiber_flippable
from torusfill.slope import INFINITY, Slope, delta, delta_signed, normalize, on_line_of_lines
from torusfill.torus_knot import (
    FilledManifold,
    TorusKnot,
    admissibility,
    bridge_number,
    fiber_slope,
    horizontal_genus,
    horizontal_strongly_irreducible,
    longitude,
    moser_a,
    moser_classify,
    require_admissible,
    InadmissibleKnot,
)

from conftest import slopes_in_box

K97 = TorusKnot(9, 7)


def test_knot_normalizes_and_validates():
    assert TorusKnot(7, 9) == K97
    for bad in [(4, 2), (1, 5), (3, 3), (6, 0)]:
        with pytest.raises(ValueError):
            TorusKnot(*bad)


def test_admissibility_examples():
    assert not admissibility(TorusKnot(3, 2)).condition1
    a = admissibility(K97)
    assert a.condition1 and a.condition2
    assert not admissibility(TorusKnot(8, 5)).condition2
    with pytest.raises(InadmissibleKnot, match=r"condition \(1\)"):
        require_admissible(TorusKnot(3, 2))
    assert require_admissible(TorusKnot(3, 2), force=True).condition1 is False


def test_fiber_slope_and_a():
    assert fiber_slope(K97) == Slope(63, 1)
    assert fiber_slope(TorusKnot(3, 2)) == Slope(6, 1)
    assert moser_a(K97, Slope(63, 1)) == 0
    assert moser_a(K97, INFINITY) == -1
    assert moser_a(K97, Slope(5, 2)) == 121


@pytest.mark.parametrize("alpha,expected", [((5, 2), (2, 1)), ((1, 1), (0, 1)), ((1, 0), (0, 1)), ((63, 1), (62, 1)), ((-3, 7), (-1, 2))])
def test_longitude_examples(alpha, expected):
    assert longitude(Slope(*alpha)) == Slope(*expected)


@given(st.integers(-300, 300), st.integers(0, 300))
def test_longitude_contract(r, s):
    if (r, s) == (0, 0):
        return
    alpha = normalize(r, s)
    lon = longitude(alpha)
    assert delta_signed(alpha, lon) == 1
    if alpha.s > 0:
        assert 0 < lon.s <= alpha.s


def test_moser_examples():
    assert moser_classify(TorusKnot(3, 2), Slope(5, 1)).lens == normal_form(5, 4)
    s3 = moser_classify(K97, INFINITY)
    assert s3.type == "S3" and s3.lens.p == 1
    cs = moser_classify(K97, Slope(63, 1))
    assert cs.type == "ConnSum" and cs.summands == (normal_form(9, 7), normal_form(7, 9))
    sfs = moser_classify(K97, Slope(1, 1))
    assert sfs.type == "SFS"
    assert [(f.a, f.b) for f in sfs.fibers] == [(9, 7), (7, 9), (62, 63)]
    assert sfs.b_normalized == 1
    assert str(moser_classify(K97, Slope(64, 1))) == "L(64,49)"


def test_manifold_json_shape_and_roundtrip():
    m = moser_classify(K97, Slope(1, 1))
    d = json.loads(m.to_json())
    assert d["type"] == "SFS" and d["fibers"] == [[9, 7], [7, 9], [62, 63]]
    assert d["a"] == 62 and d["b_normalized"] == 1
    for alpha in slopes_in_box(70, 3):
        m = moser_classify(K97, alpha)
        assert FilledManifold.from_json(m.to_json()) == m


def test_horizontal_genus():
    assert horizontal_genus(K97) == 96
    assert horizontal_genus(TorusKnot(3, 2)) == 4
    for q in range(2, 12):
        assert horizontal_genus(TorusKnot(q + 1, q)) == 2 * q * (q - 1)


def test_horizontal_strong_irreducibility():
    assert horizontal_strongly_irreducible(K97, Slope(1, 2))
    assert not horizontal_strongly_irreducible(K97, Slope(1, 1))
    assert not horizontal_strongly_irreducible(K97, INFINITY)
    assert horizontal_strongly_irreducible(K97, Slope(-1, 1))
    with pytest.raises(ValueError):
        horizontal_strongly_irreducible(K97, Slope(2, 1))


def test_bridge_number():
    assert bridge_number(K97) == 7
    assert bridge_number(TorusKnot(3, 2)) == 2
    assert bridge_number(TorusKnot(12, 11)) == 11


@pytest.mark.parametrize("K", [K97, TorusKnot(11, 7), TorusKnot(13, 9)])
def test_a_values_and_case_totality(K):
    fib = fiber_slope(K)
    for alpha in slopes_in_box(60, 25):
        a = moser_a(K, alpha)
        assert (a == 0) == (alpha == fib)
        assert (abs(a) == 1) == (delta(alpha, fib) == 1)
        m = moser_classify(K, alpha)
        if a == 0:
            assert m.type == "ConnSum"
        elif abs(a) == 1:
            assert m.type in ("S3", "Lens")
            assert (m.type == "S3") == (alpha == INFINITY)
        else:
            assert m.type == "SFS"


@pytest.mark.parametrize("K", [K97, TorusKnot(11, 7)])
def test_b_longitude_independence_and_ll_consistency(K):
    fib = fiber_slope(K)
    for alpha in slopes_in_box(40, 12):
        m = moser_classify(K, alpha)
        if abs(m.a) < 2:
            continue
        lon = m.longitude
        for k in range(-3, 4):
            t, u = lon.r + k * alpha.r, lon.s + k * alpha.s
            b_k = K.p * K.q * u - t
            assert b_k == m.b_raw + k * m.a
            assert b_k % abs(m.a) == m.b_normalized
        f_new = m.fibers[2]
        s_pm1 = alpha.s % abs(m.a) in (1, abs(m.a) - 1)
        assert fiber_flippable(f_new) == s_pm1 == on_line_of_lines(fib, alpha)
