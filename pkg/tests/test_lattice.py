from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverlat.lattice import (
    PathCapExceeded,
    PathModel,
    RaneyParams,
    closed_form_sequence,
    count_paths,
    enumerate_paths,
    family_path_model,
    family_raney,
    path_count_sequence,
    raney,
    torus_path_model,
)
from quiverlat.tables import PUBLISHED, TABULATED_FRAMINGS
from oracles import lattice_paths_brute


def model(x, y, num, den, **kw):
    return PathModel(x, y, num, den, **kw)


def test_count_examples():
    assert count_paths(model(2, 1, 1, 2)) == 1
    assert count_paths(model(4, 2, 1, 2)) == 3
    assert count_paths(model(3, 2, 2, 3)) == 2
    assert count_paths(model(3, 2, 2, 3, steps="END")) == 6


def test_empty_step_set():
    assert count_paths(model(1, 0, 1, 1, steps="")) == 0
    assert count_paths(model(0, 0, 1, 1, steps="")) == 1


def test_enumerate_examples():
    assert enumerate_paths(model(2, 1, 1, 2)) == ["EEN"]
    assert enumerate_paths(model(1, 1, 1, 1)) == ["EN"]
    assert enumerate_paths(model(0, 0, 1, 1)) == [""]


def test_enumerate_cap():
    with pytest.raises(PathCapExceeded):
        enumerate_paths(model(6, 6, 1, 0), cap=10)


def test_invalid_models():
    with pytest.raises(ValueError):
        model(-1, 0, 1, 1)
    with pytest.raises(ValueError):
        model(1, 1, 1, 1, steps="EX")


def test_raney_examples():
    assert raney(2, 1, 3) == 5
    assert raney(5, 3, 2) == 18
    assert raney(1, 3, 2) == 6
    assert RaneyParams(2, 1, 4).value() == 14
    with pytest.raises(ValueError):
        RaneyParams(0, 1, 1)
    with pytest.raises(ValueError):
        raney(0, 0, 0)


@st.composite
def small_models(draw):
    x = draw(st.integers(0, 7))
    y = draw(st.integers(0, 12 - x))
    return PathModel(
        x,
        y,
        draw(st.integers(0, 4)),
        draw(st.integers(0, 4)),
        draw(st.integers(-2, 2)),
        draw(st.booleans()),
        draw(st.sampled_from(["EN", "END", "E", "N", "ND"])),
    )


@settings(max_examples=250, deadline=None)
@given(small_models())
def test_dp_matches_enumeration(m):
    assert count_paths(m) == len(enumerate_paths(m))


@settings(max_examples=60, deadline=None)
@given(small_models().filter(lambda m: m.x + m.y <= 9 and m.x0 == 0))
def test_dp_matches_word_brute_force(m):
    if not m.allowed(0, 0):
        return
    assert count_paths(m) == lattice_paths_brute(m.x, m.y, m.s_num, m.s_den, m.strict, m.steps)


@settings(max_examples=100, deadline=None)
@given(small_models())
def test_strict_at_most_weak(m):
    weak = PathModel(m.x, m.y, m.s_num, m.s_den, m.x0, False, m.steps)
    strict = PathModel(m.x, m.y, m.s_num, m.s_den, m.x0, True, m.steps)
    assert count_paths(strict) <= count_paths(weak)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("s", range(5))
def test_raney_path_identity(m, s):
    for k in range(6):
        assert count_paths(model(m * k + s, k, 1, m)) == raney(m + 1, s + 1, k)


def test_catalan_cross_check():
    for k in range(11):
        assert raney(2, 1, k) == count_paths(model(k, k, 1, 1))


def test_family_model_examples():
    m = family_path_model("neg-twist", -2, 0, 3)
    assert (m.x, m.y, m.s_num, m.s_den) == (14, 3, 1, 4)
    m = family_path_model("pos-twist", 2, 1, 2)
    assert (m.x, m.y, m.s_num, m.s_den) == (11, 2, 1, 4)
    m = family_path_model("double-twist-3", 1, 0, 2)
    assert (m.x, m.y, m.s_num, m.s_den) == (17, 2, 1, 7)


def test_unconstrained_model_for_6_1_f4():
    m = family_path_model("neg-twist", -2, 4, 3)
    assert m.s_den == 0 and count_paths(m) == 10


def test_untabulated_family_model():
    with pytest.raises(ValueError):
        family_path_model("neg-twist", -1, 2, 1)
    assert closed_form_sequence("neg-twist", -4, 0, 3) is None


@pytest.mark.parametrize("key", sorted(TABULATED_FRAMINGS))
def test_family_models_match_closed_forms(key):
    family, p = key
    for f in TABULATED_FRAMINGS[key]:
        for k in range(6):
            assert count_paths(family_path_model(family, p, f, k)) == family_raney(family, p, f, k)


@pytest.mark.parametrize("key", sorted(PUBLISHED))
def test_closed_forms_match_published_rows(key):
    family, p = key
    for f, row in PUBLISHED[key].items():
        assert tuple(closed_form_sequence(family, p, f, 4)) == row
        assert tuple(path_count_sequence(family, p, f, 4)) == row


def test_torus_examples():
    assert count_paths(torus_path_model(1, 1)) == 2
    assert count_paths(torus_path_model(1, 1, True)) == 6
    assert count_paths(torus_path_model(1, 0)) == 1
    assert len(enumerate_paths(torus_path_model(1, 1, True))) == 6


# the two conventions only differ once the path can touch the line inside
TORUS_WEAK_STRICT = {
    (1, 2, False): (23, 19),
    (1, 2, True): (170, 134),
    (2, 2, False): (76, 67),
    (2, 2, True): (730, 630),
    (3, 2, False): (178, 162),
    (3, 2, True): (1946, 1750),
}


@pytest.mark.parametrize("key,expect", sorted(TORUS_WEAK_STRICT.items()))
def test_torus_touching_conventions(key, expect):
    p, k, diag = key
    got = tuple(count_paths(torus_path_model(p, k, diag, strict=s)) for s in (False, True))
    assert got == expect


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("k", [0, 1, 2])
@pytest.mark.parametrize("diag", [False, True])
def test_torus_dp_vs_enumeration(p, k, diag):
    for strict in (False, True):
        m = torus_path_model(p, k, diag, strict=strict)
        assert count_paths(m) == len(enumerate_paths(m))
