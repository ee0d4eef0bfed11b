from __future__ import annotations

import warnings
from collections import Counter

import pytest

from curvelrc.gs_tower import (
    enumerate_tower_points,
    gs1_params,
    gs1_t_range,
    gs2_code_l2,
    gs2_params,
    gs2_t_range,
    is_on_tower,
    tower_length,
)
from curvelrc.hermitian import enumerate_points, hermitian_field
from curvelrc.lrc_core import CodeError


@pytest.mark.parametrize("q0,l,count", [(2, 2, 6), (2, 3, 12), (3, 3, 72), (3, 2, 24), (4, 2, 60)])
def test_counts(q0, l, count):
    assert tower_length(q0, l) == count
    assert len(enumerate_tower_points(q0, l)) == count


@pytest.mark.parametrize("q0", [2, 3, 4])
def test_level_one(q0):
    pts = enumerate_tower_points(q0, 1)
    assert len(pts) == q0 * q0 - 1
    assert all(pt.z == () for pt in pts)


@pytest.mark.parametrize("q0,l", [(q0, l) for q0 in (2, 3, 4) for l in (2, 3)])
def test_points_on_tower(q0, l):
    F = hermitian_field(q0)
    pts = enumerate_tower_points(q0, l, F)
    assert len(pts) == tower_length(q0, l)
    assert len(set(pts)) == len(pts)
    assert all(is_on_tower(F, q0, pt) for pt in pts)
    fibers = Counter((pt.x1,) + pt.z[:-1] for pt in pts)
    assert set(fibers.values()) == {q0}


def test_level_two_is_hermitian():
    q0 = 3
    F = hermitian_field(q0)
    tower = {(pt.z[0], pt.x1) for pt in enumerate_tower_points(q0, 2, F)}
    herm = {(x, y) for x, y in enumerate_points(q0).points if y != 0}
    assert tower == herm


def test_cap():
    with pytest.raises(CodeError, match="cap"):
        enumerate_tower_points(5, 9)


def test_gs1_examples():
    assert gs1_params(3, 3, 13).as_tuple() == (72, 4, 15, 2)
    assert gs1_params(4, 2, 5).as_tuple() == (60, 3, 24, 3)
    assert gs1_params(3, 3, 13).h == 18


def test_gs1_clamped():
    with pytest.warns(UserWarning):
        par = gs1_params(3, 2, 2)
    assert par.k_lower == 0
    assert par.k_lower_raw == -2
    assert par.clamped


def test_gs1_range():
    assert gs1_t_range(3, 3) == (12, 24)
    assert gs1_t_range(3, 2) == (0, 8)
    with pytest.raises(CodeError):
        gs1_params(3, 3, 11)
    with pytest.raises(CodeError):
        gs1_params(3, 3, 25)


def test_gs2_examples():
    assert gs2_params(3, 3, 10).as_tuple() == (72, 6, 14, 3)
    assert gs2_params(3, 2, 3).as_tuple() == (24, 3, 6, 3)
    assert gs2_t_range(3, 3) == (9, 24)
    with pytest.raises(CodeError):
        gs2_params(3, 3, 8)


@pytest.mark.parametrize("q0,l", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 4)])
def test_gs2_identity_and_monotone(q0, l):
    lo, hi = gs2_t_range(q0, l)
    prev = None
    for t in range(lo, hi + 1):
        par = gs2_params(q0, l, t)
        assert par.d_lower + t * (q0 + 1) + (q0 - 1) * q0 ** (l - 1) == par.n
        if prev is not None:
            assert par.d_lower < prev
        prev = par.d_lower


@pytest.mark.parametrize("q0,l", [(2, 3), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_gs1_total_and_monotone(q0, l):
    lo, hi = gs1_t_range(q0, l)
    prev = None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for t in range(lo, hi + 1):
            par = gs1_params(q0, l, t)
            assert par.k_lower >= 0
            # rational form of the distance bound
            n = par.n
            assert par.d_lower * (q0 * q0 - 1) == n * (q0 * q0 - 1) - t * q0 * (q0 * q0 - 1) - 2 * n * (q0 - 2)
            if prev is not None:
                assert par.d_lower < prev
            prev = par.d_lower


def test_gs2_code_l2():
    c = gs2_code_l2(3, 2)
    assert (c.n, c.k, c.r) == (24, 9, 3)
    c2 = gs2_code_l2(2, 1)
    assert (c2.n, c2.k, c2.r, c2.designed_distance) == (6, 4, 2, 1)
