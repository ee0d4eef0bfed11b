from __future__ import annotations

import itertools

import numpy as np
import pytest

from curvelrc.analysis import min_distance_exhaustive, row_reduce
from curvelrc.bounds import singleton_lrc
from curvelrc.galois import Poly, make_field, trace_kernel
from curvelrc.hermitian import singleton_gap
from curvelrc.lrc_core import CodeError
from curvelrc.tamo_barg import good_poly_additive, good_poly_multiplicative, tb_code


def test_tb9_partition(gf13):
    gp = good_poly_multiplicative(gf13, 2, [1, 2, 4])
    assert gp.g == Poly(gf13, [0, 0, 0, 1])
    assert gp.partition == ((1, 3, 9), (2, 6, 5), (4, 12, 10))
    assert gp.constants == (1, 8, 12)


def test_single_coset(gf13):
    gp = good_poly_multiplicative(gf13, 2, [1])
    assert gp.partition == ((1, 3, 9),)
    assert gp.constants == (1,)


def test_gf9_order4_cosets(gf9):
    a = gf9.alpha
    gp = good_poly_multiplicative(gf9, 3, [1, a(1)])
    assert gp.constants == (1, 2)
    for part, c in zip(gp.partition, gp.constants):
        assert {gf9.pow(x, 4) for x in part} == {c}


def test_multiplicative_errors(gf13):
    with pytest.raises(CodeError):
        good_poly_multiplicative(gf13, 4, [1])
    with pytest.raises(CodeError, match="repeat"):
        good_poly_multiplicative(gf13, 2, [1, 3])


def test_additive_gf4(gf4):
    w = gf4.primitive
    gp = good_poly_additive(gf4, [0, 1], [0, w])
    assert gp.g == Poly(gf4, [0, 1, 1])
    assert gp.partition == ((0, 1), (w, gf4.add(w, 1)))
    assert gp.constants == (0, 1)


def test_additive_trace_kernel_gf9(gf9):
    H = trace_kernel(gf9)
    reps = [0, 1, 2]
    gp = good_poly_additive(gf9, H, reps)
    assert gp.g == Poly(gf9, [0, 1, 0, 1])
    assert len(set(gp.constants)) == 3


def test_additive_errors(gf9, gf4):
    with pytest.raises(CodeError, match="subgroup"):
        good_poly_additive(gf9, [0, 1], [0])
    with pytest.raises(CodeError, match="r must be"):
        good_poly_additive(gf4, [0], [0, 1])


def test_tb_divisibility(gf13):
    gp = good_poly_multiplicative(gf13, 2, [1, 2, 4])
    with pytest.raises(CodeError):
        tb_code(gp, 3)
    with pytest.raises(CodeError):
        tb_code(gp, 8)


def test_tb9_distance(tb9):
    assert (tb9.n, tb9.k, tb9.r) == (9, 4, 2)
    assert tb9.designed_distance == 5
    assert min_distance_exhaustive(tb9).distance == 5
    assert singleton_gap(tb9) == 0


def test_constants_only(gf13):
    gp = good_poly_multiplicative(gf13, 2, [1, 2, 4])
    code = tb_code(gp, 2)
    assert code.designed_distance == code.n - code.r + 1
    assert min_distance_exhaustive(code).distance == 8


def _brute_distance(code):
    F = code.field
    G = [[int(v) for v in row] for row in code.G]
    best = code.n
    for msg in itertools.product(range(F.q), repeat=code.k):
        if not any(msg):
            continue
        word = [F.sum(F.mul(m, row[j]) for m, row in zip(msg, G)) for j in range(code.n)]
        best = min(best, sum(1 for v in word if v))
    return best


@pytest.mark.parametrize("k", [2, 4])
def test_brute_force_agrees(gf13, k):
    code = tb_code(good_poly_multiplicative(gf13, 2, [1, 2, 4]), k)
    assert _brute_distance(code) == min_distance_exhaustive(code).distance


def _tb_instances():
    F13 = make_field(13)
    for r in (1, 2, 3, 5):
        order = r + 1
        ncos = 12 // order
        for c in range(1, ncos + 1):
            reps = [F13.alpha(i) for i in range(c)]
            for m in range(1, c + 1):
                k = r * m
                if k <= 6 and order * c <= 12:
                    yield pytest.param(F13, r, reps, k, id=f"gf13-r{r}-c{c}-k{k}")


@pytest.mark.parametrize("F,r,reps,k", list(_tb_instances()))
def test_tb_meets_singleton_bound(F, r, reps, k):
    code = tb_code(good_poly_multiplicative(F, r, reps), k)
    expect = singleton_lrc(code.n, k, r)
    assert code.designed_distance == expect
    assert min_distance_exhaustive(code).distance == expect


def test_tb_n12_k6(gf13):
    code = tb_code(good_poly_multiplicative(gf13, 2, [1, 2, 4, 8]), 6)
    assert code.n == 12
    assert code.designed_distance == 5
    assert min_distance_exhaustive(code).distance == 5


def test_additive_tb_gf9(gf9):
    H = trace_kernel(gf9)
    code = tb_code(good_poly_additive(gf9, H, [0, 1, 2]), 4)
    assert code.designed_distance == singleton_lrc(9, 4, 2)
    assert min_distance_exhaustive(code).distance == code.designed_distance


@pytest.mark.parametrize("reps,k", [([1, 2, 4], 4), ([1, 2, 4, 8], 6), ([1, 2], 2)])
def test_annihilator_same_row_space(gf13, reps, k):
    mono = good_poly_multiplicative(gf13, 2, reps)
    ann = good_poly_multiplicative(gf13, 2, reps, annihilator=True)
    for part, c1, c2 in zip(mono.partition, mono.constants, ann.constants):
        assert gf13.sub(c1, c2) == 1
    a = tb_code(mono, k)
    b = tb_code(ann, k)
    ra, _ = row_reduce(gf13, a.G)
    rb, _ = row_reduce(gf13, b.G)
    assert np.array_equal(ra, rb)
