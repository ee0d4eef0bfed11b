from __future__ import annotations

import numpy as np
import pytest

from curvelrc.analysis import rank
from curvelrc.lrc_core import (
    CodeError,
    EvaluationCodeSpec,
    Partition,
    RecoveringStructure,
    build_generator,
    designed_params,
    encode,
    local_interpolant,
    local_recover,
)


def _pairs_spec(F, npairs=3, m=1, t=0):
    fibers = tuple((2 * i, 2 * i + 1) for i in range(npairs))
    xval = tuple(v for _ in range(npairs) for v in (0, 1))
    structure = RecoveringStructure(2 * npairs, (Partition(fibers, xval),))
    basis = np.ones((m, npairs), dtype=np.int64)
    return EvaluationCodeSpec(F, structure, basis, r=1, t=t, h=1)


def test_partition_validation(gf13):
    with pytest.raises(CodeError, match="exactly once"):
        Partition(((0, 1), (1, 2)), (0, 1, 2))
    with pytest.raises(CodeError, match="unequal"):
        Partition(((0, 1), (2,)), (0, 1, 2))
    with pytest.raises(CodeError, match="repeats"):
        Partition(((0, 1),), (5, 5))


def test_transversality_checked():
    a = Partition(((0, 1), (2, 3)), (0, 1, 0, 1))
    b = Partition(((0, 1), (2, 3)), (0, 1, 0, 1))
    with pytest.raises(CodeError, match="transversal"):
        RecoveringStructure(4, (a, b))
    c = Partition(((0, 2), (1, 3)), (0, 0, 1, 1))
    assert RecoveringStructure(4, (a, c)).localities == (1, 1)


def test_repetition_within_pairs(gf13):
    code = build_generator(_pairs_spec(gf13))
    assert code.k == 1
    assert code.G.tolist() == [[1] * 6]
    assert code.designed_distance == 6


def test_designed_params_constants_only(gf13):
    spec = _pairs_spec(gf13)
    n, k, d = designed_params(spec)
    assert (n, k, d) == (6, spec.r, n - (spec.r - 1) * spec.h)


def test_designed_params_hermitian():
    from curvelrc.hermitian import code_proj_y

    c = code_proj_y(3, 2)
    assert (c.n, c.k, c.designed_distance) == (27, 6, 17)
    c6 = code_proj_y(3, 6)
    assert (c6.n, c6.k, c6.designed_distance) == (27, 14, 5)


def test_designed_distance_below_one(gf13):
    spec = _pairs_spec(gf13, npairs=2, m=1, t=5)
    with pytest.raises(CodeError, match="designed distance"):
        build_generator(spec)


def test_rank_deficiency_detected(gf13):
    # two identical basis rows
    spec = _pairs_spec(gf13, npairs=4, m=2, t=0)
    with pytest.raises(CodeError, match="dependent"):
        build_generator(spec, designed_distance=1)


def test_tb9_rows(tb9, gf13):
    pts = [int(v) for v in tb9.structure.partitions[0].xval]
    assert pts == [1, 3, 9, 2, 6, 5, 4, 12, 10]
    expected = {tuple(pow(x, e, 13) for x in pts) for e in (0, 1, 3, 4)}
    assert {tuple(int(v) for v in row) for row in tb9.G} == expected
    assert rank(gf13, tb9.G) == 4


def test_herm27_first_row(herm27):
    assert herm27.G.shape == (6, 27)
    assert herm27.G[0].tolist() == [1] * 27
    assert herm27.row_names == ("1", "y", "y^2", "x", "x*y", "x*y^2")


def test_encode_zero_and_unit(herm27):
    assert not encode(herm27, [0] * 6).any()
    assert encode(herm27, [1, 0, 0, 0, 0, 0]).tolist() == [1] * 27


def test_encode_errors(herm27):
    with pytest.raises(CodeError):
        encode(herm27, [1, 2])
    with pytest.raises(CodeError):
        encode(herm27, [9, 0, 0, 0, 0, 0])


def test_recover_herm27(herm27, gf9):
    a = gf9.alpha
    word = encode(herm27, [a(i) for i in range(6)])
    pos = herm27.labels.index((a(1), 1))
    present = np.ones(27, dtype=bool)
    present[pos] = False
    f = local_interpolant(herm27, word, present, pos)
    assert f.coeffs == (gf9.neg(a(2)), a(1))
    assert local_recover(herm27, word, present, pos) == 0


def test_recover_errors(herm27):
    word = np.zeros(27, dtype=np.int64)
    present = np.ones(27, dtype=bool)
    with pytest.raises(CodeError, match="not erased"):
        local_recover(herm27, word, present, 0)
    present[[0, 1]] = False
    with pytest.raises(CodeError, match="further erasures"):
        local_recover(herm27, word, present, 0)
    with pytest.raises(CodeError, match="no partition 2"):
        local_recover(herm27, word, present, 0, which_partition=2)


def test_recover_zero_word(lrc2_q3):
    word = np.zeros(lrc2_q3.n, dtype=np.int64)
    for pos in range(lrc2_q3.n):
        present = np.ones(lrc2_q3.n, dtype=bool)
        present[pos] = False
        assert local_recover(lrc2_q3, word, present, pos, 1) == 0
        assert local_recover(lrc2_q3, word, present, pos, 2) == 0
