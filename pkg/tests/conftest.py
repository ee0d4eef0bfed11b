from __future__ import annotations

from pathlib import Path

import pytest

from curvelrc.galois import make_field
from curvelrc.hermitian import code_lrc2, code_proj_x, code_proj_y
from curvelrc.tamo_barg import good_poly_multiplicative, tb_code

TESTDATA = Path(__file__).resolve().parent.parent / "testdata"


@pytest.fixture(scope="session")
def gf9():
    # alpha^2 = alpha + 1
    return make_field(3, 2, (2, 2, 1))


@pytest.fixture(scope="session")
def gf13():
    return make_field(13)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2, (1, 1, 1))


@pytest.fixture(scope="session")
def tb9(gf13):
    return tb_code(good_poly_multiplicative(gf13, 2, [1, 2, 4]), 4)


@pytest.fixture(scope="session")
def herm27():
    return code_proj_y(3, 2)


@pytest.fixture(scope="session")
def lrc2_q3():
    return code_lrc2(3)


@pytest.fixture(scope="session")
def projx_q3_t1():
    return code_proj_x(3, 1)
