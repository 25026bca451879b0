from __future__ import absolute_import, unicode_literals

import pytest

from krcrystal.cartan import A2ODD, B1, D1, AffineType
from krcrystal.kn_tableaux import ClassicalCrystal
from krcrystal.kr_crystal import build
from krcrystal.tests import global_data


@pytest.fixture(scope='session')
def d4():
    return AffineType(D1, 4)


@pytest.fixture(scope='session')
def b3():
    return AffineType(B1, 3)


@pytest.fixture(scope='session')
def a5():
    return AffineType(A2ODD, 3)


@pytest.fixture(scope='session')
def d4_crystal():
    return ClassicalCrystal('D', 4)


@pytest.fixture(scope='session')
def d4_11(d4):
    return build(d4, 1, 1)


@pytest.fixture(scope='session')
def d4_22(d4):
    return build(d4, 2, 2, max_vertices=global_data.get('max_vertices', 5000))


@pytest.fixture(scope='session')
def b3_11(b3):
    return build(b3, 1, 1)


@pytest.fixture(scope='session')
def b3_21(b3):
    return build(b3, 2, 1)


@pytest.fixture(scope='session')
def a5_11(a5):
    return build(a5, 1, 1)


@pytest.fixture(scope='session')
def a5_31(a5):
    return build(a5, 3, 1)
