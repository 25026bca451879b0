from __future__ import absolute_import, unicode_literals

from fractions import Fraction

import mock
import pytest

from krcrystal.branching import enumerate_c
from krcrystal.cartan import A2EVEN, B1, C1, D1, D2, AffineType, Weight, fundamental_weight
from krcrystal.exceptions import CVectorError, NodeIndexError, SpinNodeError
from krcrystal.norms import (
    NormInput,
    NormReport,
    check_criterion,
    criterion_sweep,
    norm_domain,
    norm_eu,
    norm_u,
    recursion_check,
    stated_pairing,
)
from krcrystal.qlaurent import LaurentPoly, in_one_plus_qsA, q_binomial
from krcrystal.tests.helpers import assert_raises
from krcrystal.utils import suppress_warning

c2 = AffineType(C1, 2)
c3 = AffineType(C1, 3)
a4 = AffineType(A2EVEN, 2)


def poly(text):
    return LaurentPoly.parse(text)


def test_norm_domain(d4, b3):
    assert norm_domain(d4) == (1, 2)
    assert norm_domain(b3) == (1, 2, 3)
    assert norm_domain(c3) == (1, 2)
    assert norm_domain(a4) == (1, 2)


def test_norm_input(d4, b3):
    data = NormInput(d4, 2, 2, (0,))
    assert data.style == 'vertical'
    assert data.lam == fundamental_weight(d4, 2).scale(2)
    assert NormInput(d4, 2, 2, (2,)).lam == Weight.zero(4)
    assert data.c_at(0) == 2
    assert data.c_at(1) == 0
    assert data.c_at(5) == 0
    assert data._replace(j=2).p == 1
    assert data._replace(j=1).p is None
    assert data.p is None

    spin = NormInput(b3, 3, 2, (1,))
    assert spin.style == 'spin'
    assert spin.c_at(0) == 1
    assert spin.lam == fundamental_weight(b3, 1)

    assert NormInput(c3, 2, 2, (1, 0)).style == 'horizontal'
    assert NormInput(a4, 1, 1, (0,)).style == 'box'


def test_norm_vertical(d4):
    assert norm_u(NormInput(d4, 2, 1, (1,))) == poly('q^2 + 1')
    assert norm_u(NormInput(d4, 2, 1, (0,))) == 1
    assert norm_eu(NormInput(d4, 2, 1, (1,), 1)).is_zero
    assert norm_eu(NormInput(d4, 2, 1, (1,), 2)) == 1
    assert stated_pairing(NormInput(d4, 2, 1, (1,), 2)) == 0
    assert stated_pairing(NormInput(d4, 2, 1, (0,), 2)) == 1
    assert stated_pairing(NormInput(d4, 2, 1, (0,), 1)) == 0


def test_norm_spin(b3):
    assert norm_u(NormInput(b3, 3, 2, (1,))) == poly('q^2 + 1')
    assert norm_eu(NormInput(b3, 3, 2, (1,), 3)) == poly('q + 1')
    assert norm_eu(NormInput(b3, 3, 2, (1,), 1)) == poly('q^2 + 1')
    assert norm_eu(NormInput(b3, 3, 2, (1,), 2)).is_zero
    assert norm_eu(NormInput(b3, 3, 2, (0,), 3)).is_zero
    assert stated_pairing(NormInput(b3, 3, 2, (1,), 3)) == 0
    assert stated_pairing(NormInput(b3, 3, 2, (0,), 3)) == 2


def test_norm_horizontal():
    assert norm_u(NormInput(c3, 2, 2, (1, 0))) == poly('q^4 + 1')
    assert norm_eu(NormInput(c3, 2, 2, (0, 0), 3)).is_zero
    assert norm_u(NormInput(c2, 1, 2, (1,))) == poly('q^4 + 1')
    assert norm_eu(NormInput(c2, 1, 2, (1,), 1)) == poly('q^2 + 1')
    assert norm_eu(NormInput(c2, 1, 3, (1,), 1)) == poly('q^4 + q^2 + 1')
    assert norm_eu(NormInput(c2, 1, 3, (0,), 1)).is_zero
    assert stated_pairing(NormInput(c2, 1, 2, (0,), 1)) == 2
    assert stated_pairing(NormInput(c2, 1, 2, (0,), 2)) == 0


def test_norm_u_subscript_base():
    # step exponents are taken in q_0, not in q
    value = norm_u(NormInput(c3, 2, 2, (1, 0)))
    assert value == poly('q^4 + 1')
    assert in_one_plus_qsA(value)
    exponent_in_q = poly('q') * q_binomial(2, 1, 2)
    assert exponent_in_q == poly('q^3 + q^(-1)')
    assert not in_one_plus_qsA(exponent_in_q)

    box = norm_u(NormInput(a4, 1, 2, (1,)))
    assert box == poly('q^(3/2)') * q_binomial(4, 1, Fraction(1, 2)) == poly('q^3 + q^2 + q + 1')
    assert in_one_plus_qsA(box)
    assert not in_one_plus_qsA(poly('q^3') * q_binomial(4, 1, Fraction(1, 2)))


def test_norm_box():
    assert norm_u(NormInput(a4, 1, 1, (1,))) == poly('q + 1')
    assert norm_eu(NormInput(a4, 1, 1, (0,), 1)).is_zero
    assert norm_eu(NormInput(a4, 1, 1, (1,), 1)) == poly('q + 2 + q^(-1)')
    assert norm_eu(NormInput(a4, 1, 1, (1,), 2)).is_zero
    assert stated_pairing(NormInput(a4, 1, 1, (0,), 1)) == 1


def test_norm_errors(d4):
    with assert_raises(SpinNodeError):
        norm_u(NormInput(d4, 3, 1, ()))
    with assert_raises(NodeIndexError):
        norm_eu(NormInput(d4, 2, 1, (1,)))
    with assert_raises(NodeIndexError):
        norm_eu(NormInput(d4, 2, 1, (1,), 5))
    with assert_raises(CVectorError):
        norm_u(NormInput(d4, 2, 1, (2,)))
    with assert_raises(CVectorError):
        norm_u(NormInput(d4, 2, 1, (0, 0)))


@pytest.mark.parametrize('t,r,s', [
    (AffineType(D1, 4), 2, 1),
    (AffineType(D1, 4), 2, 2),
    (AffineType(B1, 3), 3, 2),
    (c2, 1, 2),
    (c3, 2, 2),
    (a4, 1, 1),
])
def test_check_criterion(t, r, s):
    report = check_criterion(t, r, s)
    assert isinstance(report, NormReport)
    assert report.passed
    assert report.violations == []
    kinds = {check.check for check in report.checks}
    assert kinds == {'u', 'pairing', 'eu'}
    assert all(check.family == t.label for check in report.checks)


def test_recursion_check():
    report = recursion_check(c2, 1, 2)
    assert report.passed
    assert {check.check for check in report.checks} == {'u-recursion', 'eu-assembly', 'beta-zero'}

    report = recursion_check(c3, 2, 2)
    assert report.passed
    assert len([check for check in report.checks if check.check == 'u-recursion']) == len(enumerate_c(c3, 2, 2))

    report = recursion_check(AffineType(D1, 4), 2, 2)
    assert report.passed
    assert {check.check for check in report.checks} == {'u-recursion'}

    report = recursion_check(a4, 1, 1)
    assert report.passed
    assert {check.check for check in report.checks} == {'u-recursion', 'eu-assembly'}

    assert recursion_check(AffineType(D2, 4), 1, 2).passed


def test_recursion_check_wrong_step():
    with mock.patch('krcrystal.norms._u_factor', return_value=LaurentPoly.one()):
        with suppress_warning('krcrystal.norms'):
            report = recursion_check(a4, 1, 2)
    assert not report.passed
    assert {check.check for check in report.violations} == {'u-recursion', 'eu-assembly'}
    assert (1,) in {check.c for check in report.violations}
    assert (0,) not in {check.c for check in report.violations}


def test_recursion_check_wrong_closed_form():
    with mock.patch('krcrystal.norms.norm_f', return_value=LaurentPoly.zero()):
        with suppress_warning('krcrystal.norms'):
            report = recursion_check(c2, 1, 2)
    assert not report.passed
    assert {check.check for check in report.violations} == {'eu-assembly', 'beta-zero'}
    assert all(check.passed for check in report.checks if check.check == 'u-recursion')


def test_criterion_sweep():
    grid = criterion_sweep(max_rank=4, max_s=1, families=(D1,))
    assert grid == [(AffineType(D1, 4), 1, 1), (AffineType(D1, 4), 2, 1)]
    grid = criterion_sweep(max_rank=3, max_s=2)
    assert len(grid) == len(set(grid))
    assert all(r in norm_domain(t) for t, r, _ in grid)
