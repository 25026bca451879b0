from __future__ import absolute_import, unicode_literals

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krcrystal.exceptions import (
    QBinomialRangeError,
    QDivisionError,
    QExponentError,
    QParseError,
)
from krcrystal.qlaurent import (
    LaurentPoly,
    in_one_plus_qsA,
    in_shifted_lattice,
    q_binomial,
    q_factorial,
    q_integer,
    signed_q_integer,
)
from krcrystal.tests.helpers import assert_raises

polys = st.dictionaries(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-5, max_value=5),
    max_size=5,
).map(LaurentPoly)


def q(exponent):
    return LaurentPoly.monomial(2 * exponent)


def test_poly_construction():
    p = LaurentPoly({2: 1, 0: 0, -2: 3})
    assert p.terms == {2: 1, -2: 3}
    assert 0 not in p.terms
    assert LaurentPoly.zero().is_zero
    assert LaurentPoly.one() == 1
    assert LaurentPoly.constant(4) == 4
    assert p.min_exponent == -2
    assert p.max_exponent == 2
    assert p.constant_term == 0
    assert p.evaluate_at_one() == 4
    assert list(p.items()) == [(-2, 3), (2, 1)]
    assert repr(LaurentPoly.one()) == '<LaurentPoly 1>'

    with assert_raises(ValueError):
        LaurentPoly.zero().min_exponent


def test_poly_text():
    assert str(q(2) + 1) == 'q^2 + 1'
    assert str(q(1) + q(-1)) == 'q + q^(-1)'
    assert str(LaurentPoly.monomial(1) - 2) == 'q^(1/2) - 2'
    assert str(LaurentPoly.zero()) == '0'
    for text in ('q^2 + 1', 'q^(3/2) - q^(-1/2)', '2*q - 3', '-q^(-2)'):
        assert str(LaurentPoly.parse(text)) == text
    assert LaurentPoly.parse('q') == q(1)
    assert LaurentPoly.parse('q + q') == 2 * q(1)


@pytest.mark.parametrize('text', ['', 'q^', 'q q', 'q * 3', '1 +'])
def test_poly_parse_errors(text):
    with assert_raises(QParseError):
        LaurentPoly.parse(text)


def test_poly_arithmetic():
    p = q(1) + 1
    assert p * p == q(2) + 2 * q(1) + 1
    assert p - p == LaurentPoly.zero()
    assert 1 - p == -q(1)
    assert p ** 0 == 1
    assert p ** 2 == p * p
    assert p.shift(-2) == 1 + q(-1)
    assert (p * p).exact_divide(p) == p
    assert (q(3) - q(-3)).exact_divide(q(1) - q(-1)) == q(2) + 1 + q(-2)

    with assert_raises(QDivisionError):
        p.exact_divide(LaurentPoly.zero())
    with assert_raises(QDivisionError):
        (q(2) + 1).exact_divide(q(1) + 1)


@given(polys, polys, polys)
def test_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * LaurentPoly.one() == a
    assert all(coef != 0 for coef in (a * b).terms.values())


@given(polys, polys)
def test_poly_exact_division(a, b):
    if not b.is_zero:
        assert (a * b).exact_divide(b) == a


def test_q_integer():
    assert q_integer(2) == q(1) + q(-1)
    assert q_integer(0).is_zero
    assert q_integer(1) == 1
    assert q_integer(3, Fraction(1, 2)).terms == {2: 1, 0: 1, -2: 1}
    assert q_integer(2, 2) == q(2) + q(-2)
    assert signed_q_integer(-2) == -q_integer(2)
    assert signed_q_integer(0).is_zero
    assert q_factorial(3) == q_integer(2) * q_integer(3)

    with assert_raises(QBinomialRangeError):
        q_integer(-1)
    with assert_raises(QExponentError):
        q_integer(2, 0)
    with assert_raises(QExponentError):
        q_integer(2, Fraction(1, 3))


def test_q_binomial():
    assert q_binomial(3, 0) == 1
    assert q_binomial(2, 1) == q(1) + q(-1)
    assert q_binomial(4, 2) == q(4) + q(2) + 2 + q(-2) + q(-4)
    assert q_binomial(4, 2, 2) == q(8) + q(4) + 2 + q(-4) + q(-8)

    with assert_raises(QBinomialRangeError):
        q_binomial(2, 3)
    with assert_raises(QBinomialRangeError):
        q_binomial(2, -1)


@given(st.integers(min_value=0, max_value=7), st.integers(min_value=0, max_value=7))
def test_q_binomial_symmetry(l, m):  # noqa: E741
    if m <= l:
        assert q_binomial(l, m) == q_binomial(l, l - m)
        assert q_binomial(l, m).evaluate_at_one() >= 1


def test_lattice_membership():
    assert in_shifted_lattice(q(2) + 1, 0)
    assert not in_shifted_lattice(q(-1), 0)
    assert in_shifted_lattice(LaurentPoly.zero(), 5)
    assert in_shifted_lattice(q(-1), -2)

    assert in_one_plus_qsA(q(2) + 1)
    assert not in_one_plus_qsA(q(1) + q(-1))
    assert in_one_plus_qsA(LaurentPoly.one())
    assert not in_one_plus_qsA(LaurentPoly.zero())
    assert not in_one_plus_qsA(q(1))
    assert not in_one_plus_qsA(2 + q(1))


@pytest.mark.parametrize('m', range(1, 7))
def test_norm_ingredients(m):
    # q^{m-1}[m] and q^{k(m-k)}[m, k] lie in 1 + qA
    assert in_one_plus_qsA(q(m - 1) * q_integer(m))
    for k in range(m + 1):
        assert in_one_plus_qsA(q(k * (m - k)) * q_binomial(m, k))
