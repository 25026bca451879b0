from __future__ import absolute_import, unicode_literals

import pytest

from krcrystal.branching import decompose_by_c
from krcrystal.cartan import C1, AffineType, Partition, weyl_dimension
from krcrystal.exceptions import (
    ColorError,
    CrystalUsageError,
    NodeIndexError,
    SpinNodeError,
    VertexLimitError,
)
from krcrystal.kn_tableaux import vector_crystal_graph
from krcrystal.kr_crystal import (
    KRCrystalGraph,
    affine_weight,
    apply_affine,
    apply_affine_f,
    build,
    check_build_domain,
    classical_pairings,
    decompose,
    decompose_weights,
    eps_phi,
    inner_shape,
    sigma,
    sigma_twisted_decomposition,
    twist_labels,
)
from krcrystal.tests.helpers import assert_raises, generate_build_grid


def test_build_vector(d4_11, b3_11, a5_11):
    assert isinstance(d4_11, KRCrystalGraph)
    assert len(d4_11) == 8
    assert len(b3_11) == 7
    assert len(a5_11) == 6
    for g in (d4_11, b3_11, a5_11):
        assert g.edges == vector_crystal_graph(g.affine_type).edges
        assert g.r == g.s == 1
    assert repr(d4_11) == '<CrystalGraph D4~1 r=1 s=1 vertices=8>'


def test_sigma_on_letters(d4_11):
    one, two, bar_one = (d4_11.index(w) for w in [(1,), (2,), (-1,)])
    assert sigma(d4_11, one) == bar_one
    assert sigma(d4_11, bar_one) == one
    assert sigma(d4_11, two) == two
    assert apply_affine(d4_11, 0, two) == bar_one
    assert apply_affine_f(d4_11, 0, bar_one) == two
    assert apply_affine(d4_11, 1, two) == one
    assert apply_affine_f(d4_11, 1, one) == two
    assert eps_phi(d4_11, 0, one) == (1, 0)
    assert affine_weight(d4_11, one) == (-1, 1, 0, 0, 0)
    assert classical_pairings(d4_11, one) == (1, 0, 0, 0)

    with assert_raises(ColorError):
        apply_affine(d4_11, 9, one)
    with assert_raises(ColorError):
        eps_phi(d4_11, -1, one)


def test_build_d4_22(d4, d4_22):
    assert len(d4_22) == 329
    expected = decompose_by_c(d4, 2, 2)
    assert len(d4_22) == sum(weyl_dimension(d4, w) for w in expected)
    assert decompose_weights(d4_22) == expected
    assert decompose(d4_22, [1, 2, 3, 4]) == [
        ((1, 0), (2, 0), (3, 0), (4, 0)),
        ((1, 0), (2, 1), (3, 0), (4, 0)),
        ((1, 0), (2, 2), (3, 0), (4, 0)),
    ]
    zero_side, one_side = sigma_twisted_decomposition(d4_22)
    assert zero_side == one_side
    assert d4_22.is_connected(d4.index_set)


@pytest.mark.parametrize('t,r,s', generate_build_grid())
def test_build_grid(t, r, s):
    g = build(t, r, s)
    expected = decompose_by_c(t, r, s)
    assert decompose_weights(g) == expected
    assert len(g) == sum(weyl_dimension(t, w) for w in expected)
    assert set(g.colors) == set(t.index_set)
    for vid in range(len(g)):
        assert sigma(g, sigma(g, vid)) == vid
        affine_weight(g, vid)


def test_build_deterministic(d4, b3_21):
    first, second = build(d4, 2, 1), build(d4, 2, 1)
    assert first.words == second.words
    assert first.edges == second.edges
    assert first.sigma_table == second.sigma_table
    assert build(b3_21.affine_type, 2, 1).edges == b3_21.edges


def test_inner_shape(d4_11, a5_31):
    assert inner_shape(d4_11, d4_11.index((1,))) == Partition()
    assert inner_shape(d4_11, d4_11.index((2,))) == Partition([1])
    assert inner_shape(d4_11, d4_11.index((-1,))) == Partition()
    assert len(a5_31) == sum(
        weyl_dimension(a5_31.affine_type, w) for w in decompose_by_c(a5_31.affine_type, 3, 1)
    )


def test_twist_labels():
    assert twist_labels([((0, 2), (2, 1))]) == [((1, 2), (2, 1))]
    assert twist_labels([((1, 1),), ((0, 3),)]) == [((0, 1),), ((1, 3),)]


def test_build_domain(d4):
    check_build_domain(d4, 2, 3)
    with assert_raises(SpinNodeError):
        build(d4, 3, 1)
    with assert_raises(NodeIndexError):
        build(d4, 0, 1)
    with assert_raises(CrystalUsageError):
        build(d4, 1, 0)
    with assert_raises(CrystalUsageError):
        build(AffineType(C1, 3), 1, 1)
    with assert_raises(VertexLimitError):
        build(d4, 2, 2, max_vertices=50)
