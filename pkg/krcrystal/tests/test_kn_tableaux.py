from __future__ import absolute_import, unicode_literals

import pytest

from krcrystal.cartan import Weight
from krcrystal.exceptions import ColorError, GraphFormatError, VertexLimitError
from krcrystal.kn_tableaux import (
    KASHIWARA,
    ClassicalCrystal,
    alphabet,
    generate_component,
    highest_weight_elements,
    highest_weight_word,
    letter_text,
    letter_weight,
    parse_letter,
    raise_to_highest_weight,
    vector_arrows,
    vector_crystal_graph,
    word_weight,
)
from krcrystal.tests.helpers import assert_raises, generate_types


def test_letters():
    assert alphabet('D', 4) == (1, 2, 3, 4, -4, -3, -2, -1)
    assert alphabet('B', 3) == (1, 2, 3, 0, -3, -2, -1)
    assert letter_text(-2) == '-2'
    assert parse_letter('-2') == -2
    assert parse_letter(letter_text(0)) == 0
    assert letter_weight(3, -2) == Weight([0, -1, 0])
    assert letter_weight(3, 0) == Weight.zero(3)
    assert word_weight(3, (1, -2, 0, 1)) == Weight([2, -1, 0])

    with assert_raises(GraphFormatError):
        parse_letter('x')
    with assert_raises(GraphFormatError):
        parse_letter(None)


def test_crystal_operators(d4_crystal):
    assert repr(d4_crystal) == '<ClassicalCrystal D4 anti-kashiwara>'
    assert d4_crystal.index_set == (1, 2, 3, 4)
    assert d4_crystal.apply_f(1, (1,)) == (2,)
    assert d4_crystal.apply_f(2, (2, 1)) == (3, 1)
    assert d4_crystal.apply_e(1, (2, 1)) is None
    assert d4_crystal.apply_e(2, (3, 1)) == (2, 1)
    assert d4_crystal.apply_f(1, (1, 1)) == (1, 2)
    assert d4_crystal.apply_e(1, (1, 2)) == (1, 1)
    assert d4_crystal.apply_f(4, (3,)) == (-4,)
    assert d4_crystal.apply_f(4, (4,)) == (-3,)
    assert d4_crystal.apply_f(1, (-1,)) is None
    assert d4_crystal.apply_string((1,), [2, 1]) == (3,)
    assert d4_crystal.apply_string((3,), [1, 2], lower=False) == (1,)
    assert d4_crystal.apply_string((1,), [3, 1]) is None
    assert d4_crystal.epsilon(1, (2, 2)) == 2
    assert d4_crystal.phi(1, (1, 1)) == 2
    assert d4_crystal.signature(1, (2, 1)) == ((), ())

    with assert_raises(ColorError):
        d4_crystal.apply_f(0, (1,))
    with assert_raises(ColorError):
        d4_crystal.epsilon(5, (1,))


def test_tensor_convention():
    crystal = ClassicalCrystal('D', 4, KASHIWARA)
    assert crystal.apply_f(1, (1, 1)) == (2, 1)
    assert crystal.apply_e(1, (2, 1)) == (1, 1)
    with assert_raises(ValueError):
        ClassicalCrystal('D', 4, 'other')


def test_b_middle_letter():
    crystal = ClassicalCrystal('B', 3)
    assert crystal.apply_f(3, (3,)) == (0,)
    assert crystal.apply_f(3, (0,)) == (-3,)
    assert crystal.phi(3, (3,)) == 2
    assert crystal.epsilon(3, (-3,)) == 2


@pytest.mark.parametrize('kind,n,size', [('D', 4, 8), ('B', 3, 7), ('C', 3, 6)])
def test_vector_component(kind, n, size):
    g = generate_component(ClassicalCrystal(kind, n), (1,))
    assert len(g) == size
    assert [w[0] for w in g.words] == list(alphabet(kind, n))
    assert g.highest_weight_vertices(range(1, n + 1)) == [0]


def test_adjoint_component(d4_crystal):
    g = generate_component(d4_crystal, (2, 1))
    assert len(g) == 28
    assert g.word(0) == (2, 1)
    assert highest_weight_elements(g, range(1, 5)) == [(2, 1)]
    for vid in range(len(g)):
        for i in d4_crystal.index_set:
            down = g.f(i, vid)
            if down is not None:
                assert g.e(i, down) == vid
            phi_minus_eps = g.phi(i, vid) - g.epsilon(i, vid)
            assert phi_minus_eps == d4_crystal.phi(i, g.word(vid)) - d4_crystal.epsilon(i, g.word(vid))
    assert generate_component(d4_crystal, (2, 1)).words == g.words


def test_component_errors(d4_crystal):
    with assert_raises(VertexLimitError):
        generate_component(d4_crystal, (2, 1), max_vertices=10)
    with assert_raises(ColorError):
        generate_component(d4_crystal, (1,), colors=[0, 1])
    with assert_raises(ColorError):
        generate_component(d4_crystal, (1,), colors=[7])


def test_restricted_component(d4_crystal):
    g = generate_component(d4_crystal, (1,), colors=[2, 3, 4])
    assert g.words == ((1,),)
    g = generate_component(d4_crystal, (2,), colors=[2, 3, 4])
    assert len(g) == 6


def test_highest_weight_word(d4_crystal):
    assert highest_weight_word((2, 1)) == (2, 1, 1)
    assert highest_weight_word((1, 1)) == (2, 1)
    assert highest_weight_word(()) == ()
    word, applied = raise_to_highest_weight(d4_crystal, (3, 1), range(1, 5))
    assert word == (2, 1)
    assert applied == (2,)
    word, applied = raise_to_highest_weight(d4_crystal, (-1,), range(1, 5))
    assert word == (1,)
    assert len(applied) == 6


def test_vector_graph():
    for t in generate_types():
        g = vector_crystal_graph(t)
        assert len(g) == len(alphabet(t.kind, t.rank))
        assert g.is_connected(t.index_set)
        assert len(g.weight(0)) == t.rank
        assert 0 in g.colors
        assert len(vector_arrows(t)) == len(g.edges)
    d4_graph = vector_crystal_graph(generate_types()[0])
    assert repr(d4_graph) == '<CrystalGraph D4~1 r=1 s=1 vertices=8>'
    assert len(d4_graph.edges) == 10
