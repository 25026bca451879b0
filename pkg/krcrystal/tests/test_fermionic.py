from __future__ import absolute_import, unicode_literals

import pytest

from krcrystal.branching import branching_multiplicity
from krcrystal.cartan import A2ODD, B1, D1, AffineType, Weight, fundamental_weight
from krcrystal.exceptions import CrystalUsageError, NodeIndexError
from krcrystal.fermionic import (
    Configuration,
    FermionicRow,
    candidate_weights,
    enumerate_configs,
    fermionic_table,
    multiplicity_M,
    multiplicity_N,
    vacancy,
)
from krcrystal.tests.helpers import assert_raises


def test_configuration():
    config = Configuration({(2, 1): 2, (1, 1): 1, (3, 2): 0})
    assert len(config) == 2
    assert config.get(2, 1) == 2
    assert config.get(3, 2) == 0
    assert config.items() == (((1, 1), 1), ((2, 1), 2))
    assert config.total(2) == 2
    assert config == Configuration({(1, 1): 1, (2, 1): 2})
    assert hash(config) == hash(Configuration({(1, 1): 1, (2, 1): 2}))
    assert repr(config) == '<Configuration m1(1)=1, m1(2)=2>'
    assert repr(Configuration()) == '<Configuration empty>'


def test_enumerate_configs(d4):
    w2 = fundamental_weight(d4, 2)
    assert enumerate_configs(d4, 2, 1, w2) == [Configuration()]
    configs = enumerate_configs(d4, 2, 1, Weight.zero(4))
    assert len(configs) == 2
    assert all(c.total(2) == 2 and c.total(1) == 1 for c in configs)
    # omega_1 differs from omega_2 by a non-root-lattice vector
    assert enumerate_configs(d4, 2, 1, fundamental_weight(d4, 1)) == []
    assert enumerate_configs(d4, 1, 1, Weight.zero(4)) == []


def test_vacancy(d4):
    config = Configuration({(1, 1): 1, (2, 1): 2, (3, 1): 1, (4, 1): 1})
    assert [vacancy(d4, 2, 1, config, a, 1) for a in range(1, 5)] == [0, 0, 0, 0]
    config = Configuration({(1, 1): 1, (2, 2): 1, (3, 1): 1, (4, 1): 1})
    assert vacancy(d4, 2, 1, config, 1, 1) == -1


@pytest.mark.parametrize('t,r,s', [
    (AffineType(D1, 4), 1, 1),
    (AffineType(D1, 4), 2, 1),
    (AffineType(D1, 4), 1, 2),
    (AffineType(B1, 3), 1, 1),
    (AffineType(B1, 3), 2, 1),
    (AffineType(A2ODD, 3), 1, 1),
    (AffineType(A2ODD, 3), 2, 1),
])
def test_fermionic_matches_branching(t, r, s):
    for lam in candidate_weights(t, r, s):
        expected = branching_multiplicity(t, r, s, lam)
        assert multiplicity_N(t, r, s, lam) == expected
        assert multiplicity_M(t, r, s, lam) == expected


def test_candidate_weights(d4, b3):
    assert candidate_weights(d4, 1, 1) == [fundamental_weight(d4, 1)]
    assert candidate_weights(d4, 2, 1) == [fundamental_weight(d4, 2), Weight.zero(4)]
    weights = candidate_weights(b3, 2, 1)
    assert weights == [fundamental_weight(b3, 2), fundamental_weight(b3, 1), Weight.zero(3)]


def test_fermionic_table(d4, b3):
    rows = fermionic_table(d4, 2, 1)
    assert rows == [
        FermionicRow(fundamental_weight(d4, 2), 1, 1),
        FermionicRow(Weight.zero(4), 1, 1),
    ]
    full = fermionic_table(b3, 2, 1)
    nonzero = fermionic_table(b3, 2, 1, nonzero_only=True)
    assert len(full) == 3
    assert [row.weight for row in nonzero] == [fundamental_weight(b3, 2), Weight.zero(3)]
    assert FermionicRow(fundamental_weight(b3, 1), 0, 0) in full


def test_fermionic_errors(d4):
    with assert_raises(NodeIndexError):
        fermionic_table(d4, 5, 1)
    with assert_raises(CrystalUsageError):
        candidate_weights(d4, 1, 0)
    with assert_raises(CrystalUsageError):
        enumerate_configs(d4, 1, -2, Weight.zero(4))
