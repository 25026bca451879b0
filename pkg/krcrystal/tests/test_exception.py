from __future__ import absolute_import, unicode_literals

import pytest

from krcrystal import exceptions
from krcrystal.cartan import parse_type
from krcrystal.exceptions import (
    AffineTypeParseError,
    CrystalError,
    CrystalInternalError,
    CrystalUsageError,
    LevelError,
)
from krcrystal.tests.helpers import assert_raises

USAGE = [
    'AffineTypeParseError', 'AffineTypeRankError', 'NodeIndexError',
    'SpinWeightError', 'PartitionError', 'QExponentError', 'QBinomialRangeError', 'QParseError',
    'CVectorError', 'SpinNodeError', 'ColorError', 'VertexLimitError',
    'DiagramError', 'GraphFormatError',
]
INTERNAL = [
    'WeightPairingError', 'QDivisionError', 'VacancyError', 'DiagramLookupError',
    'OperatorStringError', 'PairMoveError', 'GraphStructureError', 'LevelError',
    'AmbiguousMatchingError',
]


@pytest.mark.parametrize('name', USAGE)
def test_usage_errors(name):
    exc = getattr(exceptions, name)('bad input')
    assert isinstance(exc, CrystalUsageError)
    assert isinstance(exc, CrystalError)
    assert exc.source == 'usage'
    assert exc.message == str(exc) == 'bad input'


@pytest.mark.parametrize('name', INTERNAL)
def test_internal_errors(name):
    exc = getattr(exceptions, name)('broken')
    assert isinstance(exc, CrystalInternalError)
    assert not isinstance(exc, CrystalUsageError)
    assert exc.source == 'internal'
    assert exc.message == 'broken'


def test_raised_error():
    with assert_raises(AffineTypeParseError) as err:
        parse_type('Q3~1')
    exc = err.value
    assert isinstance(exc, CrystalUsageError)
    assert exc.source == 'usage'
    assert exc.message == str(exc)
    assert 'Q3~1' in exc.message
    assert CrystalError('x').source == 'unknown'
    assert issubclass(LevelError, CrystalInternalError)
