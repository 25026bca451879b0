from __future__ import absolute_import, unicode_literals

import threading

import pytest

from krcrystal.exceptions import CrystalUsageError
from krcrystal.executor import AsyncSweepExecutor, DefaultSweepExecutor
from krcrystal.tests.helpers import assert_raises
pytestmark = pytest.mark.asyncio


def square(x):
    return x * x


async def test_default_executor():
    executor = DefaultSweepExecutor()
    assert executor.context == 'default'
    assert await executor.execute([1, 2, 3], square) == [1, 4, 9]
    assert await executor.execute([], square) == []


async def test_async_executor():
    executor = AsyncSweepExecutor(concurrency=2)
    assert executor.context == 'async'
    assert executor.concurrency == 2
    assert await executor.execute(list(range(10)), square) == [x * x for x in range(10)]


async def test_async_executor_threads():
    seen = set()

    def record(x):
        seen.add(threading.get_ident())
        return -x

    result = await AsyncSweepExecutor(3).execute([3, 1, 2], record)
    assert result == [-3, -1, -2]
    assert threading.get_ident() not in seen


async def test_async_executor_errors():
    for bad in (0, -1, 1.5, True):
        with assert_raises(CrystalUsageError):
            AsyncSweepExecutor(bad)

    def boom(x):
        raise ValueError(x)

    with assert_raises(ValueError) as err:
        await AsyncSweepExecutor().execute([7], boom)
    assert err.value.args == (7,)

