__all__ = [
    "SweepExecutor",
    "DefaultSweepExecutor",
    "AsyncSweepExecutor",
    "run_sweep",
]

import asyncio
import logging
from typing import Callable, List, Optional, Sequence, TypeVar, Union

from .utils import check_positive_int

logger = logging.getLogger(__name__)

SweepExecutor = Union["DefaultSweepExecutor", "AsyncSweepExecutor"]

T = TypeVar("T")
R = TypeVar("R")


class DefaultSweepExecutor:
    """Default sweep executor. Runs every work item in turn on the event loop."""

    @property
    def context(self) -> str:
        return "default"

    async def execute(self, items: Sequence[T], handler: Callable[[T], R]) -> List[R]:
        """Apply the handler to each item and return the results in order.

        :param items: Work items.
        :type items: list
        :param handler: Pure function applied to each item.
        :type handler: callable
        :return: Results in submission order.
        :rtype: list
        """
        results = []
        for item in items:
            results.append(handler(item))
        logger.debug("default sweep: %d items", len(results))
        return results


class AsyncSweepExecutor:
    """Async sweep executor.

    Handlers run in worker threads; results are merged in submission order,
    so reports do not depend on scheduling.

    :param concurrency: Maximum number of handlers in flight.
    :type concurrency: int
    """

    def __init__(self, concurrency: int = 4) -> None:
        self._concurrency = check_positive_int(concurrency, "concurrency")

    @property
    def context(self) -> str:
        return "async"

    @property
    def concurrency(self) -> int:
        return self._concurrency

    async def execute(self, items: Sequence[T], handler: Callable[[T], R]) -> List[R]:
        """Apply the handler to each item in worker threads.

        :param items: Work items.
        :type items: list
        :param handler: Pure function applied to each item.
        :type handler: callable
        :return: Results in submission order.
        :rtype: list
        """
        gate = asyncio.Semaphore(self._concurrency)

        async def run(item: T) -> R:
            async with gate:
                return await asyncio.to_thread(handler, item)

        results = await asyncio.gather(*(run(item) for item in items))
        logger.debug("async sweep: %d items, concurrency %d", len(results), self._concurrency)
        return list(results)


def run_sweep(
    items: Sequence[T], handler: Callable[[T], R], executor: Optional[SweepExecutor] = None
) -> List[R]:
    """Run a sweep to completion from synchronous code."""
    chosen = executor or DefaultSweepExecutor()
    return asyncio.run(chosen.execute(list(items), handler))
