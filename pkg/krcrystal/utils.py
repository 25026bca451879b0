__all__ = [
    "suppress_warning",
    "check_positive_int",
    "check_colors",
]

import logging
from contextlib import contextmanager
from typing import Iterable, Iterator

from .exceptions import ColorError, CrystalUsageError
from .typings import Colors


@contextmanager
def suppress_warning(logger_name: str) -> Iterator[None]:
    """Suppress logger messages.

    :param logger_name: Full name of the logger.
    :type logger_name: str
    """
    logger = logging.getLogger(logger_name)
    original_log_level = logger.getEffectiveLevel()
    logger.setLevel(logging.CRITICAL)
    try:
        yield
    finally:
        logger.setLevel(original_log_level)


def check_positive_int(value: int, name: str) -> int:
    """Return the value if it is a positive integer.

    :param value: Value to check.
    :type value: int
    :param name: Parameter name used in the error message.
    :type name: str
    :return: The value.
    :rtype: int
    :raise krcrystal.exceptions.CrystalUsageError: If value is not positive.
    """
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise CrystalUsageError(f"{name} must be a positive integer, got {value!r}")
    return value


def check_colors(colors: Iterable[int], rank: int) -> Colors:
    """Return the colors as a frozen set after range checking.

    :param colors: Colors to check.
    :type colors: [int]
    :param rank: Rank n, so that valid colors are 0..n.
    :type rank: int
    :return: Frozen set of colors.
    :rtype: frozenset
    :raise krcrystal.exceptions.ColorError: If a color is out of range.
    """
    result = frozenset(colors)
    for color in result:
        if isinstance(color, bool) or not isinstance(color, int):
            raise ColorError(f"color {color!r} is not an integer")
        if not 0 <= color <= rank:
            raise ColorError(f"color {color} outside 0..{rank}")
    return result
