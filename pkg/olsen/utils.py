# -*- coding: utf-8 -*-
"""
    olsen.utils
    ~~~~~~~~~~~
"""
from __future__ import absolute_import
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from logging import getLogger as get_logger
import math


__all__ = ['LOGGER', 'LOG', 'NumericFailure', 'noop', 'parallel_map', 'plain']


#: The standard logger.
LOGGER = get_logger('Olsen')

#: The standard log function.
LOG = LOGGER.debug


#: Just returns the first argument.
noop = lambda x: x


class NumericFailure(RuntimeError):
    """A numeric routine could not deliver a result within its tolerances.
    Invalid input raises :exc:`ValueError` instead.
    """


def parallel_map(func, items, threads=1):
    """Maps `func` over `items` and keeps the order.  A thread pool is used
    when `threads` is more than 1.
    """
    items = list(items)
    if not threads or threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))


def plain(value):
    """Converts records, numpy values and containers into JSON-ready data.
    Non-finite floats become ``None``.
    """
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if hasattr(value, 'tolist'):
        # numpy arrays and scalars, probability vectors.
        value = value.tolist()
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return dict((str(k), plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value
