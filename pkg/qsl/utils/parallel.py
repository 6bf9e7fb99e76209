"""Order-stable parallel map over experiment trials."""

import logging
import os
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, TypeVar

from tqdm import tqdm

from qsl import constants
from qsl.utils.checks import InvalidConfigurationError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    """Number of worker threads allowed by the environment."""
    value = os.environ.get(constants.THREADS_ENV_VARIABLE)
    if value is None or not value.strip():
        return constants.DEFAULT_THREADS
    try:
        threads = int(value)
    except ValueError as e:
        raise InvalidConfigurationError(
            f"{constants.THREADS_ENV_VARIABLE} must be an integer, got '{value}'"
        ) from e
    if threads < 1:
        raise InvalidConfigurationError(
            f"{constants.THREADS_ENV_VARIABLE} must be >= 1, got {threads}"
        )
    return threads


def ordered_map(
    func: Callable[[T], R], items: Sequence[T], desc: Optional[str] = None
) -> list[R]:
    """Apply func to every item and return the results in item order.

    Args:
        func: work for one item; must only touch state it owns
        items: inputs, typically trial indices
        desc: label of a progress bar on stderr; no bar when None

    Returns:
        Results in the order of items, independent of the thread count.
    """
    threads = min(worker_count(), max(1, len(items)))
    logger.debug("mapping %d item(s) on %d thread(s)", len(items), threads)
    with tqdm(total=len(items), desc=desc, disable=desc is None, leave=False) as bar:
        if threads == 1:
            results = []
            for item in items:
                results.append(func(item))
                bar.update()
            return results
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = []
            for result in executor.map(func, items):
                results.append(result)
                bar.update()
            return results
