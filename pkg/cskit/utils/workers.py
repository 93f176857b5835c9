import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], size: int) -> list[Sequence[T]]:
    return [items[k : k + size] for k in range(0, len(items), size)]


def ordered_map(fn: Callable[[Sequence[T]], list[R]], items: Sequence[T], workers: int = 1) -> list[R]:
    """Apply fn to chunks of items and concatenate the results in input order.

    fn receives a chunk and returns one result per item. With workers > 1 the
    chunks run in a process pool, so fn must be a module-level function.
    """
    if workers <= 1 or len(items) < 2:
        return list(fn(items))

    size = max(1, -(-len(items) // (workers * 4)))
    chunks = chunked(items, size)
    logger.info(f"Dispatching {len(items)} items in {len(chunks)} chunks to {workers} workers")
    results: list[R] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(fn, chunks):
            results.extend(part)
    return results
