"""
Deterministic fan-out of independent sampling tasks.

Each task receives its own child stream keyed by task index, so results are
identical whatever the worker count. Results come back in task order.
"""

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from graphgen.sampling.stream import RandomStream

T = TypeVar("T")
R = TypeVar("R")


def map_with_children(
    task: Callable[[T, RandomStream], R],
    items: Sequence[T],
    stream: RandomStream,
    workers: int = 1,
) -> list[R]:
    """
    Run task(item, child_stream) for every item.

    Args:
        task: Work function taking the item and its child stream
        items: Work items; item i gets stream.child(i)
        stream: Parent stream; child draw counts are absorbed into its tally
        workers: Thread count, 1 runs inline

    Returns:
        Task results in item order
    """
    children = [stream.child(i) for i in range(len(items))]

    if workers <= 1 or len(items) <= 1:
        results = [task(item, sub) for item, sub in zip(items, children)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(task, items, children))

    for sub in children:
        stream.absorb(sub)
    return results
