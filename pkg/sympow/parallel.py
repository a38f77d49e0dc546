from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, List, Sequence


def run_ordered(tasks: Sequence[Callable[[], Any]], max_parallel: int = 1) -> List[Any]:
    """Run independent tasks, returning results in submission order. The first failure (in order) is re-raised."""
    if max_parallel <= 1 or len(tasks) <= 1:
        return [task() for task in tasks]

    results: List[Any] = [None] * len(tasks)

    def wrapper(fn: Callable[[], Any]):
        try:
            return fn()
        except Exception as e:
            return e

    with ThreadPoolExecutor(max_workers=max_parallel) as executor:
        future_to_index = {executor.submit(wrapper, fn): i for i, fn in enumerate(tasks)}

        for future in as_completed(future_to_index):
            idx = future_to_index[future]
            results[idx] = future.result()

    for r in results:
        if isinstance(r, Exception):
            raise r

    return results
