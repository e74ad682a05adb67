"""Deterministic fan-out over a process pool.

Shards are dispatched in order and results are collected in submission
order, so parallel runs merge to exactly the sequential answer.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, Tuple


def run_sharded(fn: Callable, shards: Sequence[Tuple], workers: int) -> List:
    if workers <= 1 or len(shards) <= 1:
        return [fn(*args) for args in shards]
    with ProcessPoolExecutor(max_workers=min(workers, len(shards))) as pool:
        futures = [pool.submit(fn, *args) for args in shards]
        return [f.result() for f in futures]
