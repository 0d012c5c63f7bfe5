"""Deterministic chunked map-reduce.

Work is split into fixed-size chunks indexed 0..n-1; each chunk result is a
pure function of its index, and the caller reduces the ordered result list.
Worker count only affects scheduling, never values, which is what makes
every estimate in this package bit-identical across 1, 4, or 16 workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")

#: Samples per chunk for Monte Carlo accumulators.  Fixed: changing it
#: changes summation order and therefore the low bits of MC results.
CHUNK = 1 << 15

ENV_THREADS = "CONJ_DENSITY_THREADS"


def resolve_workers(explicit: int | None = None) -> int:
    """Worker count from an explicit value, else the environment, else 1."""
    if explicit is not None:
        return max(1, int(explicit))
    env = os.environ.get(ENV_THREADS)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def map_chunks(fn: Callable[[int], T], n_chunks: int, workers: int = 1) -> list[T]:
    """Evaluate fn(0..n_chunks-1), possibly in parallel; results in index order."""
    if n_chunks <= 0:
        return []
    if workers <= 1 or n_chunks == 1:
        return [fn(i) for i in range(n_chunks)]
    with ThreadPoolExecutor(max_workers=min(workers, n_chunks)) as pool:
        return list(pool.map(fn, range(n_chunks)))


def chunk_ranges(total: int, chunk: int = CHUNK) -> list[tuple[int, int]]:
    """[start, stop) index ranges covering 0..total with fixed chunk size."""
    return [(s, min(s + chunk, total)) for s in range(0, total, chunk)]


def kahan_total(values: Sequence[float]) -> float:
    """Compensated (Kahan-Neumaier) sum of per-chunk partials, always in
    index order."""
    total = 0.0
    comp = 0.0
    for v in values:
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
    return total + comp
