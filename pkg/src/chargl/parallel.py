"""Ordered parallel map used by the per-weight verifiers."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional


def default_jobs() -> int:
    raw = os.environ.get("CHARGL_JOBS", "").strip()
    if not raw:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise ValueError(f"CHARGL_JOBS must be a positive integer, got {raw!r}")
    if jobs < 1:
        raise ValueError(f"CHARGL_JOBS must be a positive integer, got {raw!r}")
    return jobs


def ordered_map(fn: Callable, items: Iterable, jobs: Optional[int] = None) -> list:
    """``[fn(x) for x in items]``, optionally spread over worker processes.

    Results always come back in input order, so output never depends on
    the number of workers.
    """
    items = list(items)
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    chunk = max(16, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))
