"""Small shared helpers."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_budget() -> int:
    """Parallelism cap from NP_ATLAS_THREADS (default 1)."""
    raw = os.environ.get("NP_ATLAS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """Map preserving input order, fanning out only when a budget is set."""
    items = list(items)
    budget = thread_budget()
    if budget <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=budget) as pool:
        return list(pool.map(fn, items))
