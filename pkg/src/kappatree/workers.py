"""Worker-pool sizing controlled by the KAPPATREE_THREADS environment variable."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "KAPPATREE_THREADS"


def worker_count() -> int:
    """Return the worker cap from KAPPATREE_THREADS (0 or unset means auto)."""
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ENV_VAR} must be >= 0, got {value}")
    if value == 0:
        return os.cpu_count() or 1
    return value


def parallel_map(fn: Callable[[T], R], items: Iterable[T], min_chunk: int = 8) -> list[R]:
    """Map ``fn`` over ``items`` with results in input order.

    Runs on a thread pool capped by :func:`worker_count`; every ``fn`` must be
    a pure function of its argument so ordering is the only determinism concern.
    """
    seq: Sequence[T] = list(items)
    workers = min(worker_count(), len(seq))
    if workers <= 1 or len(seq) < min_chunk:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, seq))
