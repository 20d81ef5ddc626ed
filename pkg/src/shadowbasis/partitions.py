"""Integer partitions, hook lengths and standard Young tableau counts."""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterator

Partition = tuple[int, ...]


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse lexicographic order.

    >>> list(partitions(3))
    [(3,), (2, 1), (1, 1, 1)]
    """
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True when the diagram of ``inner`` fits inside that of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [row - j + conj[j] - i - 1 for i, row in enumerate(lam) for j in range(row)]


@lru_cache(maxsize=None)
def num_syt(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    n = sum(lam)
    hooks = 1
    for h in hook_lengths(lam):
        hooks *= h
    count, rem = divmod(factorial(n), hooks)
    assert rem == 0, f"hook product {hooks} does not divide {n}!"
    return count


def num_syt_by_corners(lam: Partition) -> int:
    """Count SYT by recursively removing the cell holding the largest entry.

    Independent of the hook length formula; used to validate it.
    """
    return _count_corners(tuple(lam))


@lru_cache(maxsize=None)
def _count_corners(lam: Partition) -> int:
    if not lam:
        return 1
    total = 0
    for i, part in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if part > below:
            smaller = lam[:i] + (part - 1,) + lam[i + 1:]
            total += _count_corners(tuple(p for p in smaller if p))
    return total
