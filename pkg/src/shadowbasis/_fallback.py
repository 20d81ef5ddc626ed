"""Pure-Python kernels.  Same signatures and results as the compiled ``_kernels``."""
from __future__ import annotations

from bisect import bisect_left
from itertools import permutations, product
from typing import Sequence


def lis(seq: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience sorting)."""
    tops: list[int] = []
    for x in seq:
        k = bisect_left(tops, x)
        if k == len(tops):
            tops.append(x)
        else:
            tops[k] = x
    return len(tops)


def rsk(word: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(word, 1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            cur = P[row]
            k = bisect_left(cur, x)
            if k == len(cur):
                cur.append(x)
                Q[row].append(step)
                break
            x, cur[k] = cur[k], x
            row += 1
    return P, Q


def stat_histogram(n: int, r: int, first: int = 0) -> list[int]:
    """Histogram of ``r*lis(C_0) + sum over colored positions of (r - color)``.

    Runs over every colored permutation of ``[n]``; ``first > 0`` restricts to
    ``sigma(1) == first`` so callers can split the work.
    """
    counts = [0] * (r * n + 1)
    for sigma in permutations(range(1, n + 1)):
        if first and sigma[0] != first:
            continue
        for colors in product(range(r), repeat=n):
            zero = [v for v, c in zip(sigma, colors) if c == 0]
            k = r * lis(zero) + sum(r - c for c in colors if c)
            counts[k] += 1
    return counts
