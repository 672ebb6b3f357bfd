"""Independent brute-force reference implementations for the tests.

These enumerate count vectors directly and never touch the package's
dynamic-programming or greedy code paths, so they can serve as oracles for
both.
"""

from __future__ import annotations

from typing import Optional


def all_representations(denoms: tuple[int, ...], x: int) -> list[tuple[int, ...]]:
    """Every count vector whose weighted sum is exactly x."""
    out: list[tuple[int, ...]] = []
    counts = [0] * len(denoms)

    def rec(i: int, rem: int) -> None:
        if i < 0:
            if rem == 0:
                out.append(tuple(counts))
            return
        c = denoms[i]
        if i == 0:  # unit coin: forced
            counts[0] = rem
            out.append(tuple(counts))
            counts[0] = 0
            return
        for k in range(rem // c, -1, -1):
            counts[i] = k
            rec(i - 1, rem - k * c)
        counts[i] = 0

    rec(len(denoms) - 1, x)
    return out


def min_size_bruteforce(denoms: tuple[int, ...], x: int) -> int:
    return min(sum(counts) for counts in all_representations(denoms, x))


def all_optimal_bruteforce(denoms: tuple[int, ...], x: int) -> set[tuple[int, ...]]:
    reps = all_representations(denoms, x)
    best = min(sum(c) for c in reps)
    return {c for c in reps if sum(c) == best}


def greedy_size_bruteforce(denoms: tuple[int, ...], x: int) -> int:
    size = 0
    while x:
        c = max(d for d in denoms if d <= x)
        size += 1
        x -= c
    return size


def smallest_counterexample_bruteforce(
    denoms: tuple[int, ...], limit: int
) -> Optional[int]:
    """First amount up to limit where greedy beats no minimal representation."""
    for x in range(1, limit + 1):
        if greedy_size_bruteforce(denoms, x) > min_size_bruteforce(denoms, x):
            return x
    return None
