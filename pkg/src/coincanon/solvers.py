"""Greedy and minimum-size change computations.

The module-level functions operate on :class:`~coincanon.core.CoinSystem`;
the underscore-prefixed helpers work on raw denomination tuples and are the
hot paths shared by the oracle and the fast checkers.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import (
    DEFAULT_DP_BUDGET,
    CoinSystem,
    LimitExceeded,
    Representation,
)


def _greedy_counts(denoms: tuple[int, ...], x: int) -> list[int]:
    counts = [0] * len(denoms)
    rem = x
    for i in range(len(denoms) - 1, -1, -1):
        c = denoms[i]
        if c <= rem:
            counts[i], rem = divmod(rem, c)
    return counts


def _greedy_size(denoms: tuple[int, ...], x: int) -> int:
    """Size of the greedy representation, skipping unused denominations."""
    size = 0
    hi = len(denoms)
    while x:
        hi = bisect_right(denoms, x, 0, hi)
        q, x = divmod(x, denoms[hi - 1])
        size += q
    return size


def greedy(system: CoinSystem, x: int) -> Representation:
    """Repeatedly take the largest denomination not exceeding the remainder.

    Always succeeds because the unit coin is present.
    """
    if x < 0:
        raise ValueError("amount must be non-negative")
    counts = _greedy_counts(system.denoms, x)
    return Representation(tuple(counts), x, sum(counts))


def greedy_size(system: CoinSystem, x: int) -> int:
    if x < 0:
        raise ValueError("amount must be non-negative")
    return _greedy_size(system.denoms, x)


def _check_budget(entries: int, budget: Optional[int]) -> None:
    cap = DEFAULT_DP_BUDGET if budget is None else budget
    if entries > cap:
        raise LimitExceeded(f"{entries} table entries exceed the budget of {cap}")


def _opt_sizes(denoms: tuple[int, ...], limit: int) -> list[int]:
    """Minimal representation size for every amount 0..limit."""
    sizes = list(range(limit + 1))  # unit-coin baseline
    for c in denoms[1:]:
        if c > limit:
            break
        for x in range(c, limit + 1):
            v = sizes[x - c] + 1
            if v < sizes[x]:
                sizes[x] = v
    return sizes


@dataclass(frozen=True)
class DpTable:
    """Minimal sizes for all amounts 0..limit under one coin system."""

    system: CoinSystem
    limit: int
    opt_size: tuple[int, ...]


def dp_table(system: CoinSystem, limit: int, budget: Optional[int] = None) -> DpTable:
    if limit < 0:
        raise ValueError("limit must be non-negative")
    _check_budget(limit + 1, budget)
    return DpTable(system, limit, tuple(_opt_sizes(system.denoms, limit)))


def _optimal_counts(denoms: tuple[int, ...], sizes: list[int], x: int) -> list[int]:
    """Backtrack one minimal representation, preferring larger denominations."""
    counts = [0] * len(denoms)
    rem = x
    hi = len(denoms) - 1
    while rem:
        target = sizes[rem] - 1
        for i in range(hi, -1, -1):
            c = denoms[i]
            if c <= rem and sizes[rem - c] == target:
                counts[i] += 1
                rem -= c
                hi = i  # later coins can only be this large or smaller
                break
        else:  # pragma: no cover - sizes table always admits a step
            raise AssertionError("inconsistent size table")
    return counts


def optimal(system: CoinSystem, x: int, budget: Optional[int] = None) -> Representation:
    """A minimum-size representation of x.

    Deterministic: among denominations that reach the minimum, the largest is
    preferred at every step.
    """
    if x < 0:
        raise ValueError("amount must be non-negative")
    _check_budget(x + 1, budget)
    sizes = _opt_sizes(system.denoms, x)
    counts = _optimal_counts(system.denoms, sizes, x)
    return Representation(tuple(counts), x, sizes[x])


def _iter_optimal_counts(
    denoms: tuple[int, ...], sizes: list[int], x: int
) -> Iterator[tuple[int, ...]]:
    """Yield every minimal-size count vector for x, each exactly once.

    Coins are chosen in non-increasing index order, so each multiset of coins
    corresponds to a unique path.
    """
    counts = [0] * len(denoms)

    def rec(rem: int, hi: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield tuple(counts)
            return
        target = sizes[rem] - 1
        for i in range(hi, -1, -1):
            c = denoms[i]
            if c <= rem and sizes[rem - c] == target:
                counts[i] += 1
                yield from rec(rem - c, i)
                counts[i] -= 1

    return rec(x, len(denoms) - 1)


@dataclass(frozen=True)
class OptimalSet:
    """All minimum-size representations of one amount (possibly truncated)."""

    representations: tuple[Representation, ...]
    truncated: bool


def optimal_all(
    system: CoinSystem,
    x: int,
    cap: int = 10_000,
    budget: Optional[int] = None,
) -> OptimalSet:
    """Every minimum-size representation of x, truncated at ``cap``."""
    if x < 0:
        raise ValueError("amount must be non-negative")
    if cap < 1:
        raise ValueError("cap must be at least 1")
    _check_budget(x + 1, budget)
    sizes = _opt_sizes(system.denoms, x)
    reps = []
    truncated = False
    for counts in _iter_optimal_counts(system.denoms, sizes, x):
        if len(reps) == cap:
            truncated = True
            break
        reps.append(Representation(counts, x, sizes[x]))
    return OptimalSet(tuple(reps), truncated)
