"""Fast canonicity deciders: Pearson's general check and the quadratic
pair-scan check for tight systems.

``pearson_check`` works on any system and pins down the smallest
counterexample. The tight checks trade generality for speed: they only
promise correct Canonical verdicts on tight systems (no counterexample below
the largest denomination), but any NonCanonical verdict they emit is backed
by a genuine counterexample regardless.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Literal, Optional

from .core import (
    CoinSystem,
    Counterexample,
    Verdict,
    WrongArity,
)
from .characterize import _kz3_non_canonical, propagation_witness
from .oracle import counterexample_at
from .solvers import _greedy_counts, _greedy_size

# Largest denomination for which pair membership uses a direct-address table.
_BITMAP_LIMIT = 1 << 24


def _pearson_scan(denoms: tuple[int, ...]) -> Optional[int]:
    """Smallest firing candidate amount, or None when no candidate fires.

    For every pair ``l <= r`` of denomination indices below the top one, the
    candidate takes the greedy representation of ``c_{r+1} - 1``, keeps its
    entries strictly between l and r, bumps entry l by one and zeroes the
    rest. The candidate amount is a counterexample whenever its greedy size
    exceeds the candidate's own size.
    """
    m = len(denoms)
    best = None
    for r in range(m - 1):  # r is the 0-based index of c_{r+1} in 1-based terms
        g = _greedy_counts(denoms, denoms[r + 1] - 1)
        for left in range(r, -1, -1):
            x = (g[left] + 1) * denoms[left]
            cnt = g[left] + 1
            for i in range(left + 1, r + 1):
                k = g[i]
                if k:
                    x += k * denoms[i]
                    cnt += k
            if (best is None or x < best) and _greedy_size(denoms, x) > cnt:
                best = x
    return best


def pearson_check(system: CoinSystem, budget: Optional[int] = None) -> Verdict:
    """Decide canonicity by scanning structured candidate amounts.

    Every candidate that fires is a real counterexample, and the smallest
    counterexample of a non-canonical system always appears among the
    candidates, so the minimum firing amount is the smallest counterexample.
    Systems with fewer than three denominations have no candidate pairs and
    come out canonical, which is correct.
    """
    x = _pearson_scan(system.denoms)
    if x is None:
        return Verdict()
    witness = counterexample_at(system, x, budget)
    if witness is None:  # pragma: no cover - a firing candidate is always a counterexample
        raise AssertionError(f"candidate {x} fired but is not a counterexample")
    return Verdict(witness)


@dataclass(frozen=True)
class TightCheckReport:
    """Outcome and bookkeeping of one tight-system check."""

    verdict: Verdict
    variant: Literal["verbatim", "extended"]
    pairs_scanned: int
    step1_fired: bool
    membership: Literal["bitmap", "bisect"]


def _tight_check(
    system: CoinSystem, variant: Literal["verbatim", "extended"], budget: Optional[int]
) -> TightCheckReport:
    d = system.denoms
    n = len(d)
    if n < 6:
        raise WrongArity(f"tight check needs at least 6 denominations, got {n}")
    top = d[-1]
    second = d[-2]
    use_bitmap = second <= _BITMAP_LIMIT
    membership: Literal["bitmap", "bisect"] = "bitmap" if use_bitmap else "bisect"

    if _kz3_non_canonical(d):
        witness = propagation_witness(system, budget)
        return TightCheckReport(Verdict(witness), variant, 0, True, membership)

    if use_bitmap:
        table = bytearray(second + 1)
        for c in d[:-1]:
            table[c] = 1
        def is_coin(v: int) -> bool:
            return table[v] == 1
    else:
        def is_coin(v: int) -> bool:
            i = bisect_left(d, v)
            return i < n and d[i] == v

    # All pairs of the non-top denominations whose sum exceeds the top coin.
    # Such a sum is a counterexample exactly when the remainder after the top
    # coin is not itself a denomination (greedy then needs > 2 coins while
    # the pair gives 2). Sums are monotone in both indices, so the loops
    # stop as soon as they fall below the top coin.
    pairs = 0
    best = None
    for i in range(n - 2, -1, -1):
        ci = d[i]
        if ci + ci <= top:
            break
        for j in range(i, -1, -1):
            s = ci + d[j]
            pairs += 1
            if s <= top:
                break
            if (best is None or s < best) and not is_coin(s - top):
                best = s
    if best is not None:
        witness = counterexample_at(system, best, budget)
        if witness is None:  # pragma: no cover - flagged sums always are counterexamples
            raise AssertionError(f"flagged pair sum {best} is not a counterexample")
        return TightCheckReport(Verdict(witness), variant, pairs, False, membership)

    if variant == "extended":
        k, rem = divmod(top, second)
        if rem != 0:
            x = (k + 1) * second
            if _greedy_size(d, x) > k + 1:
                witness = counterexample_at(system, x, budget)
                if witness is None:  # pragma: no cover
                    raise AssertionError(f"one-point amount {x} is not a counterexample")
                return TightCheckReport(Verdict(witness), variant, pairs, False, membership)

    return TightCheckReport(Verdict(), variant, pairs, False, membership)


def is_canonical_tight_verbatim(
    system: CoinSystem, budget: Optional[int] = None
) -> TightCheckReport:
    """The unmodified tight-system check: three-coin test, then pair scan.

    The caller certifies tightness. Known gap, kept on purpose: a tight
    non-canonical system whose every prefix is canonical can slip through
    when no pair sum exceeds the top coin (e.g. <1,5,10,25,50,100,220>);
    ``is_canonical_tight_extended`` closes it. NonCanonical verdicts are
    always genuine, tight or not.
    """
    return _tight_check(system, "verbatim", budget)


def is_canonical_tight_extended(
    system: CoinSystem, budget: Optional[int] = None
) -> TightCheckReport:
    """Pair scan plus a final one-point test on the top coin.

    When the pair scan is clean and the top coin is not an exact multiple of
    the second-largest, the greedy size of ``(k+1) * c_m`` (with
    ``k = c_{m+1} // c_m``) exposes exactly the systems the pair scan cannot
    see.
    """
    return _tight_check(system, "extended", budget)


def _is_pair_sum(denoms: tuple[int, ...], x: int) -> bool:
    members = set(denoms)
    for c in denoms[1:]:
        if 2 * c > x:
            break
        if (x - c) in members:
            return True
    return False


def smallest_witness_is_pair(system: CoinSystem, cex: Counterexample) -> bool:
    """True iff the witness amount is a sum of two non-unit denominations.

    The caller passes the smallest counterexample of the system; this is the
    structural fact the quadratic pair scan relies on.
    """
    return _is_pair_sum(system.denoms, cex.x)
