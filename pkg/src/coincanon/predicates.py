"""Executable predicates for the structural facts the fast checkers rely on.

Each predicate evaluates its own hypotheses and reports one of three
outcomes, so corpus sweeps can distinguish "verified" from "vacuously true":

* ``HOLDS``: hypotheses satisfied and the claimed conclusion checked out.
* ``FAILS``: hypotheses satisfied but the conclusion is false. On a correct
  implementation this never happens; a failure either falsifies one of the
  encoded results or exposes a bug, and is always worth a loud report.
* ``NOT_APPLICABLE``: the hypotheses do not hold for this system.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import CoinSystem, LimitExceeded
from .characterize import _kz3_non_canonical
from .fastcheck import _is_pair_sum
from .oracle import _guard, _scan, smallest_counterexample
from .solvers import _greedy_counts, _iter_optimal_counts, _opt_sizes


class Outcome(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class PredicateResult:
    outcome: Outcome
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    @property
    def failed(self) -> bool:
        return self.outcome is Outcome.FAILS


def _na(detail: str) -> PredicateResult:
    return PredicateResult(Outcome.NOT_APPLICABLE, detail)


def _verdict(ok: bool, detail: str = "") -> PredicateResult:
    return PredicateResult(Outcome.HOLDS if ok else Outcome.FAILS, detail)


def _has_disjoint_optimal(
    denoms: tuple[int, ...], x: int, sizes: list[int], cap: int
) -> bool:
    """Does some minimum-size representation of x avoid every denomination
    the greedy representation uses?"""
    grd = _greedy_counts(denoms, x)
    seen = 0
    for counts in _iter_optimal_counts(denoms, sizes, x):
        if all(not (a and b) for a, b in zip(grd, counts)):
            return True
        seen += 1
        if seen >= cap:
            raise LimitExceeded(
                f"more than {cap} optimal representations of {x}; disjointness undecided"
            )
    return False


def disjoint_support(
    system: CoinSystem, budget: Optional[int] = None, cap: int = 10_000
) -> PredicateResult:
    """At the smallest counterexample, some optimal representation uses a set
    of denominations disjoint from the greedy one's."""
    cex = smallest_counterexample(system, budget)
    if cex is None:
        return _na("canonical")
    sizes = _opt_sizes(system.denoms, cex.x)
    ok = _has_disjoint_optimal(system.denoms, cex.x, sizes, cap)
    return _verdict(ok, f"x={cex.x}")


def disjoint_support_universal(
    system: CoinSystem, budget: Optional[int] = None, cap: int = 10_000
) -> PredicateResult:
    """Stronger, reported-only variant: every optimal representation at the
    smallest counterexample is support-disjoint from the greedy one.

    Not asserted anywhere; sweeps report its empirical status.
    """
    cex = smallest_counterexample(system, budget)
    if cex is None:
        return _na("canonical")
    grd = _greedy_counts(system.denoms, cex.x)
    sizes = _opt_sizes(system.denoms, cex.x)
    seen = 0
    for counts in _iter_optimal_counts(system.denoms, sizes, cex.x):
        if any(a and b for a, b in zip(grd, counts)):
            return _verdict(False, f"x={cex.x}, overlapping optimal {counts}")
        seen += 1
        if seen >= cap:
            raise LimitExceeded(f"more than {cap} optimal representations of {cex.x}")
    return _verdict(True, f"x={cex.x}")


def window_bound(system: CoinSystem, budget: Optional[int] = None) -> PredicateResult:
    """The smallest counterexample lies strictly between ``c3 + 1`` and
    ``c_{m-1} + c_m``.

    Checked against an unrestricted scan from 1 up to twice the largest
    denomination, so an off-by-one at either end of the window would show up
    as a failure rather than being masked by a window-restricted scan.
    """
    d = system.denoms
    if len(d) < 3:
        return _na("needs at least three denominations")
    stop = 2 * d[-1]
    _guard(stop, budget)
    hit, _, _ = _scan(d, 1, stop)
    if hit is None:
        return _na("canonical")
    lo = d[2] + 1
    hi = d[-2] + d[-1]
    return _verdict(lo < hit < hi, f"smallest counterexample {hit}, window ({lo}, {hi})")


def propagation_bound(system: CoinSystem, budget: Optional[int] = None) -> PredicateResult:
    """A non-canonical three-coin prefix forces a counterexample of the full
    system below ``c_m + c3``."""
    d = system.denoms
    if len(d) < 4:
        return _na("needs at least four denominations")
    if not _kz3_non_canonical(d):
        return _na("three-coin prefix canonical")
    bound = d[-1] + d[2]
    _guard(bound, budget)
    hit, _, _ = _scan(d, 1, bound)
    return _verdict(hit is not None, f"bound {bound}" + (f", witness {hit}" if hit else ""))


def _sandwich(
    system: CoinSystem, budget: Optional[int]
) -> tuple[Optional[str], Optional[int], Optional[int]]:
    """Hypothesis gate shared by the pair-witness and gap results.

    Requires: canonical three-coin prefix, non-canonical (but tight) prefix
    of all-but-the-last coin, non-canonical (but tight) full system. Returns
    ``(unmet_reason, full_smallest_cex, prefix_smallest_cex)``; the reason is
    None when all hypotheses hold. A canonical three-coin prefix is tight by
    definition, so no separate check is needed for it.
    """
    d = system.denoms
    if len(d) < 5:
        return "needs at least five denominations", None, None
    if _kz3_non_canonical(d):
        return "three-coin prefix non-canonical", None, None
    stop = d[-2] + d[-1]
    _guard(stop, budget)
    full_x, _, _ = _scan(d, 1, stop)
    if full_x is None:
        return "full system canonical", None, None
    if full_x < d[-1]:
        return "full system not tight", full_x, None
    p = d[:-1]
    pstop = p[-2] + p[-1]
    prefix_x, _, _ = _scan(p, 1, pstop)
    if prefix_x is None:
        return "prefix without the top coin is canonical", full_x, None
    if prefix_x < p[-1]:
        return "prefix without the top coin is not tight", full_x, prefix_x
    return None, full_x, prefix_x


def _pair_cex_exists(
    d: tuple[int, ...], firsts: tuple[int, ...], grd: list[int], opt: list[int]
) -> Optional[int]:
    """Smallest counterexample of the form ``ci + cj > top`` with ci drawn
    from ``firsts`` and cj any non-unit, non-top denomination."""
    top = d[-1]
    best = None
    for ci in firsts:
        for cj in d[1:-1]:
            if cj > ci:
                break
            s = ci + cj
            if s > top and grd[s] > opt[s] and (best is None or s < best):
                best = s
    return best


def _full_arrays(d: tuple[int, ...], budget: Optional[int]) -> tuple[list[int], list[int]]:
    stop = 2 * d[-2] + 1
    _guard(stop, budget)
    _, grd, opt = _scan(d, 1, stop, stop_at_hit=False)
    return grd, opt


def pair_witness(system: CoinSystem, budget: Optional[int] = None) -> PredicateResult:
    """Under the sandwich hypotheses, some counterexample is a sum of two
    non-unit denominations below the top coin, exceeding the top coin."""
    reason, _, _ = _sandwich(system, budget)
    if reason is not None:
        return _na(reason)
    d = system.denoms
    grd, opt = _full_arrays(d, budget)
    found = _pair_cex_exists(d, tuple(reversed(d[1:-1])), grd, opt)
    return _verdict(
        found is not None,
        f"counterexample {found}" if found is not None
        else "no pair-sum counterexample above the top coin",
    )


def final_gap_is_max(system: CoinSystem, budget: Optional[int] = None) -> PredicateResult:
    """Under the sandwich hypotheses, if no sum ``c_m + c_i`` above the top
    coin is a counterexample, the top gap is the largest gap."""
    reason, _, _ = _sandwich(system, budget)
    if reason is not None:
        return _na(reason)
    d = system.denoms
    grd, opt = _full_arrays(d, budget)
    blocked = _pair_cex_exists(d, (d[-2],), grd, opt)
    if blocked is not None:
        return _na(f"pair sum {blocked} with the second-largest coin is a counterexample")
    gs = system.gaps()
    return _verdict(gs[-1] == max(gs), f"gaps {gs}")


def smallest_is_pair_sum(system: CoinSystem, budget: Optional[int] = None) -> PredicateResult:
    """Under the sandwich hypotheses, if no sum involving either of the two
    largest non-top denominations exceeds the top coin as a counterexample,
    the smallest counterexample is itself a sum of two denominations."""
    reason, full_x, _ = _sandwich(system, budget)
    if reason is not None:
        return _na(reason)
    d = system.denoms
    grd, opt = _full_arrays(d, budget)
    blocked = _pair_cex_exists(d, (d[-2], d[-3]), grd, opt)
    if blocked is not None:
        return _na(f"pair sum {blocked} with a top-adjacent coin is a counterexample")
    assert full_x is not None
    return _verdict(_is_pair_sum(d, full_x), f"smallest counterexample {full_x}")


PREDICATES = {
    "thm1": disjoint_support,
    "thm3": window_bound,
    "thm8": propagation_bound,
    "thm11": pair_witness,
    "lem12": final_gap_is_max,
    "lem13": smallest_is_pair_sum,
}
