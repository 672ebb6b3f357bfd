"""Constant-window canonicity tests for systems with up to five denominations.

These checkers decide canonicity from a handful of structural conditions
instead of a full scan, but every witness they report is a genuine
counterexample with a true optimal representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    CoinSystem,
    Counterexample,
    NotAnExtension,
    TheoremViolation,
    Verdict,
    WrongArity,
)
from .oracle import first_counterexample_in, smallest_counterexample
from .solvers import _greedy_size, greedy, optimal


@dataclass(frozen=True)
class ThreeCoinAnalysis:
    """Quotient/remainder analysis deciding a three-coin system.

    With ``c3 = q*c2 + r`` and ``0 <= r < c2``, the system is non-canonical
    exactly when ``0 < r < c2 - q``.
    """

    q: int
    r: int
    non_canonical: bool


def kz3_analysis(system: CoinSystem) -> ThreeCoinAnalysis:
    if system.m != 3:
        raise WrongArity(f"three-coin analysis needs exactly 3 denominations, got {system.m}")
    _, c2, c3 = system.denoms
    q, r = divmod(c3, c2)
    return ThreeCoinAnalysis(q, r, 0 < r < c2 - q)


def _kz3_non_canonical(denoms: tuple[int, ...]) -> bool:
    q, r = divmod(denoms[2], denoms[1])
    return 0 < r < denoms[1] - q


def check_three(system: CoinSystem, budget: Optional[int] = None) -> Verdict:
    """Decide a three-coin system from its quotient/remainder analysis.

    The witness carried by a non-canonical verdict is the smallest
    counterexample, recomputed by scan, so all checkers report uniformly.
    """
    analysis = kz3_analysis(system)
    if not analysis.non_canonical:
        return Verdict()
    witness = smallest_counterexample(system, budget)
    if witness is None:  # pragma: no cover - would falsify the three-coin test
        raise TheoremViolation(f"three-coin condition fired for {system} but no counterexample found")
    return Verdict(witness)


def one_point_extension(
    prefix: CoinSystem, c_new: int, budget: Optional[int] = None
) -> Verdict:
    """Decide the system ``prefix + (c_new,)`` assuming the prefix is canonical.

    With ``k = c_new // c_m``: exact multiples of the largest prefix coin keep
    the system canonical; otherwise the system is non-canonical exactly when
    the greedy representation of ``(k+1)*c_m`` uses more than ``k+1`` coins,
    and that amount is the reported witness. The caller certifies that the
    prefix is canonical.
    """
    top = prefix.denoms[-1]
    if c_new <= top:
        raise NotAnExtension(f"{c_new} does not exceed the largest denomination {top}")
    extended = CoinSystem(prefix.denoms + (c_new,))
    k, rem = divmod(c_new, top)
    if rem == 0:
        return Verdict()
    x = (k + 1) * top
    if _greedy_size(extended.denoms, x) <= k + 1:
        return Verdict()
    witness = Counterexample(x, greedy(extended, x), optimal(extended, x, budget))
    return Verdict(witness)


def propagation_witness(system: CoinSystem, budget: Optional[int] = None) -> Counterexample:
    """A counterexample below ``c_m + c3`` for a system whose three-coin
    prefix is non-canonical.

    A non-canonical three-coin prefix always propagates: the full system has
    a counterexample below that bound. Not finding one is reported loudly
    because it would falsify the propagation result.
    """
    d = system.denoms
    if len(d) < 4:
        raise WrongArity(f"propagation needs at least 4 denominations, got {len(d)}")
    if not _kz3_non_canonical(d):
        raise ValueError(f"three-coin prefix of {system} is canonical")
    bound = d[-1] + d[2]
    cex = first_counterexample_in(system, 1, bound, budget)
    if cex is None:
        raise TheoremViolation(
            f"{system}: three-coin prefix is non-canonical but no counterexample below {bound}"
        )
    return cex


def check_four(system: CoinSystem, budget: Optional[int] = None) -> Verdict:
    """Decide a four-coin system.

    Non-canonical three-coin prefixes propagate; otherwise the last coin is
    judged by the one-point extension test.
    """
    if system.m != 4:
        raise WrongArity(f"check_four needs exactly 4 denominations, got {system.m}")
    if _kz3_non_canonical(system.denoms):
        return Verdict(propagation_witness(system, budget))
    return one_point_extension(system.prefix(3), system.denoms[3], budget)


def check_five(system: CoinSystem, budget: Optional[int] = None) -> Verdict:
    """Decide a five-coin system.

    Decision tree: a non-canonical three-coin prefix propagates; with a
    canonical three-coin prefix but non-canonical four-coin prefix, the only
    canonical completions are ``<1, 2, c3, c3+1, 2*c3>`` with ``c3 > 3``;
    with a canonical four-coin prefix the last coin is judged by the
    one-point extension test.
    """
    if system.m != 5:
        raise WrongArity(f"check_five needs exactly 5 denominations, got {system.m}")
    d = system.denoms
    if _kz3_non_canonical(d):
        return Verdict(propagation_witness(system, budget))
    four = system.prefix(4)
    if one_point_extension(system.prefix(3), d[3], budget).canonical:
        return one_point_extension(four, d[4], budget)
    in_family = d[1] == 2 and d[3] == d[2] + 1 and d[4] == 2 * d[2] and d[2] > 3
    if in_family:
        return Verdict()
    witness = smallest_counterexample(system, budget)
    if witness is None:  # pragma: no cover - would falsify the five-coin characterization
        raise TheoremViolation(
            f"{system}: five-coin characterization says non-canonical but no counterexample found"
        )
    return Verdict(witness)
