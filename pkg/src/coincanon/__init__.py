"""Canonical coin systems: checkers, counterexample search, and the
structural facts behind the fast algorithms, all cross-validated against an
exhaustive oracle.
"""

from .core import (
    BudgetExhausted,
    CoinSystem,
    Counterexample,
    EmptyList,
    FirstNotOne,
    InvalidSystem,
    LimitExceeded,
    NonPositiveValue,
    NotAnExtension,
    NotStrictlyIncreasing,
    Overflow,
    Representation,
    TheoremViolation,
    Verdict,
    WrongArity,
    gaps,
    new_coin_system,
)
from .solvers import (
    DpTable,
    OptimalSet,
    dp_table,
    greedy,
    greedy_size,
    optimal,
    optimal_all,
)
from .oracle import (
    counterexample_at,
    first_counterexample_in,
    is_canonical_oracle,
    is_tight,
    smallest_counterexample,
)
from .characterize import (
    ThreeCoinAnalysis,
    check_five,
    check_four,
    check_three,
    kz3_analysis,
    one_point_extension,
    propagation_witness,
)
from .fastcheck import (
    TightCheckReport,
    is_canonical_tight_extended,
    is_canonical_tight_verbatim,
    pearson_check,
    smallest_witness_is_pair,
)
from .predicates import (
    PREDICATES,
    Outcome,
    PredicateResult,
    disjoint_support,
    disjoint_support_universal,
    final_gap_is_max,
    pair_witness,
    propagation_bound,
    smallest_is_pair_sum,
    window_bound,
)
from .generate import (
    arithmetic_system,
    enumerate_all,
    family,
    fibonacci_system,
    format_corpus_line,
    geometric_system,
    parse_corpus_line,
    random_system,
    read_corpus,
    tight_corpus,
)
from .bench import BenchRow, loglog_slope, median_elapsed, scaling_run

__version__ = "0.1.0"
