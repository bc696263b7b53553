"""Champernowne digit streams, abelian window counting, and normality experiments.

The library builds the base-10 Champernowne expansion C10, derives its
run-sorted variant D10 (every maximal run of 0/1 digits rearranged into
ascending order), counts exact and abelian (permutation-class) window
occurrences, evaluates the per-pattern weighting that makes D10
abelian-normal, and ships a CLI for reproducing the reference counts and
running convergence studies.
"""

from .digitstream import (
    BinaryRun,
    ChampernowneStream,
    DigitStream,
    LiteralStream,
    SigmaChampernowneStream,
    binary_runs,
    champernowne_digit,
    get_stream,
    maximal_run_of,
    sigma_transform,
    sort_binary_runs,
    stream_prefix,
)
from .counting import (
    BoundaryContext,
    abelian_counts_at,
    boundary_context,
    c10_only_occurrence,
    case_counts_at,
    count_abelian,
    count_c10_only,
    count_d10_only,
    count_exact,
    d10_only_occurrence,
    distinct_permutations,
    is_mixed,
    parikh,
    sort_interior_runs,
)
from .weighting import (
    WeightValue,
    pure_weight,
    weight,
    weight_binary,
    weight_mixed,
    weight_nonbinary,
)
from .experiments import (
    Check,
    ConvergenceRecord,
    ExampleReport,
    IdentityReport,
    abelian_ratio,
    convergence_table,
    normality_ratio,
    pure_abelian_probe,
    records_to_csv,
    verify_boundary_sorting,
    verify_examples,
    verify_identity,
)

__version__ = "0.1.0"
