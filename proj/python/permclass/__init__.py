"""Permutation classes, periodic permutations and rank encodings.

Permutations are lists of ints in one-line notation; a class with a finite
basis is given by the list of its basis permutations.
"""

from ._core import (
    HorizonError,
    InferenceUnstable,
    InvalidInput,
    PeriodicPerm,
    atomicity_check,
    basis_up_to,
    check_eventual_periodicity,
    classify,
    cli,
    count_occurrences,
    count_profile,
    decode,
    direct_sum,
    encode,
    final_components,
    flatten,
    gf,
    increasing_oscillation,
    involves,
    is_sum_complete,
    members,
    minimal_mergers,
    normalize_basis,
    sub_patterns,
    sum_decompose,
    twin_oscillation,
)

__all__ = [name for name in dir() if not name.startswith("_")]
