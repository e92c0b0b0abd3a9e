"""Garside-theoretic braid group computations.

Thin wrappers over the C++ core: canonical forms, the word and conjugacy
problems with machine-checked certificates, periodic classification, and
tubular decompositions of reducible braids. Braid words use the text grammar
"s1 s2^-1 1 -2" on a given number of strands.
"""

from ._braids import (
    apply_braid,
    brute_force_root,
    classify_periodic,
    conjugacy,
    decompose,
    embed,
    eq,
    exponent_sum,
    inv,
    is_periodic,
    lamination_coords,
    mul,
    normalize,
    permutation,
    pow,
    preserves,
    regular_form,
    roots_conjugacy,
    run_trials,
    standard_element,
    standardize_periodic,
)

__all__ = [
    "apply_braid",
    "brute_force_root",
    "classify_periodic",
    "conjugacy",
    "decompose",
    "embed",
    "eq",
    "exponent_sum",
    "inv",
    "is_periodic",
    "lamination_coords",
    "mul",
    "normalize",
    "permutation",
    "pow",
    "preserves",
    "regular_form",
    "roots_conjugacy",
    "run_trials",
    "standard_element",
    "standardize_periodic",
]
