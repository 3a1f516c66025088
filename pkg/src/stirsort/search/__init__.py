"""
Search Package

Exact minimum-cost rearrangement search, the brute-force oracle, the
empirical V(s) and heuristic upper-bound constructions.
"""

from .heuristics import bubble_heuristic, merge_heuristic
from .solvers import (
    SolveResult,
    TargetKind,
    TargetPredicate,
    brute_force_min_cost,
    empirical_V,
    exact_min_cost,
    tabulate_V,
    verify_witness,
)

__all__ = [
    'bubble_heuristic',
    'merge_heuristic',
    'SolveResult',
    'TargetKind',
    'TargetPredicate',
    'brute_force_min_cost',
    'empirical_V',
    'exact_min_cost',
    'tabulate_V',
    'verify_witness',
]
