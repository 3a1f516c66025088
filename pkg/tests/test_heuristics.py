"""
Heuristic Tests

This module contains tests for the merge and bubble upper-bound
constructions.
"""

import itertools
from fractions import Fraction

import pytest

from stirsort.books.configuration import Configuration, gen_alternating, parse_config
from stirsort.books.moves import Transposition, validate_rearrangement
from stirsort.errors import ConfigurationError
from stirsort.search.heuristics import bubble_heuristic, merge_heuristic
from stirsort.search.solvers import TargetPredicate, exact_min_cost

T = Transposition


def configs(n):
    return [Configuration(bits) for bits in itertools.product((0, 1), repeat=n)]


def test_merge_examples():
    """Test merge moves on worked examples"""
    r = merge_heuristic(parse_config("1010"))
    assert r.steps == (T(0, 1, 1), T(2, 1, 1), T(1, 1, 1))
    assert r.total_cost == 6

    assert merge_heuristic(parse_config("0011")).steps == ()
    assert merge_heuristic(parse_config("10")).steps == (T(0, 1, 1),)
    assert merge_heuristic(parse_config("1")).steps == ()


def test_merge_requires_power_of_two():
    """Test non power-of-two sizes are rejected"""
    with pytest.raises(ConfigurationError, match="power-of-two"):
        merge_heuristic(parse_config("110"))


@pytest.mark.parametrize("k", range(1, 11))
def test_merge_on_alternating(k):
    """Test merge cost on period-2 patterns is (k + 1)/2 and at most log2(N)"""
    n = 2 ** k
    r = merge_heuristic(gen_alternating(n, 2))
    report = validate_rearrangement(r)
    assert report.valid
    assert report.complete
    assert report.normalized_gamma() == Fraction(k + 1, 2)
    assert report.normalized_gamma() <= k


@pytest.mark.parametrize("n", [1, 2, 4, 8])
def test_merge_is_complete_and_bounded(n):
    """Test merge sorts every input within log2(N) and never beats the optimum"""
    log_n = n.bit_length() - 1
    for c in configs(n):
        report = validate_rearrangement(merge_heuristic(c))
        assert report.complete
        assert report.gamma <= max(log_n, 0) * n
        assert report.gamma >= exact_min_cost(c, TargetPredicate.sorted()).cost


def test_bubble_examples():
    """Test bubble moves on worked examples"""
    assert bubble_heuristic(parse_config("10")).steps == (T(0, 1, 1),)
    r = bubble_heuristic(parse_config("1010"))
    assert r.steps == (T(0, 1, 1), T(1, 2, 1))
    assert r.total_cost == 5
    assert bubble_heuristic(parse_config("0011")).steps == ()


@pytest.mark.parametrize("n", range(1, 9))
def test_bubble_is_complete(n):
    """Test bubble sorts every input and never beats the optimum"""
    for c in configs(n):
        report = validate_rearrangement(bubble_heuristic(c))
        assert report.complete
        assert report.gamma >= exact_min_cost(c, TargetPredicate.sorted()).cost
