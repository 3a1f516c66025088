"""
Heuristic Rearrangements

Upper-bound constructions: a divide-and-conquer merge whose normalized
cost is at most log2(N), and a greedy block-swap baseline.
"""

import logging
from typing import List

from ..books.configuration import Configuration, blocks, is_sorted
from ..books.moves import Rearrangement, Transposition, apply
from ..errors import ConfigurationError

logger = logging.getLogger(__name__)


def _merge_sort_segment(cells: List[int], lo: int, hi: int, steps: List[Transposition]) -> None:
    """Sort cells[lo:hi] in place, appending the moves used"""
    if hi - lo < 2:
        return
    mid = (lo + hi) // 2
    _merge_sort_segment(cells, lo, mid, steps)
    _merge_sort_segment(cells, mid, hi, steps)

    # Both halves are sorted: swap the left trailing 1-run with the right leading 0-run
    ones_left = sum(cells[lo:mid])
    zeros_right = (hi - mid) - sum(cells[mid:hi])
    if ones_left == 0 or zeros_right == 0:
        return
    move = Transposition(mid - ones_left, ones_left, zeros_right)
    cells[move.y:move.y + move.b] = [0] * move.b
    cells[move.y + move.b:move.end] = [1] * move.a
    logger.debug(f"Merge [{lo}, {hi}): move ({move.y}, {move.a}, {move.b})")
    steps.append(move)


def merge_heuristic(c: Configuration) -> Rearrangement:
    """Sort both halves recursively, then merge them with at most one move.

    Each recursion level costs at most N cells, so the normalized cost is
    at most log2(N).

    Raises:
        ConfigurationError: If N is not a power of two
    """
    n = c.n
    if n & (n - 1):
        raise ConfigurationError(f"Merge heuristic needs a power-of-two number of cells, got {n}")
    cells = list(c.cells)
    steps: List[Transposition] = []
    _merge_sort_segment(cells, 0, n, steps)
    result = Rearrangement(c, tuple(steps))
    logger.info(f"Merge heuristic on {c}: {len(steps)} moves, cost {result.total_cost}")
    return result


def bubble_heuristic(c: Configuration) -> Rearrangement:
    """Repeatedly swap the leftmost full black run with the full white run after it"""
    steps: List[Transposition] = []
    current = c
    while not is_sorted(current):
        runs = blocks(current)
        for (value, start, length), (_, _, next_length) in zip(runs, runs[1:]):
            if value == 1:
                move = Transposition(start, length, next_length)
                break
        current = apply(current, move)
        steps.append(move)
    result = Rearrangement(c, tuple(steps))
    logger.info(f"Bubble heuristic on {c}: {len(steps)} moves, cost {result.total_cost}")
    return result
