"""
Transposition Engine

This module implements elementary transpositions (swap a black block of
length a with the white block of length b that follows it, at cost a + b),
their enumeration, and validation of whole rearrangements.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from ..errors import TranspositionError
from .configuration import Configuration, blocks, is_sorted

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Transposition:
    """A swap of cells [y, y+a) (black) with cells [y+a, y+a+b) (white).

    Attributes:
        y: First cell of the black block
        a: Black block length in cells (>= 1)
        b: White block length in cells (>= 1)
    """
    y: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.y < 0:
            raise TranspositionError(f"Invalid start cell {self.y}, must be >= 0")
        if self.a < 1 or self.b < 1:
            raise TranspositionError(f"Block lengths must be >= 1, got a={self.a}, b={self.b}")

    @property
    def end(self) -> int:
        """One past the last cell touched"""
        return self.y + self.a + self.b

    def reversed(self) -> "Transposition":
        """The transposition (y, b, a) that undoes this one"""
        return Transposition(self.y, self.b, self.a)


@dataclass(frozen=True)
class Rearrangement:
    """An initial configuration and a sequence of transpositions."""
    initial: Configuration
    steps: Tuple[Transposition, ...] = field(default_factory=tuple)

    @property
    def total_cost(self) -> int:
        """Sum of a + b over all steps, in cells"""
        return sum(cost(t) for t in self.steps)

    @property
    def final(self) -> Configuration:
        """Configuration after replaying every step

        Raises:
            TranspositionError: If some step is illegal
        """
        c = self.initial
        for t in self.steps:
            c = apply(c, t)
        return c


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of replaying a rearrangement.

    Attributes:
        valid: Every step was legal in sequence
        complete: Valid and the final configuration is sorted
        gamma: Cost in cells of the legal prefix
        failing_step: Index of the first illegal step, if any
        final: Configuration reached by the legal prefix
    """
    valid: bool
    complete: bool
    gamma: int
    failing_step: Optional[int]
    final: Configuration

    def normalized_gamma(self) -> Fraction:
        return Fraction(self.gamma, self.final.n)


def _first_offending_cell(c: Configuration, t: Transposition) -> Optional[int]:
    """First cell breaking the black-then-white pattern, or None if legal"""
    for i in range(t.y, t.end):
        if i >= c.n:
            return i
        expected = 1 if i < t.y + t.a else 0
        if c.cells[i] != expected:
            return i
    return None


def is_legal(c: Configuration, t: Transposition) -> bool:
    """True iff cells [y, y+a) are black and [y+a, y+a+b) are white"""
    return _first_offending_cell(c, t) is None


def apply(c: Configuration, t: Transposition) -> Configuration:
    """Apply a legal transposition.

    Cells [y, y+b) become white, cells [y+b, y+b+a) become black, the
    rest are unchanged.

    Raises:
        TranspositionError: If the transposition is not legal on c
    """
    bad = _first_offending_cell(c, t)
    if bad is not None:
        raise TranspositionError(
            f"Transposition (y={t.y}, a={t.a}, b={t.b}) is illegal at cell {bad}",
            offending_cell=bad,
        )
    cells = list(c.cells)
    cells[t.y:t.y + t.b] = [0] * t.b
    cells[t.y + t.b:t.end] = [1] * t.a
    return Configuration(tuple(cells))


def cost(t: Transposition) -> int:
    """Cost a + b in cells; divide by N for the normalized cost"""
    return t.a + t.b


def legal_transpositions(c: Configuration) -> List[Transposition]:
    """Enumerate every legal transposition, sorted by (y, a, b).

    Each 1->0 boundary at m with a black run of length L ending there and a
    white run of length R starting there yields (m-a, a, b) for every
    a in [1, L] and b in [1, R].
    """
    runs = blocks(c)
    result: List[Transposition] = []
    for (value, start, length), (_, _, next_length) in zip(runs, runs[1:]):
        if value != 1:
            continue
        m = start + length
        for a in range(1, length + 1):
            for b in range(1, next_length + 1):
                result.append(Transposition(m - a, a, b))
    result.sort()
    return result


def validate_rearrangement(r: Rearrangement) -> ValidationReport:
    """Replay a rearrangement and report its validity, completeness and cost.

    Failures are reported in the result rather than raised.
    """
    c = r.initial
    gamma = 0
    for index, t in enumerate(r.steps):
        if not is_legal(c, t):
            logger.debug(f"Step {index} ({t.y}, {t.a}, {t.b}) is illegal on {c}")
            return ValidationReport(False, False, gamma, index, c)
        c = apply(c, t)
        gamma += cost(t)
    return ValidationReport(True, is_sorted(c), gamma, None, c)


def concatenate(first: Rearrangement, second: Rearrangement) -> Rearrangement:
    """Join two rearrangements where the second starts at the first's end.

    Raises:
        TranspositionError: If the second does not start where the first ends
    """
    if first.final != second.initial:
        raise TranspositionError("Second rearrangement does not start at the end of the first")
    return Rearrangement(first.initial, first.steps + second.steps)


def uses_sub_block_moves(r: Rearrangement) -> bool:
    """True when some step moves less than a full maximal run"""
    c = r.initial
    for t in r.steps:
        ones_left = t.y > 0 and c.cells[t.y - 1] == 1
        zeros_right = t.end < c.n and c.cells[t.end] == 0
        if ones_left or zeros_right:
            return True
        c = apply(c, t)
    return False
