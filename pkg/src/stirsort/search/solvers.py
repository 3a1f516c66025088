"""
Exact Rearrangement Solvers

This module finds minimum-cost transposition sequences by least-cost-first
search over the implicit graph whose states are bit patterns and whose
edges are legal transpositions weighted by a + b. It also provides an
independent brute-force oracle and the empirical V(s).

States are integers with cell 0 as the most significant bit, so integer
order is lexicographic order on bit strings.
"""

import heapq
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from ..books.configuration import Configuration, is_sorted, longest_run
from ..books.moves import (
    Rearrangement,
    Transposition,
    apply,
    cost,
    legal_transpositions,
    validate_rearrangement,
)
from ..errors import SearchError, SearchLimitError

logger = logging.getLogger(__name__)

DEFAULT_MAX_CELLS = 20
DEFAULT_STATE_LIMIT = 2_000_000
ORACLE_MAX_CELLS = 10

Move = Tuple[int, int, int]


class TargetKind(Enum):
    """Goal families for the search"""
    SORTED = "sorted"
    RUN = "run"


@dataclass(frozen=True)
class TargetPredicate:
    """Search goal.

    Attributes:
        kind: SORTED (nondecreasing configuration) or RUN (monochromatic run)
        color: Run color for RUN targets
        s: Minimal run length in cells for RUN targets
    """
    kind: TargetKind
    color: int = 0
    s: int = 0

    @classmethod
    def sorted(cls) -> "TargetPredicate":
        return cls(TargetKind.SORTED)

    @classmethod
    def run(cls, color: int, s: int) -> "TargetPredicate":
        if color not in (0, 1):
            raise SearchError(f"Run color must be 0 or 1, got {color!r}")
        if s < 1:
            raise SearchError(f"Run length must be >= 1, got {s}")
        return cls(TargetKind.RUN, color, s)

    def check(self, n: int) -> None:
        """Validate the target against a configuration size

        Raises:
            SearchError: If the run is longer than the configuration
        """
        if self.kind is TargetKind.RUN and self.s > n:
            raise SearchError(f"Run length {self.s} exceeds configuration of {n} cells")

    def is_met(self, c: Configuration) -> bool:
        """Evaluate the target on a configuration"""
        if self.kind is TargetKind.SORTED:
            return is_sorted(c)
        return longest_run(c, self.color) >= self.s

    def __str__(self) -> str:
        if self.kind is TargetKind.SORTED:
            return "sorted"
        return f"run:{self.color}:{self.s}"


@dataclass(frozen=True)
class SolveResult:
    """Minimal cost and a witness achieving it.

    Attributes:
        cost: Minimal total cost in cells
        witness: Rearrangement achieving the cost
        explored: Number of states expanded by the search
    """
    cost: int
    witness: Rearrangement
    explored: int

    @property
    def normalized_cost(self) -> Fraction:
        return Fraction(self.cost, self.witness.initial.n)


def _cells_mask(lo: int, hi: int, n: int) -> int:
    """Bits of cells [lo, hi) in an n-cell state"""
    return ((1 << (hi - lo)) - 1) << (n - hi)


def _state_moves(state: int, n: int) -> List[Move]:
    """Legal moves of a state, sorted by (y, a, b)"""
    bits = format(state, f"0{n}b")
    runs = [(ch, len(list(group))) for ch, group in itertools.groupby(bits)]
    moves: List[Move] = []
    pos = 0
    for (ch, length), (_, next_length) in zip(runs, runs[1:]):
        pos += length
        if ch != "1":
            continue
        for a in range(1, length + 1):
            for b in range(1, next_length + 1):
                moves.append((pos - a, a, b))
    moves.sort()
    return moves


def _apply_move(state: int, move: Move, n: int) -> int:
    y, a, b = move
    end = y + a + b
    return (state & ~_cells_mask(y, end, n)) | _cells_mask(y + b, end, n)


def _has_run(x: int, s: int) -> bool:
    """True when x has s consecutive set bits"""
    for _ in range(s - 1):
        x &= x >> 1
    return x != 0


def _goal_test(target: TargetPredicate, n: int, ones: int) -> Callable[[int], bool]:
    if target.kind is TargetKind.SORTED:
        goal = (1 << ones) - 1
        return lambda state: state == goal
    full = (1 << n) - 1
    if target.color == 1:
        return lambda state: _has_run(state, target.s)
    return lambda state: _has_run(~state & full, target.s)


def exact_min_cost(
    c: Configuration,
    target: TargetPredicate,
    state_limit: int = DEFAULT_STATE_LIMIT,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> SolveResult:
    """Minimum-cost transposition sequence from c to a state meeting target.

    Least-cost-first search with integer weights a + b. Ties in the queue are
    broken by the smaller state, successors are generated in (y, a, b) order
    and predecessor links change only on strict improvement, so witnesses are
    deterministic.

    Args:
        c: Initial configuration
        target: Goal predicate
        state_limit: Maximum number of expanded states
        max_cells: Largest N accepted

    Returns:
        Minimal cost with a witness rearrangement

    Raises:
        SearchError: If N exceeds max_cells or no reachable state meets target
        SearchLimitError: If more than state_limit states are expanded
    """
    n = c.n
    if n > max_cells:
        raise SearchError(f"Configuration of {n} cells exceeds search cap of {max_cells}")
    target.check(n)

    goal = _goal_test(target, n, c.ones)
    start = c.mask
    dist: Dict[int, int] = {start: 0}
    pred: Dict[int, Tuple[int, Move]] = {}
    frontier: List[Tuple[int, int]] = [(0, start)]
    explored = 0

    while frontier:
        d, state = heapq.heappop(frontier)
        if d > dist[state]:
            continue
        if goal(state):
            steps: List[Transposition] = []
            while state != start:
                state, move = pred[state]
                steps.append(Transposition(*move))
            steps.reverse()
            logger.info(f"Solved {c} to {target}: cost {d} in {len(steps)} moves, {explored} states expanded")
            return SolveResult(d, Rearrangement(c, tuple(steps)), explored)

        explored += 1
        if explored > state_limit:
            raise SearchLimitError(
                f"State limit {state_limit} exceeded with {len(frontier)} states on the frontier",
                explored=explored,
                frontier=len(frontier),
            )
        if explored % 100_000 == 0:
            logger.debug(f"Expanded {explored} states, frontier {len(frontier)}, cost {d}")

        for move in _state_moves(state, n):
            nxt = _apply_move(state, move, n)
            nd = d + move[1] + move[2]
            if nd < dist.get(nxt, nd + 1):
                dist[nxt] = nd
                pred[nxt] = (state, move)
                heapq.heappush(frontier, (nd, nxt))

    raise SearchError(f"No reachable configuration from {c} meets {target}")


def brute_force_min_cost(
    c: Configuration,
    target: TargetPredicate,
    max_cells: int = ORACLE_MAX_CELLS,
) -> Optional[int]:
    """Minimal cost by value iteration over all 2^N configurations.

    Shares no search code with exact_min_cost: it enumerates every
    configuration, builds edges with legal_transpositions and apply, and
    relaxes cost-to-target over all edges until nothing changes.

    Returns:
        Minimal cost in cells, or None when no reachable state meets target

    Raises:
        SearchError: If N exceeds max_cells
    """
    n = c.n
    if n > max_cells:
        raise SearchError(f"Configuration of {n} cells exceeds oracle cap of {max_cells}")
    target.check(n)

    states = [Configuration(bits) for bits in itertools.product((0, 1), repeat=n)]
    edges = {s: [(cost(t), apply(s, t)) for t in legal_transpositions(s)] for s in states}
    value: Dict[Configuration, Optional[int]] = {s: (0 if target.is_met(s) else None) for s in states}

    changed = True
    rounds = 0
    while changed:
        changed = False
        rounds += 1
        for s in states:
            for weight, nxt in edges[s]:
                reached = value[nxt]
                if reached is None:
                    continue
                current = value[s]
                if current is None or reached + weight < current:
                    value[s] = reached + weight
                    changed = True
    logger.debug(f"Value iteration on {n} cells converged after {rounds} rounds")
    return value[c]


def empirical_V(c: Configuration, s: int, color: int, **kwargs: int) -> int:
    """Minimal cost in cells to create a run of at least s cells of color"""
    if not 1 <= s <= c.n:
        raise SearchError(f"Run length {s} must lie in [1, {c.n}]")
    return exact_min_cost(c, TargetPredicate.run(color, s), **kwargs).cost


def tabulate_V(c: Configuration, s_max: int, color: int = 0, normalized: bool = True, **kwargs: int) -> Dict[int, Fraction]:
    """Table s -> V(s) for s = 1..s_max.

    Args:
        c: Configuration
        s_max: Largest run length in cells
        color: Run color
        normalized: Divide costs by N

    Returns:
        Map from s in cells to V(s), as cells/N when normalized
    """
    table: Dict[int, Fraction] = {}
    for s in range(1, s_max + 1):
        v = empirical_V(c, s, color, **kwargs)
        table[s] = Fraction(v, c.n) if normalized else Fraction(v)
    return table


def verify_witness(result: SolveResult, c: Configuration, target: TargetPredicate) -> bool:
    """Check that a witness starts at c, is legal, meets target and costs result.cost"""
    witness = result.witness
    if witness.initial != c:
        return False
    report = validate_rearrangement(witness)
    return report.valid and target.is_met(report.final) and report.gamma == result.cost
