"""
Experiment Harness

This module produces the rows of the two reproducible experiments: the
cost-versus-scale study on alternating configurations (heuristic cost,
exact cost and certified lower bound per N = 2^k) and the torus mixing
study (cumulative shear stages from the band set).
"""

import csv
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, TextIO

from ..analysis.bounds import lemma_lower_bound, n_of_eps
from ..books.configuration import gen_alternating
from ..books.moves import validate_rearrangement
from ..errors import BoundsError, ConfigurationError
from ..formats import format_decimal, format_fraction
from ..search.heuristics import merge_heuristic
from ..search.solvers import DEFAULT_MAX_CELLS, DEFAULT_STATE_LIMIT, TargetPredicate, exact_min_cost, verify_witness
from ..torus.flow import apply_step, cat_program, make_band_set, mixing_scale, step_cost

logger = logging.getLogger(__name__)

SCALING_HEADER = [
    "eps", "N", "kappa", "heur_cost", "exact_cost", "lower_bound", "n_eps",
    "heur_cost_decimal", "exact_cost_decimal", "lower_bound_decimal",
]
MIX_HEADER = ["stage", "steps", "cost", "scale_cells", "scale", "log_ratio"]


@dataclass(frozen=True)
class ScalingRow:
    """One instance of the cost-versus-scale study; costs are normalized."""
    eps: Fraction
    n: int
    kappa: Fraction
    heur_cost: Fraction
    exact_cost: Optional[Fraction]
    lower_bound: Fraction
    n_eps: int

    def sandwich_holds(self) -> bool:
        """lower_bound <= exact_cost (when present) <= heur_cost"""
        upper = self.exact_cost if self.exact_cost is not None else self.heur_cost
        return self.lower_bound <= upper <= self.heur_cost


@dataclass(frozen=True)
class MixRow:
    """One cumulative stage of the mixing study."""
    stage: int
    steps: int
    cost: Fraction
    scale_cells: Optional[int]
    m: int

    @property
    def scale(self) -> Optional[Fraction]:
        return None if self.scale_cells is None else Fraction(self.scale_cells, self.m)

    @property
    def log_ratio(self) -> Optional[float]:
        """Cost per doubling of resolution, cost / log2(M / scale_cells)"""
        if self.scale_cells is None:
            return None
        return float(self.cost) / math.log2(self.m / self.scale_cells)


def scaling_row(
    k: int,
    kappa: Fraction,
    exact_cap: int,
    state_limit: int = DEFAULT_STATE_LIMIT,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> ScalingRow:
    """Evaluate the alternating period-2 configuration with N = 2^k cells.

    Raises:
        ConfigurationError: If k < 2 (eps = 2/N must be below 1)
        BoundsError: If a row violates the sandwich invariant
    """
    if k < 2:
        raise ConfigurationError(f"k must be >= 2 so that eps = 2/N < 1, got {k}")
    n = 2 ** k
    c = gen_alternating(n, 2)
    eps = Fraction(2, n)

    heuristic = merge_heuristic(c)
    report = validate_rearrangement(heuristic)
    if not report.complete:
        raise ConfigurationError(f"Merge heuristic produced an incomplete rearrangement for N={n}")
    heur_cost = Fraction(report.gamma, n)

    exact_cost = None
    if n <= exact_cap:
        target = TargetPredicate.sorted()
        result = exact_min_cost(c, target, state_limit=state_limit, max_cells=max_cells)
        if not verify_witness(result, c, target):
            raise ConfigurationError(f"Exact witness failed verification for N={n}")
        exact_cost = result.normalized_cost

    row = ScalingRow(
        eps=eps,
        n=n,
        kappa=Fraction(kappa),
        heur_cost=heur_cost,
        exact_cost=exact_cost,
        lower_bound=lemma_lower_bound(kappa, eps),
        n_eps=n_of_eps(kappa, eps),
    )
    if not row.sandwich_holds() or row.heur_cost > k:
        raise BoundsError(f"Cost sandwich violated for N={n}: {row}")
    logger.info(f"Scaling row N={n}: heuristic {heur_cost}, exact {exact_cost}, bound {row.lower_bound}")
    return row


def scaling_rows(
    kappa: Fraction,
    k_min: int,
    k_max: int,
    exact_cap: int,
    workers: int = 1,
    state_limit: int = DEFAULT_STATE_LIMIT,
    max_cells: int = DEFAULT_MAX_CELLS,
) -> List[ScalingRow]:
    """Rows for k = k_min..k_max, in k order regardless of completion order

    Raises:
        ConfigurationError: If k_min > k_max
    """
    if k_min > k_max:
        raise ConfigurationError(f"k-min ({k_min}) cannot be greater than k-max ({k_max})")
    ks = range(k_min, k_max + 1)

    def evaluate(k: int) -> ScalingRow:
        return scaling_row(k, kappa, exact_cap, state_limit=state_limit, max_cells=max_cells)

    if workers <= 1:
        return [evaluate(k) for k in ks]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(evaluate, ks))


def write_scaling_csv(rows: Iterable[ScalingRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SCALING_HEADER)
    for row in rows:
        writer.writerow([
            format_fraction(row.eps),
            row.n,
            format_fraction(row.kappa),
            format_fraction(row.heur_cost),
            "" if row.exact_cost is None else format_fraction(row.exact_cost),
            format_fraction(row.lower_bound),
            row.n_eps,
            format_decimal(row.heur_cost),
            format_decimal(row.exact_cost),
            format_decimal(row.lower_bound),
        ])


def mix_rows(m: int, stages: int, kappa: Fraction, radii: Iterable[int]) -> List[MixRow]:
    """Run cat-map stages cumulatively from the band set.

    Row 0 is the unmixed band; row k follows k stages of a vertical and a
    horizontal linear shear.

    Raises:
        FlowError: If M is odd or below 4 with stages, or kappa or a radius is out of range
        ConfigurationError: If stages < 0
    """
    if stages < 0:
        raise ConfigurationError(f"Number of stages must be >= 0, got {stages}")
    radii = list(radii)
    mask = make_band_set(m)
    rows = [MixRow(0, 0, Fraction(0), mixing_scale(mask, kappa, radii), m)]
    cost = Fraction(0)
    steps = 0
    stage_steps = cat_program(1, m).steps if stages else ()
    for stage in range(1, stages + 1):
        for step in stage_steps:
            mask = apply_step(mask, step)
            cost += step_cost(step)
            steps += 1
        row = MixRow(stage, steps, cost, mixing_scale(mask, kappa, radii), m)
        logger.info(f"Mix stage {stage}: cost {cost}, scale {row.scale_cells}")
        rows.append(row)
    return rows


def write_mix_csv(rows: Iterable[MixRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(MIX_HEADER)
    for row in rows:
        writer.writerow([
            row.stage,
            row.steps,
            format_decimal(row.cost),
            "" if row.scale_cells is None else row.scale_cells,
            format_decimal(row.scale),
            "" if row.log_ratio is None else f"{row.log_ratio:.15g}",
        ])
