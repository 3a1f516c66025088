"""
Lower Bound Machinery

This module computes n(eps), the largest integer n with
(1 + n*kappa^2) * kappa/2 >= 2^(n+1) * eps, the resulting lower bound
(kappa^3/4) * n(eps) on the cost of sorting any configuration that is well
stirred at (kappa, eps), the induction chain behind it, and checkers for
the V-inequalities on tables produced by the exact solver.

All arithmetic is exact rational arithmetic.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from ..errors import BoundsError

logger = logging.getLogger(__name__)

ChainEntry = Tuple[int, Fraction]


@dataclass(frozen=True)
class BoundCertificate:
    """Certified lower bound for given kappa and eps.

    Attributes:
        kappa: Stirring constant
        eps: Stirring scale
        n_eps: Largest n satisfying the growth condition (0 when degenerate)
        bound: kappa^3/4 * n_eps
        chain: Induction values at s = kappa/2 for n = 0..len(chain)-1
        degenerate: True when n_eps = 0, making the bound vacuous
    """
    kappa: Fraction
    eps: Fraction
    n_eps: int
    bound: Fraction
    chain: Tuple[ChainEntry, ...] = field(default_factory=tuple)
    degenerate: bool = False


@dataclass(frozen=True)
class Witness:
    """A tabulated point where a V-inequality fails (all in length units)."""
    s: Fraction
    sigma: Optional[Fraction]
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class VCheckReport:
    holds_15: bool
    holds_16: bool
    witnesses: Tuple[Witness, ...]


@dataclass(frozen=True)
class CostChainReport:
    """Check of Gamma >= V(1 - xi) >= V(kappa/2) on a tabulated V.

    Attributes:
        gamma_dominates: Gamma >= V at the sorted white run length
        monotone: V is nondecreasing on the tabulated grid
        run_cells: White run length 1 - xi in cells
    """
    gamma_dominates: bool
    monotone: bool
    run_cells: int


def _check_params(kappa: Fraction, eps: Fraction) -> Tuple[Fraction, Fraction]:
    kappa = Fraction(kappa)
    eps = Fraction(eps)
    if not 0 < kappa < 1:
        raise BoundsError(f"kappa must lie in (0, 1), got {kappa}")
    if not 0 < eps < 1:
        raise BoundsError(f"eps must lie in (0, 1), got {eps}")
    return kappa, eps


def _growth_condition(kappa: Fraction, eps: Fraction, n: int) -> bool:
    return (1 + n * kappa ** 2) * kappa / 2 >= 2 ** (n + 1) * eps


def n_of_eps(kappa: Fraction, eps: Fraction) -> int:
    """Largest n >= 0 with (1 + n*kappa^2)*kappa/2 >= 2^(n+1)*eps.

    The left side grows linearly and the right side doubles, so the ratio
    is strictly decreasing and the upward scan stops at the answer. Returns
    0 when even n = 0 fails.

    Raises:
        BoundsError: If kappa or eps is outside (0, 1)
    """
    kappa, eps = _check_params(kappa, eps)
    if not _growth_condition(kappa, eps, 0):
        return 0
    n = 0
    while _growth_condition(kappa, eps, n + 1):
        n += 1
    return n


def is_degenerate(kappa: Fraction, eps: Fraction) -> bool:
    """True when the bound is vacuous, i.e. n(eps) = 0"""
    return n_of_eps(kappa, eps) == 0


def lemma_lower_bound(kappa: Fraction, eps: Fraction) -> Fraction:
    """Lower bound kappa^3/4 * n(eps) on the cost of any complete rearrangement"""
    kappa = Fraction(kappa)
    return kappa ** 3 / 4 * n_of_eps(kappa, eps)


def induction_chain(kappa: Fraction, eps: Fraction, s: Fraction, n_max: int) -> List[ChainEntry]:
    """Values v_n = (1 + n*kappa^2)*s - 2^n*eps for n = 0..n_max.

    Values may be negative; each one is a lower bound on V(s).

    Raises:
        BoundsError: If s is outside (0, kappa] or n_max < 0
    """
    kappa, eps = _check_params(kappa, eps)
    s = Fraction(s)
    if not 0 < s <= kappa:
        raise BoundsError(f"s must lie in (0, kappa], got {s}")
    if n_max < 0:
        raise BoundsError(f"n_max must be >= 0, got {n_max}")
    return [(n, (1 + n * kappa ** 2) * s - 2 ** n * eps) for n in range(n_max + 1)]


def chain_bound(kappa: Fraction, eps: Fraction, s: Fraction) -> Fraction:
    """Best lower bound max(0, max_n v_n) the induction chain gives for V(s).

    v_{n+1} - v_n = kappa^2*s - 2^n*eps, so the chain increases while
    2^n*eps < kappa^2*s and decreases afterwards.
    """
    kappa, eps = _check_params(kappa, eps)
    s = Fraction(s)
    n = 0
    while 2 ** n * eps < kappa ** 2 * s:
        n += 1
    best = max(v for _, v in induction_chain(kappa, eps, s, n))
    return max(Fraction(0), best)


def certificate(kappa: Fraction, eps: Fraction, chain_length: Optional[int] = None) -> BoundCertificate:
    """Build a bound certificate.

    Args:
        kappa: Stirring constant in (0, 1)
        eps: Stirring scale in (0, 1)
        chain_length: Number of chain entries to record at s = kappa/2;
            defaults to n(eps) + 2 so the last positive entries are visible

    Returns:
        Certificate with n(eps), the bound and the chain
    """
    kappa, eps = _check_params(kappa, eps)
    n_eps = n_of_eps(kappa, eps)
    degenerate = n_eps == 0
    if degenerate:
        logger.warning(f"Degenerate bound for kappa={kappa}, eps={eps}: n(eps) = 0")
    length = n_eps + 2 if chain_length is None else chain_length
    chain = tuple(induction_chain(kappa, eps, kappa / 2, length - 1)) if length > 0 else ()
    cert = BoundCertificate(
        kappa=kappa,
        eps=eps,
        n_eps=n_eps,
        bound=kappa ** 3 / 4 * n_eps,
        chain=chain,
        degenerate=degenerate,
    )
    logger.info(f"Certificate kappa={kappa} eps={eps}: n_eps={n_eps}, bound={cert.bound}")
    return cert


def check_V_inequalities(
    table: Mapping[int, Fraction],
    kappa: Fraction,
    eps: Fraction,
    n_cells: int,
) -> VCheckReport:
    """Check V(s) >= s - eps and the splitting inequality on a tabulated V.

    The splitting inequality, for s > eps, is
        V(s) >= min over 0 < sigma < s of
                V(s - sigma) + V(sigma) + kappa^2*s + (1 - kappa^2)*sigma
    with sigma restricted to the cell grid points where both V values are
    tabulated and V(0) = 0.

    Args:
        table: Map from s in cells to the normalized minimal cost V(s)
        kappa: Stirring constant
        eps: Stirring scale
        n_cells: N, the cell count used to convert cells to lengths

    Returns:
        Report with one flag per inequality and every failing point

    Raises:
        BoundsError: If the table is empty
    """
    if not table:
        raise BoundsError("V table is empty")
    kappa, eps = _check_params(kappa, eps)
    values: Dict[int, Fraction] = {0: Fraction(0)}
    values.update({int(s): Fraction(v) for s, v in table.items()})
    k2 = kappa ** 2

    witnesses: List[Witness] = []
    holds_15 = True
    holds_16 = True
    for s_cells in sorted(table):
        s = Fraction(s_cells, n_cells)
        v = values[s_cells]
        if v < s - eps:
            holds_15 = False
            witnesses.append(Witness(s, None, v, s - eps))

        if s <= eps:
            continue
        candidates = [
            values[s_cells - sigma] + values[sigma] + k2 * s + (1 - k2) * Fraction(sigma, n_cells)
            for sigma in range(1, s_cells)
            if sigma in values and s_cells - sigma in values
        ]
        if not candidates:
            continue
        rhs = min(candidates)
        if v < rhs:
            holds_16 = False
            sigma_best = next(
                sigma for sigma in range(1, s_cells)
                if sigma in values and s_cells - sigma in values
                and values[s_cells - sigma] + values[sigma] + k2 * s + (1 - k2) * Fraction(sigma, n_cells) == rhs
            )
            witnesses.append(Witness(s, Fraction(sigma_best, n_cells), v, rhs))

    return VCheckReport(holds_15, holds_16, tuple(witnesses))


def check_cost_chain(gamma: int, table: Mapping[int, int], n_cells: int, ones: int) -> CostChainReport:
    """Check Gamma >= V(1 - xi) and the monotonicity of V at desk scale.

    Sorting leaves a white run of N - ones cells, so any complete
    rearrangement costs at least the white-run V at that length.

    Args:
        gamma: Cost in cells of a complete rearrangement
        table: Map from s in cells to the white-run V(s) in cells
        n_cells: N
        ones: Number of black cells

    Returns:
        Report; gamma_dominates is True when 1 - xi is not tabulated
    """
    run_cells = n_cells - ones
    dominated = gamma >= table[run_cells] if run_cells in table else True
    keys = sorted(table)
    monotone = all(table[a] <= table[b] for a, b in zip(keys, keys[1:]))
    return CostChainReport(dominated, monotone, run_cells)
