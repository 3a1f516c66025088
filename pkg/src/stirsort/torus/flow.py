"""
Torus Shear Flows

This module is a discrete model of mixing on the torus: an M x M grid of
cells holds the indicator of a transported set, flows are sequences of
shear steps (per-line cyclic translations, hence exact permutations of
cells), and the module measures the mixing scale of the transported set
and the total-variation cost of the flow.

Array layout: cells[j, i] is the cell with x1 index i and x2 index j.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from ..errors import FlowError

logger = logging.getLogger(__name__)


class Axis(Enum):
    """Shear direction"""
    HORIZONTAL = "H"  # row j translates by s(j) along x1
    VERTICAL = "V"    # column i translates by s(i) along x2


@dataclass(frozen=True, eq=False)
class GridMask:
    """Indicator of a set on the M x M torus grid.

    Attributes:
        cells: Read-only M x M array of 0/1 values
    """
    cells: np.ndarray

    def __post_init__(self) -> None:
        cells = np.array(self.cells, dtype=np.uint8)
        if cells.ndim != 2 or cells.shape[0] != cells.shape[1] or cells.shape[0] < 1:
            raise FlowError(f"Grid must be a non-empty square, got shape {cells.shape}")
        if np.any(cells > 1):
            raise FlowError("Grid cells must be 0 or 1")
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)

    @property
    def m(self) -> int:
        """Grid side"""
        return int(self.cells.shape[0])

    @property
    def mass(self) -> int:
        """Number of 1-cells"""
        return int(self.cells.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GridMask):
            return NotImplemented
        return bool(np.array_equal(self.cells, other.cells))

    def __hash__(self) -> int:
        return hash(self.cells.tobytes())


@dataclass(frozen=True)
class ShearStep:
    """One unit-time shear: a cyclic translation of every line.

    Attributes:
        axis: Which lines move
        shifts: Translation in cells of each line; its length is M
    """
    axis: Axis
    shifts: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "shifts", tuple(int(s) for s in self.shifts))
        if not self.shifts:
            raise FlowError("Shear step needs at least one shift")

    @property
    def m(self) -> int:
        return len(self.shifts)

    def destinations(self) -> np.ndarray:
        """Flat destination index of every source cell j*M + i"""
        m = self.m
        j, i = np.indices((m, m))
        s = np.asarray(self.shifts, dtype=np.int64)
        if self.axis is Axis.HORIZONTAL:
            return (j * m + (i + s[j]) % m).ravel()
        return (((j + s[i]) % m) * m + i).ravel()

    def inverse(self) -> "ShearStep":
        return ShearStep(self.axis, tuple(-s for s in self.shifts))


@dataclass(frozen=True)
class FlowProgram:
    """A sequence of shear steps on one grid size."""
    m: int
    steps: Tuple[ShearStep, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.m < 1:
            raise FlowError(f"Grid side must be positive, got {self.m}")
        for index, step in enumerate(self.steps):
            if step.m != self.m:
                raise FlowError(f"Step {index} has {step.m} shifts, expected {self.m}")


def make_band_set(m: int) -> GridMask:
    """The bottom half band: rows 0..M/2-1 set

    Raises:
        FlowError: If M is not a positive even integer
    """
    if m < 2 or m % 2:
        raise FlowError(f"Grid side must be a positive even integer, got {m}")
    cells = np.zeros((m, m), dtype=np.uint8)
    cells[: m // 2, :] = 1
    return GridMask(cells)


def checkerboard(m: int) -> GridMask:
    """Cells with even i + j set"""
    j, i = np.indices((m, m))
    return GridMask(((i + j) % 2 == 0).astype(np.uint8))


def full_mask(m: int) -> GridMask:
    return GridMask(np.ones((m, m), dtype=np.uint8))


def apply_step(mask: GridMask, step: ShearStep) -> GridMask:
    """Translate each line of the mask cyclically by its shift

    Raises:
        FlowError: If the step and the mask have different sizes
    """
    m = mask.m
    if step.m != m:
        raise FlowError(f"Step has {step.m} shifts but grid side is {m}")
    j, i = np.indices((m, m))
    s = np.asarray(step.shifts, dtype=np.int64)
    if step.axis is Axis.HORIZONTAL:
        moved = mask.cells[j, (i - s[j]) % m]
    else:
        moved = mask.cells[(j - s[i]) % m, i]
    return GridMask(moved)


def run_program(mask: GridMask, program: FlowProgram) -> GridMask:
    """Apply the steps of a program left to right

    Raises:
        FlowError: If the program and the mask have different sizes
    """
    if program.m != mask.m:
        raise FlowError(f"Program grid side {program.m} does not match mask side {mask.m}")
    for step in program.steps:
        mask = apply_step(mask, step)
    return mask


def inverse_program(program: FlowProgram) -> FlowProgram:
    """Program undoing the given one"""
    return FlowProgram(program.m, tuple(step.inverse() for step in reversed(program.steps)))


def ball_counts(mask: GridMask, r: int) -> np.ndarray:
    """1-count of the (2r+1) x (2r+1) cyclic square centered at every cell"""
    padded = np.pad(mask.cells.astype(np.int64), r, mode="wrap")
    summed = np.zeros((padded.shape[0] + 1, padded.shape[1] + 1), dtype=np.int64)
    summed[1:, 1:] = padded.cumsum(axis=0).cumsum(axis=1)
    side = 2 * r + 1
    m = mask.m
    return (
        summed[side:side + m, side:side + m]
        - summed[:m, side:side + m]
        - summed[side:side + m, :m]
        + summed[:m, :m]
    )


def mixing_scale(mask: GridMask, kappa: Fraction, radii: Iterable[int]) -> Optional[int]:
    """Smallest listed radius at which every ball is mixed.

    A ball is mixed when its fraction of 1-cells lies in [kappa, 1 - kappa].
    Balls are sup-norm squares of side 2r+1 centered at every cell.

    Args:
        mask: Transported set
        kappa: Mixing constant in (0, 1/2)
        radii: Candidate radii in cells, each in [1, M/2)

    Returns:
        The smallest passing radius, or None

    Raises:
        FlowError: If kappa or a radius is out of range
    """
    kappa = Fraction(kappa)
    if not 0 < kappa < Fraction(1, 2):
        raise FlowError(f"kappa must lie in (0, 1/2), got {kappa}")
    radii = sorted(set(radii))
    for r in radii:
        if not 1 <= r or not 2 * r < mask.m:
            raise FlowError(f"Radius {r} out of range [1, {mask.m}/2)")

    p, q = kappa.numerator, kappa.denominator
    for r in radii:
        area = (2 * r + 1) ** 2
        counts = ball_counts(mask, r).ravel().tolist()
        if all(p * area <= q * count <= (q - p) * area for count in counts):
            logger.debug(f"Mask of side {mask.m} mixed at radius {r}")
            return r
    return None


def step_cost(step: ShearStep) -> Fraction:
    """Total variation of the per-line displacement, with cyclic differences"""
    s = step.shifts
    m = len(s)
    return Fraction(sum(abs(s[(j + 1) % m] - s[j]) for j in range(m)), m)


def program_cost(program: FlowProgram) -> Fraction:
    """Sum of the step costs; every step occupies unit time"""
    return sum((step_cost(step) for step in program.steps), Fraction(0))


def verify_measure_preserving(program: FlowProgram) -> bool:
    """True iff every step maps the M^2 cells onto themselves bijectively"""
    m = program.m
    for index, step in enumerate(program.steps):
        dest = np.asarray(step.destinations())
        if dest.size != m * m or np.any(dest < 0) or np.any(dest >= m * m):
            logger.warning(f"Step {index} does not map the {m}x{m} grid into itself")
            return False
        if np.unique(dest).size != m * m:
            logger.warning(f"Step {index} is not injective")
            return False
    return True


def linear_shear(axis: Axis, m: int, slope: int = 2) -> ShearStep:
    """Shear with s(k) = slope*k mod M"""
    return ShearStep(axis, tuple((slope * k) % m for k in range(m)))


def cat_program(k: int, m: int) -> FlowProgram:
    """k stages of a vertical then a horizontal linear shear of slope 2.

    Raises:
        FlowError: If k < 1 or M < 4
    """
    if k < 1:
        raise FlowError(f"Number of stages must be >= 1, got {k}")
    if m < 4:
        raise FlowError(f"Grid side must be >= 4, got {m}")
    stage = (linear_shear(Axis.VERTICAL, m), linear_shear(Axis.HORIZONTAL, m))
    return FlowProgram(m, stage * k)


def program_from_steps(steps: Sequence[ShearStep]) -> FlowProgram:
    """Wrap steps into a program, taking M from the first step

    Raises:
        FlowError: If the list is empty or sizes disagree
    """
    if not steps:
        raise FlowError("Cannot infer grid side from an empty step list")
    return FlowProgram(steps[0].m, tuple(steps))
