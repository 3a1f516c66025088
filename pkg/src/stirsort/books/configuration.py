"""
Binary Configuration Module

This module models a stack of white and black books as a binary step
function on [0, 1] stored as N equal cells, and provides sortedness, the
well-stirred test and instance generators.

Color convention: 1 = black, 0 = white. A sorted configuration has the
whites on the left and the blacks on the right.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import ConfigurationError, GenerationError

logger = logging.getLogger(__name__)

Block = Tuple[int, int, int]  # (value, start, length)


@dataclass(frozen=True)
class Configuration:
    """A binary configuration of N cells.

    Cell i covers [i/N, (i+1)/N). Values are immutable after construction.

    Attributes:
        cells: Cell values in order, each 0 (white) or 1 (black)

    Examples:
        >>> c = parse_config("1010")
        >>> c.n, c.ones
        (4, 2)
    """
    cells: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.cells) < 1:
            raise ConfigurationError("Configuration must have at least one cell")
        for i, v in enumerate(self.cells):
            if v not in (0, 1):
                raise ConfigurationError(f"Invalid cell value {v!r} at position {i}", position=i)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "Configuration":
        """Build a configuration from any sequence of 0/1 values"""
        return cls(tuple(int(b) for b in bits))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Configuration":
        """Build a configuration from an integer whose most significant bit is cell 0"""
        return cls(tuple((mask >> (n - 1 - i)) & 1 for i in range(n)))

    @property
    def n(self) -> int:
        """Number of cells"""
        return len(self.cells)

    @property
    def ones(self) -> int:
        """Number of black cells"""
        return sum(self.cells)

    @property
    def mask(self) -> int:
        """Integer encoding with cell 0 as the most significant bit.

        Integer order on masks equals lexicographic order on bit strings.
        """
        value = 0
        for v in self.cells:
            value = (value << 1) | v
        return value

    def __str__(self) -> str:
        return format_config(self)


@dataclass(frozen=True)
class StirringParams:
    """Parameters of the well-stirred condition.

    Attributes:
        kappa: Exact rational in (0, 1)
        window: Window length w in cells; the scale is eps = w/N
    """
    kappa: Fraction
    window: int

    def __post_init__(self) -> None:
        kappa = Fraction(self.kappa)
        object.__setattr__(self, "kappa", kappa)
        if not 0 < kappa < 1:
            raise ConfigurationError(f"kappa must lie in (0, 1), got {kappa}")
        if isinstance(self.window, bool) or not isinstance(self.window, int) or self.window < 1:
            raise ConfigurationError(f"window must be a positive integer, got {self.window!r}")

    def eps(self, n: int) -> Fraction:
        """Scale eps = w/N for a configuration of n cells"""
        return Fraction(self.window, n)

    def admissible_counts(self) -> List[int]:
        """Window 1-counts m satisfying p*w < q*m <= (q-p)*w"""
        p, q = self.kappa.numerator, self.kappa.denominator
        w = self.window
        return [m for m in range(w + 1) if p * w < q * m <= (q - p) * w]


def parse_config(text: str) -> Configuration:
    """Parse a configuration from its '0'/'1' text form.

    Args:
        text: ASCII bit string, optionally followed by one newline

    Returns:
        Parsed configuration

    Raises:
        ConfigurationError: If the text is empty or contains another character
    """
    if text.endswith("\r\n"):
        text = text[:-2]
    elif text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise ConfigurationError("Configuration text is empty")
    for i, ch in enumerate(text):
        if ch not in "01":
            raise ConfigurationError(f"Illegal character {ch!r} at position {i}", position=i)
    return Configuration(tuple(int(ch) for ch in text))


def format_config(c: Configuration) -> str:
    """Render a configuration as its bit string"""
    return "".join(str(v) for v in c.cells)


def blocks(c: Configuration) -> List[Block]:
    """Decompose a configuration into maximal constant runs.

    Returns:
        List of (value, start, length); values alternate and lengths sum to N
    """
    result: List[Block] = []
    start = 0
    for i in range(1, c.n + 1):
        if i == c.n or c.cells[i] != c.cells[start]:
            result.append((c.cells[start], start, i - start))
            start = i
    return result


def xi(c: Configuration) -> Fraction:
    """Total black mass, the integral of f over [0, 1]"""
    return Fraction(c.ones, c.n)


def is_sorted(c: Configuration) -> bool:
    """True when no black cell precedes a white cell"""
    return all(a <= b for a, b in zip(c.cells, c.cells[1:]))


def sorted_target(c: Configuration) -> Configuration:
    """The sorted configuration with the same N and black mass"""
    ones = c.ones
    return Configuration((0,) * (c.n - ones) + (1,) * ones)


def _window_counts(c: Configuration, window: int) -> np.ndarray:
    """1-counts of every aligned window [k, k+w) for k = 0..N-w"""
    prefix = np.concatenate(([0], np.cumsum(c.cells, dtype=np.int64)))
    return prefix[window:] - prefix[:-window]


def is_well_stirred(c: Configuration, params: StirringParams) -> bool:
    """Test the well-stirred condition at scale eps = w/N.

    Only cell-aligned offsets are checked: with eps = w/N the window integral
    is piecewise linear in the offset with breakpoints on cell boundaries, so
    its extremes are attained there.

    Args:
        c: Configuration to test
        params: kappa and window length

    Returns:
        True if kappa*w < m <= (1-kappa)*w for the 1-count m of every window

    Raises:
        ConfigurationError: If the window is longer than the configuration
    """
    w = params.window
    if w > c.n:
        raise ConfigurationError(f"Window of {w} cells exceeds configuration of {c.n} cells")
    p, q = params.kappa.numerator, params.kappa.denominator
    # Python ints: q * m overflows int64 for large denominators
    return all(p * w < q * m <= (q - p) * w for m in _window_counts(c, w).tolist())


def gen_alternating(n: int, period: int) -> Configuration:
    """Repeat period/2 black cells then period/2 white cells.

    Raises:
        ConfigurationError: If period is not a positive even divisor of n
    """
    if n < 1:
        raise ConfigurationError(f"Number of cells must be positive, got {n}")
    if period < 2 or period % 2 or n % period:
        raise ConfigurationError(f"Invalid period {period} for {n} cells: must be even and divide N")
    half = period // 2
    pattern = (1,) * half + (0,) * half
    return Configuration(pattern * (n // period))


def gen_random_stirred(n: int, params: StirringParams, seed: int, max_tries: int = 10_000) -> Configuration:
    """Sample a uniformly random configuration until it is well stirred.

    Args:
        n: Number of cells
        params: Stirring parameters to satisfy
        seed: Seed of the bit generator; equal seeds give equal results
        max_tries: Number of samples before giving up

    Returns:
        A configuration passing is_well_stirred

    Raises:
        ConfigurationError: If the window exceeds n or the seed is not a 64-bit unsigned integer
        GenerationError: If no window count is feasible or tries run out
    """
    if params.window > n:
        raise ConfigurationError(f"Window of {params.window} cells exceeds configuration of {n} cells")
    if not 0 <= seed < 2 ** 64:
        raise ConfigurationError(f"Seed must lie in [0, 2^64), got {seed}")
    if not params.admissible_counts():
        raise GenerationError(
            f"No window of {params.window} cells can satisfy kappa={params.kappa}; parameters too tight",
            tries=0,
        )

    rng = np.random.default_rng(seed)
    for attempt in range(1, max_tries + 1):
        candidate = Configuration.from_bits(rng.integers(0, 2, size=n))
        if is_well_stirred(candidate, params):
            logger.debug(f"Found stirred configuration after {attempt} tries")
            return candidate

    raise GenerationError(
        f"No stirred configuration found after {max_tries} tries; parameters too tight",
        tries=max_tries,
    )


def longest_run(c: Configuration, color: int) -> int:
    """Length in cells of the longest run of the given color (0 if absent)"""
    if color not in (0, 1):
        raise ConfigurationError(f"Color must be 0 or 1, got {color!r}")
    return max((length for value, _, length in blocks(c) if value == color), default=0)
