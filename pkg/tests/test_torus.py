"""
Torus Flow Tests

This module contains tests for shear steps, flow programs, the mixing
scale and the cost of flows on the torus grid.
"""

from fractions import Fraction

import numpy as np
import pytest

from stirsort.errors import FlowError
from stirsort.torus.flow import (
    Axis,
    FlowProgram,
    GridMask,
    ShearStep,
    apply_step,
    ball_counts,
    cat_program,
    checkerboard,
    full_mask,
    inverse_program,
    linear_shear,
    make_band_set,
    mixing_scale,
    program_cost,
    program_from_steps,
    run_program,
    step_cost,
    verify_measure_preserving,
)

# Test Data
KAPPA = Fraction(3, 10)
FUZZ_PROGRAMS = 1000
FUZZ_SIDE = 16


def random_program(rng, m):
    steps = []
    for _ in range(int(rng.integers(1, 6))):
        axis = Axis.HORIZONTAL if rng.integers(0, 2) else Axis.VERTICAL
        steps.append(ShearStep(axis, tuple(int(s) for s in rng.integers(-m, m, size=m))))
    return FlowProgram(m, tuple(steps))


# Masks

def test_band_set():
    """Test the half band"""
    band = make_band_set(4)
    assert band.m == 4
    assert band.mass == 8
    assert band.cells[:2].all()
    assert not band.cells[2:].any()
    assert make_band_set(2).mass == 2

    with pytest.raises(FlowError, match="positive even"):
        make_band_set(3)


def test_grid_mask_validation():
    """Test masks must be square 0/1 grids and are read-only"""
    with pytest.raises(FlowError, match="square"):
        GridMask(np.zeros((2, 3)))

    with pytest.raises(FlowError, match="0 or 1"):
        GridMask(np.full((2, 2), 2))

    mask = make_band_set(4)
    with pytest.raises(ValueError):
        mask.cells[0, 0] = 0
    assert mask == make_band_set(4)
    assert hash(mask) == hash(make_band_set(4))
    assert mask != full_mask(4)


# Steps and programs

def test_apply_step_zero_shift():
    """Test a zero shift is the identity"""
    band = make_band_set(4)
    assert apply_step(band, ShearStep(Axis.HORIZONTAL, (0, 0, 0, 0))) == band


def test_apply_vertical_step():
    """Test a vertical step moves columns cyclically"""
    band = make_band_set(4)
    moved = apply_step(band, ShearStep(Axis.VERTICAL, (0, 2, 0, 2)))
    expected = np.array([
        [1, 0, 1, 0],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
        [0, 1, 0, 1],
    ])
    assert np.array_equal(moved.cells, expected)
    assert moved.mass == band.mass


def test_apply_horizontal_step():
    """Test a horizontal step moves rows cyclically"""
    cells = np.zeros((4, 4), dtype=np.uint8)
    cells[1, 0] = 1
    moved = apply_step(GridMask(cells), ShearStep(Axis.HORIZONTAL, (0, 3, 0, 0)))
    assert moved.cells[1, 3] == 1
    assert moved.mass == 1


def test_apply_step_size_mismatch():
    """Test steps must match the grid"""
    with pytest.raises(FlowError, match="grid side"):
        apply_step(make_band_set(4), linear_shear(Axis.VERTICAL, 6))


def test_step_inverse():
    """Test a step followed by its inverse is the identity"""
    band = make_band_set(8)
    step = linear_shear(Axis.VERTICAL, 8)
    assert apply_step(apply_step(band, step), step.inverse()) == band


def test_run_program():
    """Test program execution"""
    band = make_band_set(8)
    assert run_program(band, FlowProgram(8)) == band

    step = ShearStep(Axis.VERTICAL, (1,) * 8)
    assert run_program(band, FlowProgram(8, (step, step.inverse()))) == band

    mixed = run_program(band, cat_program(1, 8))
    assert mixed.mass == 32

    with pytest.raises(FlowError, match="does not match"):
        run_program(make_band_set(4), FlowProgram(8))


def test_program_validation():
    """Test programs reject steps of another size"""
    with pytest.raises(FlowError, match="expected 4"):
        FlowProgram(4, (linear_shear(Axis.HORIZONTAL, 6),))

    with pytest.raises(FlowError, match="empty step list"):
        program_from_steps([])

    program = program_from_steps([linear_shear(Axis.HORIZONTAL, 6)])
    assert program.m == 6


def test_cat_program_validation():
    """Test stage count and grid side limits"""
    assert len(cat_program(3, 8).steps) == 6

    with pytest.raises(FlowError, match="stages"):
        cat_program(0, 8)

    with pytest.raises(FlowError, match=">= 4"):
        cat_program(1, 2)


def test_fuzz_mass_and_inverse():
    """Test random programs conserve mass, preserve measure and invert exactly"""
    rng = np.random.default_rng(0)
    for _ in range(FUZZ_PROGRAMS):
        program = random_program(rng, FUZZ_SIDE)
        mask = GridMask(rng.integers(0, 2, size=(FUZZ_SIDE, FUZZ_SIDE)))
        moved = run_program(mask, program)
        assert moved.mass == mask.mass
        assert verify_measure_preserving(program)
        assert run_program(moved, inverse_program(program)) == mask


def test_verify_measure_preserving_detects_collisions():
    """Test a step mapping cells onto each other is rejected"""

    class CollapsingStep(ShearStep):
        def destinations(self):
            return np.zeros(self.m * self.m, dtype=np.int64)

    program = FlowProgram(4, (CollapsingStep(Axis.HORIZONTAL, (0, 0, 0, 0)),))
    assert not verify_measure_preserving(program)
    assert verify_measure_preserving(FlowProgram(4))
    assert verify_measure_preserving(cat_program(2, 8))


# Mixing scale

def test_ball_counts():
    """Test cyclic box sums"""
    counts = ball_counts(full_mask(8), 1)
    assert counts.shape == (8, 8)
    assert (counts == 9).all()

    counts = ball_counts(make_band_set(8), 1)
    assert counts[0, 0] == 6  # rows 7, 0, 1 wrap around
    assert counts[5, 0] == 0


def test_mixing_scale_band():
    """Test the band is unmixed below a quarter of the side"""
    assert mixing_scale(make_band_set(16), KAPPA, [1, 2, 3]) is None


def test_mixing_scale_checkerboard():
    """Test the checkerboard mixes at the smallest radius with kappa below 4/9"""
    assert mixing_scale(checkerboard(16), KAPPA, [2]) == 2
    assert mixing_scale(checkerboard(16), KAPPA, [1, 2, 4]) == 1


def test_mixing_scale_full():
    """Test a full grid is never mixed"""
    assert mixing_scale(full_mask(16), KAPPA, [1, 2, 4]) is None


def test_mixing_scale_large_denominators():
    """Test kappa with denominators beyond 64-bit integers is compared exactly"""
    kappa = Fraction(1, 10 ** 19)
    assert mixing_scale(checkerboard(16), kappa, [1]) == 1
    assert mixing_scale(full_mask(16), kappa, [1, 2]) is None
    assert mixing_scale(make_band_set(16), Fraction(1, 2 ** 62), [1, 4]) == 4


def test_mixing_scale_validation():
    """Test kappa and radius ranges"""
    with pytest.raises(FlowError, match="Radius 8"):
        mixing_scale(make_band_set(16), KAPPA, [8])

    with pytest.raises(FlowError, match="kappa"):
        mixing_scale(make_band_set(16), Fraction(1, 2), [1])


def test_mixing_scale_is_invariant_under_translation():
    """Test translating the whole mask does not change the scale"""
    mask = run_program(make_band_set(16), cat_program(2, 16))
    shifted = apply_step(mask, ShearStep(Axis.HORIZONTAL, (5,) * 16))
    radii = [1, 2, 4]
    assert mixing_scale(shifted, KAPPA, radii) == mixing_scale(mask, KAPPA, radii)


# Cost

def test_step_cost():
    """Test total variation with cyclic differences"""
    assert step_cost(ShearStep(Axis.HORIZONTAL, (3,) * 16)) == 0
    assert step_cost(ShearStep(Axis.VERTICAL, (0,) * 8 + (1,) * 8)) == Fraction(1, 8)
    assert step_cost(linear_shear(Axis.VERTICAL, 16)) == Fraction(7, 2)


def test_step_cost_gauge_invariance():
    """Test adding a constant to every shift keeps the cost"""
    rng = np.random.default_rng(1)
    for _ in range(20):
        shifts = tuple(int(s) for s in rng.integers(-16, 16, size=16))
        shifted = tuple(s + 7 for s in shifts)
        assert step_cost(ShearStep(Axis.VERTICAL, shifts)) == step_cost(ShearStep(Axis.VERTICAL, shifted))


def test_program_cost():
    """Test costs add over steps"""
    assert program_cost(FlowProgram(16)) == 0
    assert program_cost(FlowProgram(16, (linear_shear(Axis.HORIZONTAL, 16),))) == Fraction(7, 2)
    assert program_cost(cat_program(1, 8)) == 6
    assert program_cost(cat_program(3, 256)) == Fraction(381, 16)


@pytest.mark.parametrize("k,m", [(1, 4), (2, 8), (3, 16), (5, 64)])
def test_cat_program_cost_formula(k, m):
    """Test k stages cost 2k(4M - 8)/M"""
    assert program_cost(cat_program(k, m)) == Fraction(2 * k * (4 * m - 8), m)
