"""Torus mixing module."""

from .flow import (
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

__all__ = [
    'Axis',
    'FlowProgram',
    'GridMask',
    'ShearStep',
    'apply_step',
    'ball_counts',
    'cat_program',
    'checkerboard',
    'full_mask',
    'inverse_program',
    'linear_shear',
    'make_band_set',
    'mixing_scale',
    'program_cost',
    'program_from_steps',
    'run_program',
    'step_cost',
    'verify_measure_preserving',
]
