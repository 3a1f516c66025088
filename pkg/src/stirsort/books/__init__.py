"""
Books Package

Binary configurations ("stacks of white and black books") and the
elementary transpositions that rearrange them.
"""

from .configuration import (
    Configuration,
    StirringParams,
    blocks,
    format_config,
    gen_alternating,
    gen_random_stirred,
    is_sorted,
    is_well_stirred,
    longest_run,
    parse_config,
    sorted_target,
    xi,
)
from .moves import (
    Rearrangement,
    Transposition,
    ValidationReport,
    apply,
    concatenate,
    cost,
    is_legal,
    legal_transpositions,
    uses_sub_block_moves,
    validate_rearrangement,
)

__all__ = [
    'Configuration',
    'StirringParams',
    'blocks',
    'format_config',
    'gen_alternating',
    'gen_random_stirred',
    'is_sorted',
    'is_well_stirred',
    'longest_run',
    'parse_config',
    'sorted_target',
    'xi',
    'Rearrangement',
    'Transposition',
    'ValidationReport',
    'apply',
    'concatenate',
    'cost',
    'is_legal',
    'legal_transpositions',
    'uses_sub_block_moves',
    'validate_rearrangement',
]
