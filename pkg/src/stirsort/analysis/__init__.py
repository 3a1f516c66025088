"""Lower-bound analysis module."""

from .bounds import (
    BoundCertificate,
    CostChainReport,
    VCheckReport,
    Witness,
    certificate,
    chain_bound,
    check_cost_chain,
    check_V_inequalities,
    induction_chain,
    is_degenerate,
    lemma_lower_bound,
    n_of_eps,
)

__all__ = [
    'BoundCertificate',
    'CostChainReport',
    'VCheckReport',
    'Witness',
    'certificate',
    'chain_bound',
    'check_cost_chain',
    'check_V_inequalities',
    'induction_chain',
    'is_degenerate',
    'lemma_lower_bound',
    'n_of_eps',
]
