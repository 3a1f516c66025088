"""
Lower Bound Tests

This module contains tests for n(eps), the lemma bound, the induction
chain and the V-inequality checkers.
"""

from fractions import Fraction

import pytest

from stirsort.analysis.bounds import (
    certificate,
    chain_bound,
    check_cost_chain,
    check_V_inequalities,
    induction_chain,
    is_degenerate,
    lemma_lower_bound,
    n_of_eps,
)
from stirsort.errors import BoundsError

# Test Data
HALF = Fraction(1, 2)
KAPPAS = [Fraction(1, 4), Fraction(1, 3), Fraction(2, 5), HALF, Fraction(3, 4)]


def growth(kappa, eps, n):
    return (1 + n * kappa ** 2) * kappa / 2 >= 2 ** (n + 1) * eps


# n(eps)

def test_n_of_eps_examples():
    """Test worked values of n(eps)"""
    assert n_of_eps(HALF, Fraction(1, 2 ** 10)) == 8
    assert n_of_eps(HALF, Fraction(1, 8)) == 0
    assert n_of_eps(HALF, Fraction(1, 2 ** 20)) == 19


@pytest.mark.parametrize("kappa", KAPPAS)
def test_n_of_eps_is_maximal(kappa):
    """Test n(eps) satisfies the growth condition and n(eps) + 1 does not"""
    for m in range(3, 41):
        eps = Fraction(1, 2 ** m)
        n = n_of_eps(kappa, eps)
        if n > 0 or growth(kappa, eps, 0):
            assert growth(kappa, eps, n)
        assert not growth(kappa, eps, n + 1)


@pytest.mark.parametrize("kappa", KAPPAS)
def test_n_of_eps_grows_logarithmically(kappa):
    """Test halving eps never decreases n(eps) and n(eps) tracks log2(1/eps)"""
    previous = 0
    for m in range(3, 41):
        n = n_of_eps(kappa, Fraction(1, 2 ** m))
        assert n >= previous
        previous = n
    assert n_of_eps(HALF, Fraction(1, 2 ** 40)) >= 40 - 3


def test_n_of_eps_invalid_parameters():
    """Test parameters outside (0, 1) are rejected"""
    with pytest.raises(BoundsError, match="kappa must lie in"):
        n_of_eps(Fraction(1), Fraction(1, 8))

    with pytest.raises(BoundsError, match="eps must lie in"):
        n_of_eps(HALF, Fraction(0))

    with pytest.raises(BoundsError, match="eps must lie in"):
        n_of_eps(HALF, Fraction(3, 2))


# Lemma bound

def test_lemma_lower_bound_examples():
    """Test kappa^3/4 * n(eps)"""
    assert lemma_lower_bound(HALF, Fraction(1, 2 ** 10)) == Fraction(1, 4)
    assert lemma_lower_bound(HALF, Fraction(1, 8)) == 0
    assert lemma_lower_bound(HALF, Fraction(1, 2 ** 20)) == Fraction(19, 32)


def test_degenerate():
    """Test the bound is flagged vacuous when n(eps) = 0"""
    assert is_degenerate(HALF, Fraction(1, 8))
    assert is_degenerate(HALF, Fraction(1, 2))
    assert not is_degenerate(HALF, Fraction(1, 2 ** 10))


# Induction chain

def test_induction_chain_examples():
    """Test worked chain values"""
    chain = induction_chain(HALF, Fraction(1, 16), Fraction(1, 4), 1)
    assert chain == [(0, Fraction(3, 16)), (1, Fraction(3, 16))]

    chain = induction_chain(HALF, Fraction(1, 4), Fraction(1, 4), 2)
    assert chain[2] == (2, Fraction(-5, 8))


def test_induction_chain_first_step():
    """Test v_1 = (1 + kappa^2)*s - 2*eps"""
    for kappa in KAPPAS:
        eps = Fraction(1, 64)
        s = kappa / 2
        assert induction_chain(kappa, eps, s, 1)[1][1] == (1 + kappa ** 2) * s - 2 * eps


def test_induction_chain_invalid():
    """Test s outside (0, kappa] and negative n_max are rejected"""
    with pytest.raises(BoundsError, match="s must lie in"):
        induction_chain(HALF, Fraction(1, 16), Fraction(0), 1)

    with pytest.raises(BoundsError, match="s must lie in"):
        induction_chain(HALF, Fraction(1, 16), Fraction(3, 4), 1)

    with pytest.raises(BoundsError, match="n_max"):
        induction_chain(HALF, Fraction(1, 16), Fraction(1, 4), -1)


def test_chain_bound():
    """Test the best chain value is never below zero and dominates every entry"""
    assert chain_bound(HALF, Fraction(1, 16), Fraction(1, 4)) == Fraction(3, 16)
    assert chain_bound(HALF, Fraction(1, 2), Fraction(1, 4)) == 0

    kappa, eps = Fraction(2, 5), Fraction(1, 1024)
    best = chain_bound(kappa, eps, kappa / 2)
    assert all(v <= best for _, v in induction_chain(kappa, eps, kappa / 2, 20))


def test_chain_at_n_eps_meets_lemma():
    """Test the chain at s = kappa/2 reaches the lemma bound at n(eps)"""
    for kappa in KAPPAS[:4]:
        for m in range(3, 30):
            eps = Fraction(1, 2 ** m)
            n = n_of_eps(kappa, eps)
            value = dict(induction_chain(kappa, eps, kappa / 2, n))[n]
            assert value >= lemma_lower_bound(kappa, eps)


# Certificates

def test_certificate():
    """Test certificate fields and the default chain length"""
    cert = certificate(HALF, Fraction(1, 2 ** 10))
    assert cert.n_eps == 8
    assert cert.bound == Fraction(1, 4)
    assert not cert.degenerate
    assert len(cert.chain) == 10
    assert cert.chain[0] == (0, Fraction(1, 4) - Fraction(1, 2 ** 10))

    assert len(certificate(HALF, Fraction(1, 2 ** 10), chain_length=3).chain) == 3
    assert certificate(HALF, Fraction(1, 2 ** 10), chain_length=0).chain == ()


def test_certificate_degenerate(caplog):
    """Test degenerate certificates are flagged and logged"""
    cert = certificate(HALF, Fraction(1, 8))
    assert cert.n_eps == 0
    assert cert.bound == 0
    assert cert.degenerate
    assert "Degenerate bound" in caplog.text


# V-inequalities

def test_check_V_identity_table():
    """Test V(s) = s satisfies V(s) >= s - eps"""
    table = {s: Fraction(s, 8) for s in range(1, 5)}
    report = check_V_inequalities(table, HALF, Fraction(1, 8), 8)
    assert report.holds_15


def test_check_V_zero_table():
    """Test a vanishing V fails with the first witness at s = 1/4"""
    table = {s: Fraction(0) for s in range(1, 5)}
    report = check_V_inequalities(table, HALF, Fraction(1, 8), 8)
    assert not report.holds_15
    assert not report.holds_16
    first = report.witnesses[0]
    assert first.s == Fraction(1, 4)
    assert first.sigma is None
    assert first.rhs == Fraction(1, 8)


def test_check_V_splitting_witness():
    """Test a splitting failure names the minimizing sigma"""
    table = {1: Fraction(1, 8), 2: Fraction(1, 8)}
    report = check_V_inequalities(table, HALF, Fraction(1, 16), 8)
    assert not report.holds_16
    split = [w for w in report.witnesses if w.sigma is not None]
    assert split[0].s == Fraction(1, 4)
    assert split[0].sigma == Fraction(1, 8)


def test_check_V_empty_table():
    """Test an empty table is rejected"""
    with pytest.raises(BoundsError, match="empty"):
        check_V_inequalities({}, HALF, Fraction(1, 8), 8)


def test_check_cost_chain():
    """Test Gamma >= V(1 - xi) and monotonicity"""
    report = check_cost_chain(5, {1: 0, 2: 2, 3: 5}, 4, 2)
    assert report.gamma_dominates
    assert report.monotone
    assert report.run_cells == 2

    report = check_cost_chain(1, {1: 0, 2: 2}, 4, 2)
    assert not report.gamma_dominates

    assert not check_cost_chain(9, {1: 3, 2: 2}, 4, 2).monotone
    assert check_cost_chain(0, {1: 0}, 4, 0).gamma_dominates
