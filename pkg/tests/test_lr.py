from fractions import Fraction

import pytest

from oracles import pieri_coefficient, schur_expand_product
from unitary_pencils.content_ratio import rows_of_skew
from unitary_pencils.lr import (
    SplitTerm,
    lr_coefficient,
    split_chains,
    split_pairs,
    splitting_identity_value,
)
from unitary_pencils.partitions import compositions
from unitary_pencils.partitions import dominates, enumerate_partitions, schur_at_ones, subpartitions


def test_lr_examples():
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((5, 3, 2), (5, 3, 2), ()) == 1
    assert lr_coefficient((4, 4, 3), (3, 2), (3, 2, 1)) >= 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((2, 1), (2,), (2,)) == 0
    assert lr_coefficient((2, 1), (3,), ()) == 0


def test_split_pairs_examples():
    assert split_pairs((2, 1), 1, 2) == [SplitTerm((1,), (2,), 1), SplitTerm((1,), (1, 1), 1)]
    assert split_pairs((5,), 2, 3) == [SplitTerm((2,), (3,), 1)]
    assert split_pairs((1, 1), 1, 1) == [SplitTerm((1,), (1,), 1)]
    with pytest.raises(ValueError):
        split_pairs((2, 1), 1, 1)


def test_splitting_identity_examples():
    assert splitting_identity_value((3, 1), (4,)) == 1
    assert splitting_identity_value((2, 1), (1, 1, 1)) == 1
    assert splitting_identity_value((2, 2), (2, 2)) == 1


def _pairs_up_to(total):
    for a in range(total + 1):
        for b in range(total + 1 - a):
            for mu in enumerate_partitions(a):
                for nu in enumerate_partitions(b):
                    yield mu, nu


@pytest.mark.parametrize("d", [3, 5, 8])
def test_schur_product_identity(d):
    for mu, nu in _pairs_up_to(8):
        n = sum(mu) + sum(nu)
        lhs = sum(
            lr_coefficient(lam, mu, nu) * schur_at_ones(lam, d) for lam in enumerate_partitions(n)
        )
        assert lhs == schur_at_ones(mu, d) * schur_at_ones(nu, d)


def test_lr_matches_symmetric_function_expansion():
    for mu, nu in _pairs_up_to(5):
        expected = schur_expand_product(mu, nu)
        for lam in enumerate_partitions(sum(mu) + sum(nu)):
            assert lr_coefficient(lam, mu, nu) == expected.get(lam, 0)


def test_pieri_rule():
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            for m in range(n + 1):
                for mu in enumerate_partitions(n - m):
                    assert lr_coefficient(lam, mu, (m,) if m else ()) == pieri_coefficient(lam, mu, m)


@pytest.mark.parametrize("n", range(1, 9))
def test_lr_symmetry(n):
    for lam in enumerate_partitions(n):
        for a1 in range(n + 1):
            for mu, nu, coeff in split_pairs(lam, a1, n - a1):
                assert lr_coefficient(lam, nu, mu) == coeff


@pytest.mark.parametrize("n", range(1, 10))
def test_rows_of_skew_is_supported_and_dominated(n):
    for lam in enumerate_partitions(n):
        for a1 in range(n + 1):
            terms = split_pairs(lam, a1, n - a1)
            for mu in subpartitions(lam, a1):
                rows = rows_of_skew(lam, mu)
                assert lr_coefficient(lam, mu, rows) >= 1
                for t in terms:
                    if t.mu == mu:
                        assert dominates(rows, t.nu)


@pytest.mark.parametrize("n", range(0, 9))
def test_splitting_identity_holds(n):
    for lam in enumerate_partitions(n):
        for g in (1, 2, 3, 4):
            if g == 4 and n > 6:
                continue
            for alpha in compositions(n, g):
                assert splitting_identity_value(lam, alpha) == Fraction(1)


def test_chains_for_single_block_and_zero_blocks():
    assert [c.mus for c in split_chains((3, 1), (4,))] == [((3, 1),)]
    chains = split_chains((2, 1), (0, 3, 0))
    assert [c.mus for c in chains] == [((), (2, 1), ())]
    assert all(c.coeff == 1 for c in chains)
