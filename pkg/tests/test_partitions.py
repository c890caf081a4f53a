from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from oracles import brute_centralizer, count_ssyt, sympy_partitions
from strategies import partitions, partitions_of
from unitary_pencils.partitions import (
    as_partition,
    conjugate,
    content_polynomial,
    contents,
    dominates,
    enumerate_partitions,
    hook_lengths,
    irrep_dimension,
    is_subpartition,
    schur_at_ones,
    subpartitions,
    z_lambda,
)


def test_enumerate_examples():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4, max_width=2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_partitions(3, max_height=2) == [(3,), (2, 1)]
    assert enumerate_partitions(5, max_height=1, max_width=3) == []


@pytest.mark.parametrize("n", range(0, 11))
def test_enumerate_matches_sympy(n):
    expected = sorted(sympy_partitions(n), reverse=True)
    assert enumerate_partitions(n) == expected
    for h in range(1, 4):
        for w in range(1, 4):
            filtered = [p for p in expected if len(p) <= h and (not p or p[0] <= w)]
            assert enumerate_partitions(n, h, w) == filtered


def test_conjugate_examples():
    assert conjugate((3, 2, 2, 1)) == (4, 3, 1)
    assert conjugate(()) == ()
    assert conjugate((5,)) == (1,) * 5


def test_hooks_and_contents():
    assert hook_lengths((5, 3, 2)) == [[7, 6, 4, 2, 1], [4, 3, 1], [2, 1]]
    assert hook_lengths((1,)) == [[1]]
    assert hook_lengths((2, 2)) == [[3, 2], [2, 1]]
    assert contents((5, 3, 2)) == [[0, 1, 2, 3, 4], [-1, 0, 1], [-2, -1]]
    assert contents((1,)) == [[0]]
    assert contents((2, 2)) == [[0, 1], [-1, 0]]


def test_content_polynomial_and_schur_examples():
    assert content_polynomial((1,), 7) == 7
    assert content_polynomial((2, 1), 3) == 24
    assert content_polynomial((4, 4, 3), 3) == 259200
    assert schur_at_ones((1,), 5) == 5
    assert schur_at_ones((2,), 4) == 10
    assert schur_at_ones((1, 1, 1), 2) == 0


def test_irrep_dimension_examples():
    assert irrep_dimension((6,)) == 1
    assert irrep_dimension((1,) * 6) == 1
    assert irrep_dimension((2, 1)) == 2


def test_dominance_and_subpartition_examples():
    assert dominates((2, 2), (3, 1))
    assert not dominates((3, 1), (2, 2))
    assert dominates((4, 2, 1), (4, 2, 1))
    assert is_subpartition((4, 1), (5, 3, 2))
    assert not is_subpartition((3, 3), (5, 2))
    assert is_subpartition((), (5, 3, 2))


def test_z_lambda_examples():
    assert z_lambda((1, 1, 1)) == 6
    assert z_lambda((2, 1)) == 2
    assert z_lambda((3,)) == 3


@pytest.mark.parametrize("n", range(1, 6))
def test_z_lambda_matches_brute_force(n):
    for rho in enumerate_partitions(n):
        assert z_lambda(rho) == brute_centralizer(rho)


def test_as_partition_validation():
    assert as_partition([3, 1, 0, 0]) == (3, 1)
    for bad in ([1, 2], [2, -1], [1.5]):
        with pytest.raises(ValueError):
            as_partition(bad)


@given(partitions(max_size=14))
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert len(lam) == (conjugate(lam)[0] if lam else 0)


@pytest.mark.parametrize("n", range(0, 9))
def test_regular_representation_dimension(n):
    assert sum(irrep_dimension(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_schur_over_dimension_equals_content_over_factorial(n):
    for d in range(1, 7):
        for lam in enumerate_partitions(n, max_height=d):
            assert Fraction(schur_at_ones(lam, d), irrep_dimension(lam)) == Fraction(
                content_polynomial(lam, d), factorial(n)
            )


@pytest.mark.parametrize("n", range(0, 7))
def test_schur_counts_semistandard_tableaux(n):
    for d in range(1, 5):
        for lam in enumerate_partitions(n):
            assert schur_at_ones(lam, d) == count_ssyt(lam, d)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(*(partitions_of(n),) * 3)))
def test_dominance_is_partial_order(triple):
    a, b, c = triple
    assert dominates(a, a)
    if dominates(a, b) and dominates(b, a):
        assert a == b
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(partitions_of(n), partitions_of(n))), st.integers(0, 3))
def test_content_polynomial_monotone_in_dominance(pair, extra):
    omega, big = pair
    if not dominates(omega, big):
        omega, big = big, omega
    if not dominates(omega, big):
        return
    d = max(len(omega), len(big)) + extra
    if omega == big:
        assert content_polynomial(omega, d) == content_polynomial(big, d)
    else:
        assert content_polynomial(omega, d) < content_polynomial(big, d)


def test_content_monotonicity_is_not_strict_across_weights():
    # relaxed dominance with unequal weights: () <= (1) yet C_()(1) = C_(1)(1) = 1
    assert dominates((), (1,))
    assert content_polynomial((), 1) == content_polynomial((1,), 1)


@given(partitions(max_size=10), st.integers(0, 10))
def test_subpartitions_are_contained(lam, size):
    subs = subpartitions(lam, size)
    assert len(set(subs)) == len(subs)
    brute = [mu for mu in enumerate_partitions(size) if is_subpartition(mu, lam)]
    assert subs == brute
