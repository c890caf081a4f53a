"""Littlewood-Richardson coefficients and splitting rules over Young subgroups."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import cache
from math import prod
from typing import NamedTuple, Sequence

from .partitions import Partition, as_partition, irrep_dimension, is_subpartition, subpartitions


class SplitTerm(NamedTuple):
    mu: Partition
    nu: Partition
    coeff: int


class ChainTerm(NamedTuple):
    """One right-nested splitting chain: ``mus[i]`` has weight ``alpha[i]``."""

    mus: tuple[Partition, ...]
    coeff: int


@cache
def skew_lr_contents(lam: Partition, mu: Partition) -> Counter:
    """Tally the contents of all LR tableaux of skew shape ``lam / mu``.

    An LR tableau is a semistandard filling whose reverse reading word (rows
    top to bottom, each read right to left) is a lattice word. The returned
    counter maps each content partition ``nu`` to the coefficient
    ``c^lam_{mu, nu}``.
    """
    mu_pad = mu + (0,) * (len(lam) - len(mu))
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r] - 1, mu_pad[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(lam) + 2)
    tally: Counter = Counter()

    def place(idx: int, used: int) -> None:
        if idx == len(cells):
            tally[tuple(counts[1 : used + 1])] += 1
            return
        r, c = cells[idx]
        hi = min(used + 1, filling.get((r, c + 1), used + 1))
        lo = filling.get((r - 1, c), 0) + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            place(idx + 1, max(used, v))
            counts[v] -= 1
        filling.pop((r, c), None)

    place(0, 0)
    return tally


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient ``c^lam_{mu, nu}``."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(mu) + sum(nu) != sum(lam) or not is_subpartition(mu, lam):
        return 0
    return skew_lr_contents(lam, mu).get(nu, 0)


@cache
def _split_pairs(lam: Partition, a1: int) -> tuple[SplitTerm, ...]:
    terms = []
    for mu in subpartitions(lam, a1):
        for nu, coeff in sorted(skew_lr_contents(lam, mu).items(), reverse=True):
            terms.append(SplitTerm(mu, nu, coeff))
    return tuple(terms)


def split_pairs(lam: Sequence[int], a1: int, a2: int) -> list[SplitTerm]:
    """All ``(mu, nu)`` with ``|mu| = a1``, ``|nu| = a2`` and nonzero coefficient ``c^lam_{mu, nu}``."""
    lam = as_partition(lam)
    if a1 < 0 or a2 < 0 or a1 + a2 != sum(lam):
        raise ValueError(f"need a1 + a2 = |lam| with a1, a2 >= 0, got {a1}, {a2} for {lam}")
    return list(_split_pairs(lam, a1))


@cache
def _split_chains(lam: Partition, alpha: tuple[int, ...]) -> tuple[ChainTerm, ...]:
    if len(alpha) == 1:
        return (ChainTerm((lam,), 1),)
    out = []
    for mu, nu, coeff in _split_pairs(lam, alpha[0]):
        for tail in _split_chains(nu, alpha[1:]):
            out.append(ChainTerm((mu,) + tail.mus, coeff * tail.coeff))
    return tuple(out)


def split_chains(lam: Sequence[int], alpha: Sequence[int]) -> list[ChainTerm]:
    """Right-nested splitting chains of ``lam`` along the multi-index ``alpha``.

    Splits off a part of weight ``alpha[0]``, then recurses on the remaining
    shape with ``alpha[1:]``. Each chain records the pieces ``mu^1..mu^g`` and
    the product of the LR coefficients met along the way.
    """
    lam = as_partition(lam)
    alpha = tuple(int(a) for a in alpha)
    if not alpha or any(a < 0 for a in alpha) or sum(alpha) != sum(lam):
        raise ValueError(f"multi-index {alpha} must be nonnegative with weight |{lam}|")
    return list(_split_chains(lam, alpha))


def splitting_identity_value(lam: Sequence[int], alpha: Sequence[int]) -> Fraction:
    """Restriction of the character of ``lam`` to the Young subgroup, at the identity, divided by its degree.

    Always equal to 1; computed from the chain expansion as a consistency check.
    """
    total = sum(
        term.coeff * prod(irrep_dimension(mu) for mu in term.mus)
        for term in split_chains(lam, alpha)
    )
    return Fraction(total, irrep_dimension(as_partition(lam)))
