"""Integer partitions and Young-diagram statistics.

A partition is a plain tuple of positive integers in weakly decreasing order;
``()`` is the unique partition of zero. Weight, height and width are derived
on demand so that equality stays structural.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, Iterator, Optional, Sequence

Partition = tuple[int, ...]
CellGrid = list[list[int]]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple.

    Trailing zeros are dropped. Raises ``ValueError`` if any part is negative,
    non-integral, or if the parts are not weakly decreasing.
    """
    raw = list(parts)
    lam = tuple(int(p) for p in raw)
    if any(p != q for p, q in zip(lam, raw)):
        raise ValueError(f"partition parts must be integers: {parts!r}")
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam!r}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {lam!r}")
    return lam


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def height(lam: Sequence[int]) -> int:
    return len(lam)


def width(lam: Sequence[int]) -> int:
    return lam[0] if lam else 0


def enumerate_partitions(
    n: int, max_height: Optional[int] = None, max_width: Optional[int] = None
) -> list[Partition]:
    """All partitions of ``n`` with at most ``max_height`` parts, each at most ``max_width``.

    The result is in lexicographically descending order, e.g. ``(3,)`` before
    ``(2, 1)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    h = n if max_height is None else max_height
    w = n if max_width is None else max_width
    return list(_partitions(n, min(n, w), h))


@cache
def _partitions(n: int, largest: int, slots: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    if slots <= 0 or largest <= 0 or largest * slots < n:
        return ()
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first, slots - 1):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    """Column lengths of the Young diagram of ``lam``."""
    return tuple(sum(1 for p in lam if p > j) for j in range(width(lam)))


def hook_lengths(lam: Sequence[int]) -> CellGrid:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def contents(lam: Sequence[int]) -> CellGrid:
    return [[j - i for j in range(lam[i])] for i in range(len(lam))]


def _cells(grid: CellGrid) -> Iterable[int]:
    return (v for row in grid for v in row)


@cache
def content_polynomial(lam: Partition, d: int) -> int:
    """Product of ``d + c`` over the contents ``c`` of the cells of ``lam``."""
    return prod(d + c for c in _cells(contents(lam)))


@cache
def schur_at_ones(lam: Partition, d: int) -> int:
    """Schur polynomial of shape ``lam`` evaluated at ``d`` ones (hook-content formula)."""
    value = Fraction(content_polynomial(lam, d), prod(_cells(hook_lengths(lam))))
    assert value.denominator == 1
    return int(value)


@cache
def irrep_dimension(lam: Partition) -> int:
    """Dimension of the irreducible representation of the symmetric group labelled by ``lam``."""
    return factorial(weight(lam)) // prod(_cells(hook_lengths(lam)))


def _padded(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    m = max(len(a), len(b))
    return list(a) + [0] * (m - len(a)), list(b) + [0] * (m - len(b))


def dominates(omega: Sequence[int], big_omega: Sequence[int]) -> bool:
    """True iff every prefix sum of ``omega`` is at most the matching prefix sum of ``big_omega``.

    Shorter partitions are padded with zeros. The weights need not agree, so
    this is the relaxed dominance relation ``omega <= big_omega``.
    """
    a, b = _padded(omega, big_omega)
    sa = sb = 0
    for p, q in zip(a, b):
        sa += p
        sb += q
        if sa > sb:
            return False
    return True


def is_subpartition(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff the Young diagram of ``mu`` fits inside that of ``lam`` (zero padding)."""
    a, b = _padded(mu, lam)
    return all(p <= q for p, q in zip(a, b))


def z_lambda(lam: Sequence[int]) -> int:
    """Size of the centralizer of a permutation with cycle type ``lam``."""
    return prod(m**mult * factorial(mult) for m, mult in Counter(lam).items())


def subpartitions(lam: Partition, size: int) -> list[Partition]:
    """All partitions of ``size`` contained in ``lam``, lexicographically descending."""
    return list(_subpartitions(lam, size, 0, size))


@cache
def _subpartitions(lam: Partition, size: int, row: int, cap: int) -> tuple[Partition, ...]:
    if size == 0:
        return ((),)
    if row >= len(lam):
        return ()
    out = []
    for first in range(min(lam[row], cap, size), 0, -1):
        for rest in _subpartitions(lam, size - first, row + 1, first):
            out.append((first,) + rest)
    return tuple(out)


def compositions(n: int, g: int, support: Optional[Sequence[bool]] = None) -> Iterator[tuple[int, ...]]:
    """Multi-indices of length ``g`` and weight ``n``, with zeros forced where ``support`` is False."""
    slots = [j for j in range(g) if support is None or support[j]]

    def rec(remaining: int, i: int) -> Iterator[list[int]]:
        if i == len(slots) - 1:
            yield [remaining]
            return
        for a in range(remaining, -1, -1):
            for rest in rec(remaining - a, i + 1):
                yield [a] + rest

    if not slots:
        if n == 0:
            yield (0,) * g
        return
    for values in rec(n, 0):
        alpha = [0] * g
        for j, a in zip(slots, values):
            alpha[j] = a
        yield tuple(alpha)
