"""Content ratios ``C_lam(d) / (C_mu(d) C_nu(d))`` and exhaustive checks of their polynomial bound.

All comparisons use exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Literal, Sequence

from .errors import DomainError, ResourceError
from .lr import split_chains, split_pairs
from .partitions import (
    Partition,
    as_partition,
    compositions,
    content_polynomial,
    enumerate_partitions,
    is_subpartition,
    width,
)

EXHAUSTIVE_LIMIT = 12


@dataclass(frozen=True)
class RatioReport:
    lam: Partition
    mu: Partition
    nu: Partition
    d: int
    ratio: Fraction
    bound: int
    satisfies: bool
    is_special_form: bool

    def csv_row(self) -> str:
        return ";".join(
            [
                format_partition(self.lam),
                format_partition(self.mu),
                format_partition(self.nu),
                str(self.d),
                str(self.ratio.numerator),
                str(self.ratio.denominator),
                str(self.bound),
                "true" if self.satisfies else "false",
            ]
        )


CSV_HEADER = "lambda;mu;nu;d;ratio_num;ratio_den;bound;ok"


@dataclass(frozen=True)
class ChainReport:
    lam: Partition
    mus: tuple[Partition, ...]
    d: int
    ratio: Fraction
    bound: int
    satisfies: bool

    def csv_row(self) -> str:
        return ";".join(
            [
                format_partition(self.lam),
                "|".join(format_partition(m) for m in self.mus),
                str(self.d),
                str(self.ratio.numerator),
                str(self.ratio.denominator),
                str(self.bound),
                "true" if self.satisfies else "false",
            ]
        )


CHAIN_CSV_HEADER = "lambda;mus;d;ratio_num;ratio_den;bound;ok"


def format_partition(lam: Partition) -> str:
    """Compact ``(4,4,3)`` form used in CSV rows."""
    return "(" + ",".join(map(str, lam)) + ")"


def content_ratio(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], d: int) -> Fraction:
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if len(lam) > d:
        raise DomainError(f"ht({lam}) = {len(lam)} exceeds d = {d}")
    if len(mu) > d or len(nu) > d:
        raise DomainError(f"pieces {mu}, {nu} must have at most d = {d} rows")
    return Fraction(
        content_polynomial(lam, d), content_polynomial(mu, d) * content_polynomial(nu, d)
    )


def chain_content_ratio(lam: Sequence[int], mus: Sequence[Sequence[int]], d: int) -> Fraction:
    """``C_lam(d) / prod_i C_{mu^i}(d)``, the telescoped product of nested content ratios."""
    lam = as_partition(lam)
    if len(lam) > d:
        raise DomainError(f"ht({lam}) = {len(lam)} exceeds d = {d}")
    return Fraction(
        content_polynomial(lam, d), prod(content_polynomial(as_partition(m), d) for m in mus)
    )


def _padded(mu: Sequence[int], length: int) -> list[int]:
    return list(mu) + [0] * (length - len(mu))


def rows_of_skew(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """Row lengths of the skew diagram ``lam / mu`` sorted into a partition."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not is_subpartition(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    diffs = [a - b for a, b in zip(lam, _padded(mu, len(lam)))]
    return as_partition(sorted((v for v in diffs if v), reverse=True))


def is_sum_form(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> bool:
    """True iff ``lam = mu + nu`` part by part."""
    n = len(lam)
    if len(mu) > n or len(nu) > n:
        return False
    return all(a == b + c for a, b, c in zip(lam, _padded(mu, n), _padded(nu, n)))


def violating_indices(lam: Sequence[int], mu: Sequence[int]) -> list[int]:
    """1-based ``i`` with ``lam_i - mu_i < lam_{i+1} - mu_{i+1}``."""
    m = _padded(mu, len(lam))
    diffs = [a - b for a, b in zip(lam, m)]
    return [i + 1 for i in range(len(diffs) - 1) if diffs[i] < diffs[i + 1]]


def update_step(
    lam: Sequence[int], mu: Sequence[int], i0: int, variant: Literal["A", "B"]
) -> tuple[Partition, Partition]:
    """One move of the ratio-increasing walk at the 1-based violating row ``i0``.

    Variant ``"A"`` adds a cell to row ``i0 + 1`` of ``mu``; variant ``"B"``
    removes a cell from row ``i0``. Returns the new ``mu`` and the sorted
    rows of the new skew shape.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not is_subpartition(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    if i0 not in violating_indices(lam, mu):
        raise ValueError(f"row {i0} does not violate the decreasing-differences condition")
    m = _padded(mu, len(lam))
    top, below = i0 - 1, i0
    if variant == "A":
        if m[below] + 1 > m[top]:
            raise ValueError("update A would break the partition shape of mu")
        m[below] += 1
    elif variant == "B":
        if m[top] - 1 < m[below]:
            raise ValueError("update B would break the partition shape of mu")
        m[top] -= 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    new_mu = as_partition(m)
    return new_mu, rows_of_skew(lam, new_mu)


def greedy_walk(lam: Sequence[int], mu: Sequence[int], d: int) -> list[tuple[Partition, Partition, Fraction]]:
    """Follow ratio-increasing updates from ``(mu, rows(lam/mu))`` until ``lam = mu + nu``.

    At each step the smallest violating row is used and, of the feasible
    variants, the one giving the larger ratio is taken. Raises
    ``RuntimeError`` if no feasible variant increases the ratio.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    nu = rows_of_skew(lam, mu)
    path = [(mu, nu, content_ratio(lam, mu, nu, d))]
    while True:
        bad = violating_indices(lam, mu)
        if not bad:
            return path
        candidates = []
        for variant in ("A", "B"):
            try:
                new_mu, new_nu = update_step(lam, mu, bad[0], variant)
            except ValueError:
                continue
            candidates.append((content_ratio(lam, new_mu, new_nu, d), new_mu, new_nu))
        best = max(candidates, default=None, key=lambda c: c[0])
        if best is None or best[0] <= path[-1][2]:
            raise RuntimeError(f"no ratio-increasing update from mu = {mu} inside {lam}")
        ratio, mu, nu = best
        path.append((mu, nu, ratio))


def _report(lam: Partition, mu: Partition, nu: Partition, d: int, bound: int) -> RatioReport:
    ratio = content_ratio(lam, mu, nu, d)
    return RatioReport(lam, mu, nu, d, ratio, bound, ratio <= bound, is_sum_form(lam, mu, nu))


def all_split_reports(
    lam: Sequence[int], d: int, k: int | None = None, a1: int | None = None
) -> list[RatioReport]:
    """A report for every ``(mu, nu)`` with nonzero LR coefficient.

    All split sizes ``|mu| = 0..|lam|`` are covered unless ``a1`` fixes ``|mu|``.
    """
    lam = as_partition(lam)
    n = sum(lam)
    k = width(lam) if k is None else k
    bound = (n + 1) ** (k * k)
    sizes = range(n + 1) if a1 is None else [a1]
    return [
        _report(lam, term.mu, term.nu, d, bound)
        for size in sizes
        for term in split_pairs(lam, size, n - size)
    ]


def maximizers(
    lam: Sequence[int], d: int, k: int | None = None, a1: int | None = None
) -> list[RatioReport]:
    reports = all_split_reports(lam, d, k, a1)
    best = max(r.ratio for r in reports)
    return [r for r in reports if r.ratio == best]


def max_ratio_search(
    lam: Sequence[int],
    d: int,
    k: int | None = None,
    a1: int | None = None,
    limit: int = EXHAUSTIVE_LIMIT,
) -> RatioReport:
    """Exhaustive maximum of the content ratio over all admissible splits of ``lam``.

    The bound in the report is ``(n + 1)^(k^2)`` with ``k`` defaulting to the
    width of ``lam``. Passing ``a1`` restricts the search to ``|mu| = a1``.
    Ties return the first maximizer in enumeration order; :func:`maximizers`
    lists them all.
    """
    lam = as_partition(lam)
    if len(lam) > d:
        raise DomainError(f"ht({lam}) = {len(lam)} exceeds d = {d}")
    if sum(lam) > limit:
        raise ResourceError(f"|lam| = {sum(lam)} exceeds the exhaustive-search limit {limit}")
    return maximizers(lam, d, k, a1)[0]


def verify_bound(n: int, k: int, d: int) -> list[RatioReport]:
    """Reports for every ``lam |- n`` with ``wd <= k``, ``ht <= d`` and every admissible split."""
    if d < 1 or not k <= n <= k * d:
        raise ValueError(f"need d >= 1 and k <= n <= kd, got n={n}, k={k}, d={d}")
    return [
        report
        for lam in enumerate_partitions(n, max_height=d, max_width=k)
        for report in all_split_reports(lam, d, k)
    ]


def verify_chain_bound(n: int, k: int, d: int, g: int) -> list[ChainReport]:
    """Chained ratios ``C_lam / prod C_{mu^i}`` against ``(n + 1)^((g - 1) k^2)`` over all length-``g`` splits."""
    if d < 1 or g < 1 or not k <= n <= k * d:
        raise ValueError(f"need d, g >= 1 and k <= n <= kd, got n={n}, k={k}, d={d}, g={g}")
    bound = (n + 1) ** ((g - 1) * k * k)
    out = []
    for lam in enumerate_partitions(n, max_height=d, max_width=k):
        for alpha in compositions(n, g):
            for mus, _ in split_chains(lam, alpha):
                ratio = chain_content_ratio(lam, mus, d)
                out.append(ChainReport(lam, mus, d, ratio, bound, ratio <= bound))
    return out
