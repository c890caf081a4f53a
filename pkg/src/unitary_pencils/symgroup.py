"""Permutations, symmetric-group characters, Young subgroups and trace monomials.

Permutations are tuples of 0-based images: ``sigma[i]`` is the image of ``i``.
Products compose right to left, ``compose(s, t)[i] == s[t[i]]``. The 1-based
image arrays and cycle strings used for serialization are converted at the
boundary by :func:`from_one_based`, :func:`to_one_based`, :func:`parse_cycles`
and :func:`format_cycles`.
"""

from __future__ import annotations

import re
from functools import cache
from itertools import permutations, product
from math import factorial, prod
from typing import Iterator, Sequence

import numpy as np

from .partitions import Partition, as_partition

Permutation = tuple[int, ...]
MultiIndex = tuple[int, ...]

DEFAULT_GROUP_CAP = factorial(10)


def _check(sigma: Sequence[int]) -> Permutation:
    perm = tuple(int(i) for i in sigma)
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {sigma!r}")
    return perm


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    return tuple(sigma[i] for i in tau)


def inverse(sigma: Permutation) -> Permutation:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def cycles(sigma: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles ``(i, sigma(i), sigma^2(i), ...)``, each led by its smallest point."""
    seen = [False] * len(sigma)
    out = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = sigma[i]
        out.append(tuple(cyc))
    return out


def cycle_type(sigma: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in cycles(sigma)), reverse=True))


def sign(sigma: Permutation) -> int:
    return -1 if (len(sigma) - len(cycles(sigma))) % 2 else 1


def cycle_type_sign(rho: Sequence[int]) -> int:
    """Sign of any permutation with cycle type ``rho``."""
    return -1 if (sum(rho) - len(rho)) % 2 else 1


def from_one_based(images: Sequence[int]) -> Permutation:
    return _check([i - 1 for i in images])


def to_one_based(sigma: Permutation) -> list[int]:
    return [i + 1 for i in sigma]


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1 2)(3)"``.

    The ground set is ``{1..n}``; if ``n`` is omitted it is the largest point
    mentioned. ``"()"`` with ``n`` given is the identity.
    """
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    groups = [g.replace(",", " ").split() for g in _CYCLE.findall(stripped)]
    try:
        points = [[int(p) for p in g] for g in groups]
    except ValueError as exc:
        raise ValueError(f"malformed cycle notation: {text!r}") from exc
    flat = [p for g in points for p in g]
    if len(set(flat)) != len(flat) or any(p < 1 for p in flat):
        raise ValueError(f"cycles must use distinct positive points: {text!r}")
    size = max(flat, default=0) if n is None else n
    if flat and max(flat) > size:
        raise ValueError(f"cycle point exceeds n={size}: {text!r}")
    images = list(range(size))
    for cyc in points:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def format_cycles(sigma: Permutation) -> str:
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles(sigma))


@cache
def _character(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        # beads jumped over give the leg length of the removed border strip
        leg = sum(1 for c in beta if target < c < b)
        moved = sorted((target if c == b else c for c in beta), reverse=True)
        smaller = as_partition(moved[i] - (length - 1 - i) for i in range(length))
        total += (-1) ** leg * _character(smaller, rest)
    return total


def character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """Irreducible character ``chi_lam`` at any permutation of cycle type ``rho``.

    Uses the Murnaghan-Nakayama rule on beta-sets, memoized on ``(lam, rho)``.
    """
    lam = as_partition(lam)
    rho = as_partition(sorted(rho, reverse=True))
    if sum(lam) != sum(rho):
        raise ValueError(f"weight mismatch: |{lam}| != |{rho}|")
    return _character(lam, rho)


def _as_multi_index(alpha: Sequence[int]) -> MultiIndex:
    alpha = tuple(int(a) for a in alpha)
    if not alpha or any(a < 0 for a in alpha):
        raise ValueError(f"multi-index needs g >= 1 nonnegative entries: {alpha!r}")
    return alpha


def multi_factorial(alpha: Sequence[int]) -> int:
    return prod(factorial(a) for a in alpha)


def block_colors(alpha: Sequence[int]) -> tuple[int, ...]:
    """Block index of each position when ``0..n-1`` is cut into consecutive blocks of sizes ``alpha``."""
    return tuple(j for j, a in enumerate(alpha) for _ in range(a))


def young_subgroup_elements(
    alpha: Sequence[int], cap: int = DEFAULT_GROUP_CAP
) -> Iterator[Permutation]:
    """Iterate over the block-wise permutations of the consecutive blocks sized by ``alpha``."""
    alpha = _as_multi_index(alpha)
    if multi_factorial(alpha) > cap:
        raise ValueError(f"Young subgroup of {alpha} exceeds the cap of {cap} elements")
    starts = np.cumsum((0,) + alpha[:-1]).tolist()
    blocks = [range(s, s + a) for s, a in zip(starts, alpha)]
    for pieces in product(*(permutations(b) for b in blocks)):
        yield tuple(i for piece in pieces for i in piece)


def conjugate_by(gamma: Permutation, sigma: Permutation) -> Permutation:
    """``gamma * sigma * gamma^{-1}``."""
    return compose(compose(gamma, sigma), inverse(gamma))


def orbit_stabilizer(
    sigma: Sequence[int], alpha: Sequence[int], cap: int = DEFAULT_GROUP_CAP
) -> tuple[set[Permutation], int]:
    """Orbit of ``sigma`` under conjugation by the Young subgroup of ``alpha``, and its stabilizer size."""
    sigma = _check(sigma)
    alpha = _as_multi_index(alpha)
    if sum(alpha) != len(sigma):
        raise ValueError(f"|alpha| = {sum(alpha)} but sigma acts on {len(sigma)} points")
    orbit: set[Permutation] = set()
    stab = 0
    for gamma in young_subgroup_elements(alpha, cap):
        image = conjugate_by(gamma, sigma)
        orbit.add(image)
        stab += image == sigma
    return orbit, stab


def cycle_words(sigma: Sequence[int], alpha: Sequence[int]) -> list[tuple[int, ...]]:
    """Colored cycle words of ``sigma``: for each cycle ``(i, sigma(i), ...)`` the block indices along it."""
    sigma = _check(sigma)
    alpha = _as_multi_index(alpha)
    if sum(alpha) != len(sigma):
        raise ValueError(f"|alpha| = {sum(alpha)} but sigma acts on {len(sigma)} points")
    colors = block_colors(alpha)
    return [tuple(colors[i] for i in c) for c in cycles(sigma)]


def canonical_word_key(words: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Sorted tuple of lexicographically least rotations; equal keys give equal trace monomials."""

    def least_rotation(w: Sequence[int]) -> tuple[int, ...]:
        w = tuple(w)
        return min(w[i:] + w[:i] for i in range(len(w)))

    return tuple(sorted(least_rotation(w) for w in words))


def evaluate_words(words: Sequence[Sequence[int]], mats) -> complex | np.ndarray:
    """Product over ``words`` of ``tr(X_{w_0} X_{w_1} ...)``.

    ``mats[j]`` may carry leading batch axes, shape ``(..., k, k)``; the result
    then has the batch shape.
    """
    result = 1.0 + 0.0j
    for word in words:
        acc = mats[word[0]]
        for j in word[1:]:
            acc = acc @ mats[j]
        result = result * np.trace(acc, axis1=-2, axis2=-1)
    return result


def trace_monomial(sigma: Sequence[int], alpha: Sequence[int], mats) -> complex | np.ndarray:
    """Trace monomial of ``sigma`` colored by ``alpha`` at the matrix tuple ``mats``.

    Each position in block ``j`` carries ``mats[j]``; the value is the product
    over the cycles ``(i, sigma(i), sigma^2(i), ...)`` of the trace of the
    matrix word read along the cycle. This equals the trace of the tensor
    permutation operator of ``sigma^{-1}`` composed with the tensor product of
    the assigned matrices, without forming any ``k^n``-dimensional object.
    """
    alpha = _as_multi_index(alpha)
    if len(mats) != len(alpha):
        raise ValueError(f"expected {len(alpha)} matrices, got {len(mats)}")
    shapes = {np.shape(m)[-2:] for m in mats}
    if len(shapes) != 1 or any(len(s) != 2 or s[0] != s[1] for s in shapes):
        raise ValueError(f"matrices must share one square shape, got {shapes}")
    return evaluate_words(cycle_words(sigma, alpha), [np.asarray(m) for m in mats])
