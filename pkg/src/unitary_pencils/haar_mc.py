"""Haar-random unitaries and Monte Carlo estimates of pencil moments and trace pairs.

Samples are drawn in fixed-size chunks. Chunk ``i`` uses its own generator
seeded from ``(seed, i)``, and chunk statistics are merged in chunk order, so
an estimate depends only on ``(seed, samples, chunk)`` and never on the number
of worker threads.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .moments import as_matrix_tuple
from .symgroup import trace_monomial

DEFAULT_CHUNK = 16_384


@dataclass(frozen=True)
class MomentEstimate:
    mean: complex
    stderr: float
    samples: int
    seed: int
    d: int
    g: int

    def to_json(self) -> dict:
        return {
            "mean": [self.mean.real, self.mean.imag],
            "stderr": self.stderr,
            "samples": self.samples,
            "seed": self.seed,
            "d": self.d,
            "g": self.g,
        }


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    """Independent counter-based generator for chunk ``index`` of a run seeded with ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(index,))))


def sample_haar(d: int, rng: np.random.Generator, size: Optional[int | tuple[int, ...]] = None) -> np.ndarray:
    """Haar-distributed unitary ``d x d`` matrices.

    A complex Ginibre matrix is QR-factorized and the columns of ``Q`` are
    multiplied by the phases of ``diag(R)``, which makes the law exactly Haar.
    ``size`` adds leading batch axes.
    """
    if d < 1:
        raise ValueError("d must be positive")
    batch = () if size is None else ((size,) if isinstance(size, int) else tuple(size))
    shape = batch + (d, d)
    while True:
        z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)
        q, r = np.linalg.qr(z)
        diag = np.diagonal(r, axis1=-2, axis2=-1)
        scale = np.abs(diag)
        # a rank-deficient Ginibre draw has probability zero; redraw if it happens
        if np.all(scale > 0):
            return q * (diag / scale)[..., None, :]


def pencil_matrix(mats, unitaries) -> np.ndarray:
    """``I_{kd} + sum_j X_j (x) U_j`` for unitaries of shape ``(g, ..., d, d)``."""
    xs = as_matrix_tuple(mats)
    us = np.asarray(unitaries)
    g, k = xs.shape[0], xs.shape[1]
    if us.shape[0] != g:
        raise ValueError(f"need {g} unitaries, got {us.shape[0]}")
    d = us.shape[-1]
    blocks = np.einsum("jab,j...cd->...acbd", xs, us)
    return np.eye(k * d) + blocks.reshape(us.shape[1:-2] + (k * d, k * d))


def pencil_determinant(mats, unitaries) -> complex | np.ndarray:
    """``det(I_{kd} + sum_j X_j (x) U_j)`` by LU factorization with partial pivoting."""
    return np.linalg.det(pencil_matrix(mats, unitaries))


def _chunk_stats(values: np.ndarray) -> tuple[int, complex, float]:
    mean = values.mean()
    return values.size, complex(mean), float(np.sum(np.abs(values - mean) ** 2))


def _merge(a: tuple[int, complex, float], b: tuple[int, complex, float]) -> tuple[int, complex, float]:
    na, ma, sa = a
    nb, mb, sb = b
    n = na + nb
    delta = mb - ma
    return n, ma + delta * (nb / n), sa + sb + abs(delta) ** 2 * na * nb / n


def _run(
    draw: Callable[[np.random.Generator, int], np.ndarray],
    samples: int,
    seed: int,
    chunk: int,
    threads: int,
) -> tuple[complex, float]:
    if samples < 2:
        raise ValueError("need at least 2 samples")
    if chunk < 1:
        raise ValueError("chunk size must be positive")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit nonnegative integer")
    sizes = [min(chunk, samples - start) for start in range(0, samples, chunk)]

    def job(index: int) -> tuple[int, complex, float]:
        return _chunk_stats(draw(chunk_rng(seed, index), sizes[index]))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            stats = list(pool.map(job, range(len(sizes))))
    else:
        stats = [job(i) for i in range(len(sizes))]
    total = stats[0]
    for s in stats[1:]:
        total = _merge(total, s)
    n, mean, ss = total
    return mean, float(np.sqrt(ss / (n - 1) / n))


def estimate_moment(
    xs,
    ys,
    d: int,
    samples: int,
    seed: int,
    chunk: int = DEFAULT_CHUNK,
    threads: int = 1,
) -> MomentEstimate:
    """Monte Carlo estimate of the Haar average of ``det(L_X(U)) * conj(det(L_Y(U)))``."""
    xs, ys = as_matrix_tuple(xs), as_matrix_tuple(ys)
    g = xs.shape[0]
    if ys.shape[0] != g:
        raise ValueError("X and Y need the same number of matrices")
    same = xs.shape == ys.shape and np.array_equal(xs, ys)

    def draw(rng: np.random.Generator, n: int) -> np.ndarray:
        us = sample_haar(d, rng, (g, n))
        a = pencil_determinant(xs, us)
        b = a if same else pencil_determinant(ys, us)
        return a * b.conj()

    mean, stderr = _run(draw, samples, seed, chunk, threads)
    return MomentEstimate(mean, stderr, samples, seed, d, g)


def estimate_trace_pair(
    sigma: Sequence[int],
    tau: Sequence[int],
    alpha: Sequence[int],
    d: int,
    samples: int,
    seed: int,
    beta: Optional[Sequence[int]] = None,
    chunk: int = DEFAULT_CHUNK,
    threads: int = 1,
) -> MomentEstimate:
    """Monte Carlo estimate of the Haar average of ``p_{sigma,alpha}(U) * conj(p_{tau,beta}(U))``.

    ``beta`` defaults to ``alpha``; both must have the same length ``g``.
    """
    alpha = tuple(alpha)
    beta = alpha if beta is None else tuple(beta)
    if len(alpha) != len(beta):
        raise ValueError("alpha and beta need the same length")
    g = len(alpha)
    # blocks of size zero never appear in a word, so they need no unitary
    used = [j for j in range(g) if alpha[j] or beta[j]] or [0]

    def draw(rng: np.random.Generator, n: int) -> np.ndarray:
        drawn = sample_haar(d, rng, (len(used), n))
        us = [drawn[used.index(j)] if j in used else drawn[0] for j in range(g)]
        return trace_monomial(sigma, alpha, us) * np.conj(trace_monomial(tau, beta, us))

    mean, stderr = _run(draw, samples, seed, chunk, threads)
    return MomentEstimate(mean, stderr, samples, seed, d, g)
