"""Exact finite-size moments, large-size limits and spectral functionals of unitary pencils.

Scalar tuples are sequences of ``g`` numbers; matrix tuples are arrays of shape
``(g, k, k)``. When every input is an exact number (``int``, ``Fraction`` or
:class:`GaussianRational`) the finite-size formulas are evaluated in exact
rational arithmetic; otherwise the combinatorial weights stay exact and are
contracted against floating-point monomials at the end.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import factorial, perm, prod
from typing import Optional, Sequence, Union

import numpy as np
import scipy.linalg

from .errors import DomainError, NumericalError, ResourceError
from .gaussian import GaussianRational, exact_tuple, format_exact, rational_from_float
from .lr import split_chains, split_pairs
from .partitions import (
    Partition,
    as_partition,
    compositions,
    conjugate,
    content_polynomial,
    enumerate_partitions,
    irrep_dimension,
    schur_at_ones,
)
from .symgroup import canonical_word_key, cycle_words, evaluate_words, multi_factorial

ExactValue = Union[Fraction, GaussianRational]

FULL_SUM_MAX_D = 12
DEFAULT_HOMOGENEOUS_CAP = 8


@dataclass(frozen=True)
class MomentValue:
    value: complex
    exact: Optional[ExactValue]
    truncation_error_bound: Optional[float]
    d: int
    k: int
    g: int

    @property
    def real(self) -> float:
        return self.value.real

    def to_json(self) -> dict:
        z = complex(self.value)
        return {
            "float": z.real if z.imag == 0 else [z.real, z.imag],
            "exact": None if self.exact is None else format_exact(self.exact),
            "trunc_bound": self.truncation_error_bound,
            "d": self.d,
            "k": self.k,
            "g": self.g,
        }


def _simplify(value: GaussianRational) -> ExactValue:
    return value.re if value.is_real() else value


def _multinomial(n: int, alpha: Sequence[int]) -> int:
    return factorial(n) // multi_factorial(alpha)


def c_coefficient(d: int, alpha: Sequence[int]) -> Fraction:
    """Weight ``[d]_n / prod_j [d]_{alpha_j}`` of the monomial ``x^alpha conj(y)^alpha``.

    Here ``[d]_m`` is the falling factorial and ``n = |alpha|``. It vanishes
    once ``n > d``.
    """
    n = sum(alpha)
    if n > d:
        return Fraction(0)
    return Fraction(perm(d, n), prod(perm(d, a) for a in alpha))


def _prepare_pair(x: Sequence, y: Sequence) -> tuple[tuple[GaussianRational, ...], tuple[GaussianRational, ...], bool]:
    if len(x) != len(y) or not len(x):
        raise ValueError(f"x and y must have the same positive length, got {len(x)} and {len(y)}")
    ex, ey = exact_tuple(x), exact_tuple(y)
    exact = ex is not None and ey is not None
    if not exact:
        ex = tuple(rational_from_float(v) if not isinstance(v, GaussianRational) else v for v in x)
        ey = tuple(rational_from_float(v) if not isinstance(v, GaussianRational) else v for v in y)
    return ex, ey, exact


def _scalar_series(d: int, t: Sequence[GaussianRational]) -> GaussianRational:
    """Sum over n <= d of [d]_n n! [z^n] prod_j sum_a t_j^a z^a / (a! [d]_a), in integer arithmetic."""
    t = [v for v in t if v != 0]
    if not t:
        return GaussianRational(1)
    q = math.lcm(*(v.re.denominator for v in t), *(v.im.denominator for v in t))
    units = [((v.re * q).numerator, (v.im * q).numerator) for v in t]
    fact_d = factorial(d)
    # (d!)^2 / (a! [d]_a) = d! (d-a)! / a!, an integer
    weights = [fact_d // factorial(a) * factorial(d - a) for a in range(d + 1)]
    poly_re, poly_im = [1] + [0] * d, [0] * (d + 1)
    for ur, ui in units:
        pr, pi = [1], [0]
        for _ in range(d):
            pr.append(pr[-1] * ur - pi[-1] * ui)
            pi.append(pr[-2] * ui + pi[-1] * ur)
        fr = [w * a for w, a in zip(weights, pr)]
        fi = [w * a for w, a in zip(weights, pi)]
        new_re, new_im = [0] * (d + 1), [0] * (d + 1)
        for i in range(d + 1):
            ar, ai = poly_re[i], poly_im[i]
            if not (ar or ai):
                continue
            for j in range(d + 1 - i):
                new_re[i + j] += ar * fr[j] - ai * fi[j]
                new_im[i + j] += ar * fi[j] + ai * fr[j]
        poly_re, poly_im = new_re, new_im
    scale = fact_d ** (2 * len(units))
    total_re = Fraction(0)
    total_im = Fraction(0)
    for n in range(d + 1):
        factor = Fraction(perm(d, n) * factorial(n), scale * q**n)
        total_re += factor * poly_re[n]
        total_im += factor * poly_im[n]
    return GaussianRational(total_re, total_im)


def _scalar_direct(d: int, t: Sequence[GaussianRational]) -> GaussianRational:
    support = [v != 0 for v in t]
    total = GaussianRational(0)
    for n in range(d + 1):
        for alpha in compositions(n, len(t), support):
            weight = c_coefficient(d, alpha) * _multinomial(n, alpha)
            total = total + prod((v**a for v, a in zip(t, alpha)), start=GaussianRational(weight))
    return total


def exact_scalar_moment(d: int, x: Sequence, y: Sequence, method: str = "series") -> MomentValue:
    """Haar average of ``det(I + sum x_j U_j) * conj(det(I + sum y_j U_j))`` over ``U(d)^g``.

    ``method="series"`` convolves one-variable generating polynomials in
    integer arithmetic (cost ``O(g d^2)`` big-integer products);
    ``method="direct"`` sums over every multi-index of weight at most ``d``.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    ex, ey, exact = _prepare_pair(x, y)
    t = [a * b.conjugate() for a, b in zip(ex, ey)]
    if method == "series":
        result = _scalar_series(d, t)
    elif method == "direct":
        result = _scalar_direct(d, t)
    else:
        raise ValueError(f"unknown method {method!r}")
    return MomentValue(complex(result), _simplify(result) if exact else None, None, d, 1, len(ex))


def _norm_squared(x: Sequence) -> float:
    return float(sum(abs(complex(v)) ** 2 for v in x))


def inner(x: Sequence, y: Sequence) -> complex:
    """``<x, y> = sum_j x_j conj(y_j)``."""
    return complex(sum(complex(a) * complex(b).conjugate() for a, b in zip(x, y)))


def scalar_limit(x: Sequence, y: Sequence) -> complex:
    """Large-``d`` limit ``1 / (1 - <x, y>)`` of the scalar moment."""
    if len(x) != len(y):
        raise ValueError("x and y must have the same length")
    if _norm_squared(x) >= 1 or _norm_squared(y) >= 1:
        raise DomainError("the limit needs ||x||, ||y|| < 1")
    return 1 / (1 - inner(x, y))


# -- identity-multiple coefficients -------------------------------------------


@cache
def _chain_weight(lam: Partition, alpha: tuple[int, ...], d: int) -> Fraction:
    """Sum over splitting chains of (product of LR coefficients) * prod_i chi(mu^i) / C_{mu^i}(d)."""
    if len(alpha) == 1:
        return Fraction(irrep_dimension(lam), content_polynomial(lam, d))
    total = Fraction(0)
    for mu, nu, coeff in split_pairs(lam, alpha[0], sum(alpha[1:])):
        total += (
            coeff
            * Fraction(irrep_dimension(mu), content_polynomial(mu, d))
            * _chain_weight(nu, alpha[1:], d)
        )
    return total


@cache
def _identity_bracket(d: int, k: int, alpha: tuple[int, ...]) -> Fraction:
    n = sum(alpha)
    total = Fraction(0)
    for lam in enumerate_partitions(n, max_height=d, max_width=k):
        dual = schur_at_ones(conjugate(lam), k)
        total += (
            dual * dual
            * Fraction(content_polynomial(lam, d), irrep_dimension(lam))
            * _chain_weight(lam, alpha, d)
        )
    return total


def identity_moment_coefficient(d: int, k: int, alpha: Sequence[int]) -> Fraction:
    """Coefficient of ``|x|^{2 alpha}`` in the ``2k``-th absolute moment with identity-multiple coefficients.

    It is the multinomial ``binom(n, alpha)`` times a sum over ``lam |- n`` with
    ``wd(lam) <= k`` and ``ht(lam) <= d`` of ``s_{lam*}(k)^2`` times a convex
    combination of content ratios ``C_lam(d) / prod_i C_{mu^i}(d)``. The
    coefficient is symmetric in ``alpha``, so it is cached on the sorted
    nonzero entries.
    """
    key = tuple(sorted((a for a in alpha if a), reverse=True)) or (0,)
    return _multinomial(sum(alpha), alpha) * _identity_bracket(d, k, key)


def trace_projection_expectation(lam: Sequence[int], alpha: Sequence[int], d: int) -> Fraction:
    """Exact ``s_lam(d) * sum_chains prod(LR) * prod_i chi(mu^i)^2 / s_{mu^i}(d)``; zero if ``ht(lam) > d``."""
    lam = as_partition(lam)
    if len(lam) > d:
        return Fraction(0)
    total = Fraction(0)
    for mus, coeff in split_chains(lam, alpha):
        term = Fraction(coeff)
        for mu in mus:
            term *= Fraction(irrep_dimension(mu) ** 2, schur_at_ones(mu, d))
        total += term
    return schur_at_ones(lam, d) * total


def truncation_tail_bound(
    n_max: int, k: int, g: int, radius_squared: float, tail_scale: float = 1.0
) -> float:
    """Certified bound on the identity-moment terms of degree above ``n_max``.

    The degree-``n`` term is at most
    ``binom(n + k^2 - 1, k^2 - 1) * (n + 1)^((g - 1) k^2) * r^(2n)``: the
    first factor is the sum of ``s_{lam*}(k)^2`` over ``wd(lam) <= k`` and the
    second bounds every chained content ratio. The tail is closed by a
    geometric majorant once the term ratio drops below one.
    ``tail_scale`` multiplies the result as a safety margin.
    """
    q = radius_squared
    if q >= 1:
        raise DomainError("tail bound diverges for ||x|| >= 1")
    if q == 0:
        return 0.0
    kk = k * k
    exponent = max(g - 1, 0) * kk

    def log_term(n: int) -> float:
        return (
            math.lgamma(n + kk) - math.lgamma(n + 1) - math.lgamma(kk)
            + exponent * math.log(n + 1) + n * math.log(q)
        )

    total = 0.0
    n = n_max + 1
    while True:
        ratio = math.exp(log_term(n + 1) - log_term(n))
        if ratio < 1:
            total += math.exp(log_term(n)) / (1 - ratio)
            break
        total += math.exp(log_term(n))
        n += 1
    return tail_scale * total * (1 + 1e-12)


def choose_n_max(d: int, k: int, x: Sequence, target: float = 1e-12) -> int:
    """Smallest degree cutoff whose certified tail bound is below ``target`` (at most ``kd``)."""
    squares = [abs(complex(v)) ** 2 for v in x]
    r2 = sum(squares)
    active = sum(s > 0 for s in squares)
    full = k * d
    if r2 >= 1:
        return full
    n = k
    while n < full and truncation_tail_bound(n, k, active, r2) > target:
        n += 1
    return n


def exact_identity_moment(
    d: int, k: int, x: Sequence, n_max: Optional[int] = None, tail_scale: float = 1.0
) -> MomentValue:
    """Haar average of ``|det(I_{kd} + sum_j x_j I_k (x) U_j)|^2 = |det(I + sum x_j U_j)|^{2k}``.

    The sum over degrees is finite (``n <= kd``). For ``d`` above
    ``FULL_SUM_MAX_D`` the caller must pass ``n_max``; truncating below ``kd``
    attaches a certified tail bound.
    """
    if d < 1 or k < 1:
        raise ValueError("d and k must be positive")
    g = len(x)
    if not g:
        raise ValueError("x must be nonempty")
    full = k * d
    if n_max is None:
        if d > FULL_SUM_MAX_D:
            raise ValueError(f"pass n_max explicitly for d > {FULL_SUM_MAX_D}")
        n_max = full
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    ex = exact_tuple(x)
    squares = [v.abs2() for v in ex] if ex is not None else [abs(complex(v)) ** 2 for v in x]
    support = [s != 0 for s in squares]
    bound = None
    if n_max < full:
        r2 = float(sum(squares))
        if r2 >= 1:
            raise DomainError("||x|| >= 1: truncated series has no certified tail")
        active = sum(support)
        bound = truncation_tail_bound(n_max, k, active, r2, tail_scale)
    total = Fraction(0) if ex is not None else 0.0
    for n in range(min(n_max, full) + 1):
        for alpha in compositions(n, g, support):
            coeff = identity_moment_coefficient(d, k, alpha)
            if ex is not None:
                total += coeff * prod((s**a for s, a in zip(squares, alpha)), start=Fraction(1))
            else:
                total += float(coeff) * prod(s**a for s, a in zip(squares, alpha))
    exact = total if ex is not None else None
    return MomentValue(complex(float(total)), exact, bound, d, k, g)


# -- matrix tuples ------------------------------------------------------------


def as_matrix_tuple(mats) -> np.ndarray:
    """Coerce to a complex array of shape ``(g, k, k)``; a flat scalar tuple becomes ``k = 1``."""
    try:
        arr = np.asarray(mats, dtype=complex)
    except TypeError:
        arr = np.vectorize(complex, otypes=[complex])(np.asarray(mats, dtype=object))
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1, 1)
    if arr.ndim != 3 or arr.shape[1] != arr.shape[2] or arr.shape[0] < 1:
        raise ValueError(f"expected g square matrices, got shape {arr.shape}")
    return arr


def matrix_tuple_to_json(mats) -> dict:
    arr = as_matrix_tuple(mats)
    return {
        "k": arr.shape[1],
        "g": arr.shape[0],
        "matrices": [[[[z.real, z.imag] for z in row] for row in m] for m in arr.tolist()],
    }


def matrix_tuple_from_json(payload: dict) -> np.ndarray:
    try:
        arr = np.array(payload["matrices"], dtype=float)
        k, g = int(payload["k"]), int(payload["g"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix tuple JSON: {exc}") from exc
    if arr.shape != (g, k, k, 2):
        raise ValueError(f"matrix tuple JSON has shape {arr.shape[:3]}, expected {(g, k, k)}")
    return arr[..., 0] + 1j * arr[..., 1]


def homogeneous_coefficient(
    n: int, xs, ys, cap: int = DEFAULT_HOMOGENEOUS_CAP
) -> complex:
    """Degree-``n`` part of ``det(I - sum_j X_j (x) conj(Y_j))^{-1}``.

    Equals ``(1/n!) sum_alpha binom(n, alpha) sum_{sigma in S_n}
    p_{sigma,alpha}(X) conj(p_{sigma,alpha}(Y))``. Scalar tuples use the closed
    form ``<x, y>^n``; the matrix path enumerates ``S_n`` and reuses trace
    monomials whose colored cycle words agree up to rotation.
    """
    xs, ys = as_matrix_tuple(xs), as_matrix_tuple(ys)
    if xs.shape[0] != ys.shape[0]:
        raise ValueError("X and Y need the same number of matrices")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1 + 0j
    if xs.shape[1] == 1 and ys.shape[1] == 1:
        return inner(xs[:, 0, 0], ys[:, 0, 0]) ** n
    if n > cap:
        raise ResourceError(f"n = {n} exceeds the permutation-sum cap {cap}")
    g = xs.shape[0]
    total = 0j
    for alpha in compositions(n, g):
        memo: dict = {}
        partial = 0j
        for sigma in permutations(range(n)):
            words = cycle_words(sigma, alpha)
            key = canonical_word_key(words)
            if key not in memo:
                memo[key] = complex(evaluate_words(words, xs)) * complex(evaluate_words(words, ys)).conjugate()
            partial += memo[key]
        total += _multinomial(n, alpha) * partial
    return total / factorial(n)


def _linear_pencil(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    return sum(np.kron(a, b.conj()) for a, b in zip(xs, ys))


def matrix_limit(xs, ys) -> complex:
    """Conjectured large-``d`` limit ``det(I - sum_j X_j (x) conj(Y_j))^{-1}``."""
    xs, ys = as_matrix_tuple(xs), as_matrix_tuple(ys)
    if xs.shape[0] != ys.shape[0]:
        raise ValueError("X and Y need the same number of matrices")
    if outer_spectral_radius(xs) >= 1 or outer_spectral_radius(ys) >= 1:
        raise DomainError("the limit needs outer spectral radius < 1 for both tuples")
    m = np.eye(xs.shape[1] * ys.shape[1]) - _linear_pencil(xs, ys)
    lu, piv = scipy.linalg.lu_factor(m, check_finite=True)
    swaps = int(np.count_nonzero(piv != np.arange(len(piv))))
    det = complex(np.prod(np.diag(lu))) * (-1) ** swaps
    if det == 0:
        raise NumericalError("singular pencil matrix")
    if abs(det) < 1e-12:
        warnings.warn(f"ill-conditioned pencil matrix, |det| = {abs(det):.3e}", RuntimeWarning)
    return 1 / det


def diagonal_limit(xs: Sequence[Sequence], ys: Sequence[Sequence]) -> complex:
    """Product over pairs ``(l, m)`` of ``1 / (1 - <x_l, y_m>)``."""
    for v in (*xs, *ys):
        if _norm_squared(v) >= 1:
            raise DomainError("every row needs norm < 1")
    result = 1 + 0j
    for a in xs:
        for b in ys:
            result /= 1 - inner(a, b)
    return result


def row_norm(mats) -> float:
    """``|| sum_j X_j X_j^* ||^{1/2}``."""
    xs = as_matrix_tuple(mats)
    gram = np.einsum("gij,gkj->ik", xs, xs.conj())
    return float(np.sqrt(max(np.linalg.eigvalsh(gram)[-1], 0.0)))


def outer_spectral_radius(mats, tol: float = 1e-10, max_iter: int = 10_000) -> float:
    """Square root of the spectral radius of ``T -> sum_j X_j T X_j^*``.

    The map is represented on vectorized ``T`` by ``sum_j X_j (x) conj(X_j)``
    and powered by repeated squaring with renormalization, so the estimate
    ``||A^(2^m)||^(1/2^m)`` converges even when the peripheral spectrum has
    several eigenvalues of maximal modulus or the map is nilpotent.
    """
    xs = as_matrix_tuple(mats)
    power = _linear_pencil(xs, xs)
    log_scale = 0.0
    previous = None
    # rounding, not the iteration count, limits accuracy after ~60 squarings
    for m in range(min(max_iter, 64)):
        norm = np.linalg.norm(power, 2)
        if norm == 0:
            return 0.0
        power = power / norm
        log_scale += math.log(norm) / 2**m
        estimate = math.exp(log_scale)
        if previous is not None and abs(estimate - previous) <= 1e-2 * tol * max(1.0, estimate):
            return math.sqrt(estimate)
        previous = estimate
        power = power @ power
    raise NumericalError(f"outer spectral radius did not converge in {min(max_iter, 64)} squarings")


def conic_constants(x0, x: Sequence, k: int) -> tuple[float, float]:
    """``(log|x0|^2, log(|x0|^2 / (|x0|^2 - ||x||^2)))`` for a conic pencil ``|x0|^2 > ||x||^2``."""
    if k < 1:
        raise ValueError("k must be positive")
    a = abs(complex(x0)) ** 2
    b = _norm_squared(x)
    if a <= b:
        raise DomainError("not conic: need |x0|^2 > ||x||^2")
    return math.log(a), math.log(a / (a - b))
