"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial

import numpy as np
import sympy


def sympy_partitions(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    for p in sympy.utilities.iterables.partitions(n):
        out.append(tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True)))
    return out


def _cells(lam):
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


def ssyt_fillings(lam, d):
    """Yield every semistandard tableau of shape ``lam`` with entries in ``1..d`` as a dict."""
    cells = _cells(lam)
    for values in product(range(1, d + 1), repeat=len(cells)):
        t = dict(zip(cells, values))
        if all(
            (j == 0 or t[(i, j - 1)] <= v) and (i == 0 or t[(i - 1, j)] < v)
            for (i, j), v in t.items()
        ):
            yield t


def count_ssyt(lam, d) -> int:
    return sum(1 for _ in ssyt_fillings(lam, d))


def schur_polynomial(lam, nvars) -> dict:
    """Monomial expansion ``{exponent tuple: coefficient}`` of a Schur polynomial."""
    poly = defaultdict(int)
    for t in ssyt_fillings(lam, nvars):
        exps = [0] * nvars
        for v in t.values():
            exps[v - 1] += 1
        poly[tuple(exps)] += 1
    return dict(poly)


def schur_expand_product(mu, nu) -> dict:
    """Schur-basis coefficients of ``s_mu s_nu`` by peeling off leading monomials."""
    nvars = sum(mu) + sum(nu)
    a, b = schur_polynomial(mu, nvars), schur_polynomial(nu, nvars)
    poly = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            poly[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    coeffs = {}
    while any(poly.values()):
        lead = max(e for e, c in poly.items() if c)
        c = poly[lead]
        lam = tuple(v for v in lead if v)
        coeffs[lam] = c
        for e, v in schur_polynomial(lam, nvars).items():
            poly[e] -= c * v
    return coeffs


def pieri_coefficient(lam, mu, m) -> int:
    """1 iff ``lam / mu`` is a horizontal strip of ``m`` cells."""
    if sum(lam) - sum(mu) != m or len(mu) > len(lam):
        return 0
    mu = list(mu) + [0] * (len(lam) - len(mu))
    if any(a < b for a, b in zip(lam, mu)):
        return 0
    # horizontal strip: mu interlaces lam
    return int(all(mu[i] >= lam[i + 1] for i in range(len(lam) - 1)))


def brute_centralizer(rho) -> int:
    n = sum(rho)
    sigma, start = list(range(n)), 0
    for r in rho:
        for i in range(r):
            sigma[start + i] = start + (i + 1) % r
        start += r
    return sum(
        1 for g in permutations(range(n)) if all(g[sigma[i]] == sigma[g[i]] for i in range(n))
    )


def dense_trace_monomial(sigma, alpha, mats) -> complex:
    """Trace of the tensor permutation operator of ``sigma^{-1}`` times the assigned tensor product.

    The operator sends ``v_1 (x) ... (x) v_n`` to the tensor whose slot
    ``pi(m)`` holds ``v_m``, with ``pi = sigma^{-1}``.
    """
    n = len(sigma)
    k = mats[0].shape[0]
    assigned = [mats[j] for j, a in enumerate(alpha) for _ in range(a)]
    big = np.array([[1.0 + 0j]])
    for a in assigned:
        big = np.kron(big, a)
    pi = [0] * n
    for i, s in enumerate(sigma):
        pi[s] = i
    dim = k**n
    perm_op = np.zeros((dim, dim))
    for idx in product(range(k), repeat=n):
        target = [0] * n
        for m in range(n):
            target[pi[m]] = idx[m]
        src = int(np.ravel_multi_index(idx, (k,) * n)) if n else 0
        dst = int(np.ravel_multi_index(target, (k,) * n)) if n else 0
        perm_op[dst, src] = 1
    return complex(np.trace(perm_op @ big))


def torus_moment(k: int, x) -> Fraction:
    """Average of ``|1 + sum_j x_j u_j|^{2k}`` over the torus ``|u_j| = 1``."""
    g = len(x)
    total = Fraction(0)
    for beta in product(range(k + 1), repeat=g):
        s = sum(beta)
        if s > k:
            continue
        w = Fraction(factorial(k), factorial(k - s))
        mono = Fraction(1)
        for b, v in zip(beta, x):
            w /= factorial(b)
            mono *= Fraction(v) ** (2 * b)
        total += w * w * mono
    return total


def toeplitz_moment(d: int, k: int, x: Fraction) -> Fraction:
    """Average of ``|det(I + x U)|^{2k}`` over ``U(d)`` for real ``x``, as a Toeplitz determinant."""
    x = sympy.Rational(x.numerator, x.denominator)

    def symbol_coefficient(m: int):
        # Fourier coefficient of (1 + x e^{it})^k (1 + x e^{-it})^k
        return sum(comb(k, j) * comb(k, j - m) * x ** (2 * j - m) for j in range(max(m, 0), k + 1) if 0 <= j - m <= k)

    mat = sympy.Matrix(d, d, lambda i, j: symbol_coefficient(i - j))
    value = mat.det()
    return Fraction(int(sympy.numer(value)), int(sympy.denom(value)))


def power_sum_series(xs, ys, n_max: int) -> list[complex]:
    """Taylor coefficients of ``det(I - z sum_j X_j (x) conj(Y_j))^{-1}`` via Newton's identities."""
    a = sum(np.kron(x, y.conj()) for x, y in zip(xs, ys))
    p = [None] + [np.trace(np.linalg.matrix_power(a, m)) for m in range(1, n_max + 1)]
    h = [1 + 0j]
    for n in range(1, n_max + 1):
        h.append(sum(p[m] * h[n - m] for m in range(1, n + 1)) / n)
    return h
