"""Schur polynomials two ways, plus the boxed Cauchy-Binet kernel.

The determinant (ratio-of-alternants) route needs pairwise distinct
arguments; the tableau route is exact everywhere but enumerative.  Both
are kept and cross-checked; `schur_evaluate` picks whichever is valid.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .partitions import (
    Partition,
    check_partition,
    lambda_to_mu,
    pad,
    shifted_boxed_partitions,
    weight,
)
from .qpoly import QPolynomial

SEPARATION_TOL = 1e-9
DEFAULT_ENUM_CAP = 10_000_000


class EnumerationCapError(RuntimeError):
    """Raised when a combinatorial enumeration would exceed the configured cap."""


class CoincidentArgumentsError(ValueError):
    """Raised when the alternant route is asked for nearly coincident points."""


def vandermonde(x: Sequence[complex]) -> complex:
    """Product of (x_l - x_m) over m < l."""
    x = list(x)
    out = 1.0 + 0.0j
    for l in range(len(x)):
        for m in range(l):
            out *= x[l] - x[m]
    return out


def _check_distinct(x: Sequence[complex]) -> None:
    for i in range(len(x)):
        for j in range(i):
            scale = max(1.0, abs(x[i]), abs(x[j]))
            if abs(x[i] - x[j]) / scale <= SEPARATION_TOL:
                raise CoincidentArgumentsError(
                    f"arguments {x[i]} and {x[j]} too close for the determinant route"
                )


def schur_determinant(lam: Partition, x: Sequence[complex]) -> complex:
    """det(x_j^{lam_k + N - k}) / Vandermonde(x); requires distinct x."""
    lam = check_partition(lam)
    n = len(x)
    if len(lam) > n:
        raise ValueError(f"shape {lam} needs at least {len(lam)} variables")
    _check_distinct(x)
    if n == 0:
        return 1.0 + 0.0j
    mu = lambda_to_mu(lam, n)
    xa = np.asarray(x, dtype=complex)
    mat = xa[:, None] ** np.asarray(mu, dtype=float)[None, :]
    # the staircase alternant det(x_j^{n-k}) carries an extra sign
    # (-1)^{n(n-1)/2} relative to the ordered product of differences
    sign = -1.0 if (n * (n - 1) // 2) % 2 else 1.0
    return complex(np.linalg.det(mat) / (sign * vandermonde(x)))


def ssyt(lam: Partition, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All semi-standard tableaux of shape lam with entries in 1..n.

    Rows weakly increase, columns strictly increase.
    """
    lam = check_partition(lam)
    lam = tuple(p for p in lam if p > 0)
    if len(lam) > n:
        return

    def rows(i: int, prev: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(lam):
            yield ()
            return
        width = lam[i]

        def fill(j: int, row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if j == width:
                yield row
                return
            lo = row[-1] if row else 1
            if j < len(prev):
                lo = max(lo, prev[j] + 1)
            for v in range(lo, n + 1):
                yield from fill(j + 1, row + (v,))

        for row in fill(0, ()):
            for rest in rows(i + 1, row):
                yield (row,) + rest

    yield from rows(0, ())


def tableau_step_counts(tab: tuple[tuple[int, ...], ...], n: int) -> tuple[int, ...]:
    """(l_1, ..., l_n): multiplicity of each letter in the tableau."""
    counts = [0] * n
    for row in tab:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)


def schur_monomials(lam: Partition, n: int, cap: int = DEFAULT_ENUM_CAP) -> Counter:
    """Exponent-vector multiset of the Schur polynomial in n variables."""
    bound = schur_count_at_one(lam, n)
    if bound > cap:
        raise EnumerationCapError(f"{bound} tableaux exceeds cap {cap}")
    out: Counter = Counter()
    for tab in ssyt(lam, n):
        out[tableau_step_counts(tab, n)] += 1
    return out


def schur_from_monomials(monomials: Counter, x: Sequence[complex]) -> complex:
    out = 0.0 + 0.0j
    for expo, mult in monomials.items():
        term = complex(mult)
        for xi, e in zip(x, expo):
            term *= xi ** e
        out += term
    return out


def schur_count_at_one(lam: Partition, n: int) -> int:
    """Number of SSYT of shape lam with entries in 1..n, by the product formula."""
    lam = check_partition(lam)
    if len(lam) > n:
        return 0
    mu = lambda_to_mu(lam, n)
    acc = Fraction(1)
    for j in range(n):
        for k in range(j + 1, n):
            acc *= Fraction(mu[j] - mu[k], k - j)
    assert acc.denominator == 1
    return acc.numerator


def schur_evaluate(lam: Partition, x: Sequence[complex],
                   cap: int = DEFAULT_ENUM_CAP) -> complex:
    """Schur value at x; falls back to tableau enumeration at degenerate points."""
    try:
        return schur_determinant(lam, x)
    except CoincidentArgumentsError:
        pass
    if all(abs(xi - 1.0) < 1e-15 for xi in x):
        return complex(schur_count_at_one(lam, len(x)))
    return schur_from_monomials(schur_monomials(lam, len(x), cap=cap), x)


def schur_q_polynomial(lam: Partition, exponents: Sequence[int],
                       cap: int = DEFAULT_ENUM_CAP) -> QPolynomial:
    """Exact Schur value at x_j = q^{exponents[j]} as a polynomial in q."""
    n = len(exponents)
    out: dict[int, int] = {}
    for expo, mult in schur_monomials(lam, n, cap=cap).items():
        e = sum(a * b for a, b in zip(expo, exponents))
        out[e] = out.get(e, 0) + mult
    return QPolynomial(out)


def cauchy_binet_closed(x: Sequence[complex], y: Sequence[complex],
                        length: int, n: int) -> complex:
    """Closed form of the boxed sum of Schur products:

    (prod x_l^n y_l^n) * det(T) / (V(x) V(y)),
    T_kj = (1 - (x_k y_j)^{length-n+N}) / (1 - x_k y_j),
    with the removable singularity at x_k y_j = 1 replaced by length-n+N.
    """
    if len(x) != len(y):
        raise ValueError("x and y must have equal length")
    if length - n < 0:
        raise ValueError("need length >= n")
    _check_distinct(x)
    _check_distinct(y)
    nvar = len(x)
    power = length - n + nvar
    t = np.empty((nvar, nvar), dtype=complex)
    for k in range(nvar):
        for j in range(nvar):
            p = x[k] * y[j]
            if abs(p - 1.0) < 1e-12:
                t[k, j] = power
            else:
                t[k, j] = (1.0 - p ** power) / (1.0 - p)
    pref = 1.0 + 0.0j
    for xl, yl in zip(x, y):
        pref *= (xl * yl) ** n
    return complex(pref * np.linalg.det(t) / (vandermonde(x) * vandermonde(y)))


def cauchy_binet_enum(x: Sequence[complex], y: Sequence[complex],
                      length: int, n: int, cap: int = DEFAULT_ENUM_CAP) -> complex:
    """The same boxed sum by direct enumeration of partitions."""
    if len(x) != len(y):
        raise ValueError("x and y must have equal length")
    if length - n < 0:
        raise ValueError("need length >= n")
    nvar = len(x)
    out = 0.0 + 0.0j
    for lam in shifted_boxed_partitions(nvar, length - n, n):
        out += schur_evaluate(lam, x, cap=cap) * schur_evaluate(lam, y, cap=cap)
    return out


def cauchy_binet(x: Sequence[complex], y: Sequence[complex],
                 length: int, n: int, cap: int = DEFAULT_ENUM_CAP) -> complex:
    """Boxed Schur-product sum; closed form when valid, enumeration otherwise."""
    try:
        return cauchy_binet_closed(x, y, length, n)
    except CoincidentArgumentsError:
        return cauchy_binet_enum(x, y, length, n, cap=cap)


def projection_average_q(n_vars: int, m_sites: int, n_string: int,
                         cap: int = DEFAULT_ENUM_CAP) -> QPolynomial:
    """Exact q-weighted boxed sum S_lam(q,..,q^N) S_lam(1,..,q^{N-1}).

    Equals q^{n*N^2} * macmahon_z(N, K - n) with K = M - N + 1.
    """
    k_cap = m_sites - n_vars + 1
    if not 0 <= n_string <= k_cap:
        raise ValueError(f"need 0 <= n <= {k_cap}")
    left = list(range(1, n_vars + 1))
    right = list(range(n_vars))
    out = QPolynomial.zero()
    for lam in shifted_boxed_partitions(n_vars, k_cap - n_string, n_string):
        out = out + schur_q_polynomial(lam, left, cap=cap) * \
            schur_q_polynomial(lam, right, cap=cap)
    return out
