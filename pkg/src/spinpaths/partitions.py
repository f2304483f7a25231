"""Integer partitions, strict partitions and the spin-coordinate dictionary.

Partitions are plain tuples of non-negative ints, weakly decreasing.
Strict partitions are strictly decreasing.  Trailing zeros matter: the
coordinate dictionary below is length-sensitive, so partitions are kept
padded to their explicit length.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator

Partition = tuple[int, ...]
StrictPartition = tuple[int, ...]


def is_partition(parts: tuple[int, ...]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_strict_partition(parts: tuple[int, ...]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] > parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts: tuple[int, ...]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"not weakly decreasing non-negative: {parts}")
    return parts


def check_strict_partition(parts: tuple[int, ...]) -> StrictPartition:
    parts = tuple(int(p) for p in parts)
    if not is_strict_partition(parts):
        raise ValueError(f"not strictly decreasing non-negative: {parts}")
    return parts


def staircase(n: int) -> StrictPartition:
    """The strict partition (n-1, n-2, ..., 1, 0)."""
    if n < 1:
        raise ValueError("staircase needs n >= 1")
    return tuple(range(n - 1, -1, -1))


def mu_to_lambda(mu: StrictPartition) -> Partition:
    """Spin-down coordinates mu -> shape lambda, via lambda_j = mu_j - N + j."""
    mu = check_strict_partition(mu)
    n = len(mu)
    lam = tuple(mu[j] - n + j + 1 for j in range(n))
    return check_partition(lam)


def lambda_to_mu(lam: Partition, n: int) -> StrictPartition:
    """Shape lambda -> spin-down coordinates mu = lambda + staircase, padded to n."""
    lam = check_partition(lam)
    if len(lam) > n:
        raise ValueError(f"lambda has {len(lam)} parts, more than n={n}")
    lam = pad(lam, n)
    return tuple(lam[j] + n - j - 1 for j in range(n))


def pad(lam: Partition, n: int) -> Partition:
    """Pad with trailing zeros to length n."""
    if len(lam) > n:
        raise ValueError(f"cannot pad {lam} down to length {n}")
    return tuple(lam) + (0,) * (n - len(lam))


def weight(lam: Partition) -> int:
    return sum(lam)


def boxed_partitions(n: int, w: int) -> Iterator[Partition]:
    """All partitions with at most n parts, each <= w, padded to length n.

    Yields in descending lexicographic order; count is C(n+w, n).
    """
    if n < 1 or w < 0:
        raise ValueError("need n >= 1, w >= 0")

    def rec(prefix: tuple[int, ...], bound: int, k: int) -> Iterator[Partition]:
        if k == 0:
            yield prefix
            return
        for p in range(bound, -1, -1):
            yield from rec(prefix + (p,), p, k - 1)

    yield from rec((), w, n)


def boxed_partition_count(n: int, w: int) -> int:
    return comb(n + w, n)


def shifted_boxed_partitions(n: int, w: int, shift: int) -> Iterator[Partition]:
    """Partitions lambda with shift <= lambda_n and lambda_1 <= shift + w."""
    for lam in boxed_partitions(n, w):
        yield tuple(p + shift for p in lam)


def descending_subsets(top: int, n: int) -> Iterator[StrictPartition]:
    """All n-element subsets of {0..top} as descending tuples, lexicographic."""
    for comb_ in combinations(range(top, -1, -1), n):
        yield comb_
