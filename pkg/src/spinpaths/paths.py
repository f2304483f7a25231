"""Nests of self-avoiding lattice paths and the vicious-walker enumerator.

Each SSYT row maps to one path; the step count l_j on vertical line j is
the multiplicity of letter j in the tableau, and the nest volume is
sum_j (N - j) * l_j.  The random-turns walker count is an exact
big-integer dynamic program over ring configurations and serves as the
independent oracle for every path-counting formula in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .partitions import (
    Partition,
    StrictPartition,
    check_partition,
    check_strict_partition,
    shifted_boxed_partitions,
    weight,
)
from .qpoly import QPolynomial
from .schur import (
    DEFAULT_ENUM_CAP,
    EnumerationCapError,
    schur_count_at_one,
    ssyt,
    tableau_step_counts,
)


@dataclass(frozen=True)
class PathNest:
    """One nest of mutually avoiding paths, encoded by its column step counts."""

    kind: str                      # "C", "B" or "watermelon"
    shape: Partition
    step_counts: tuple[int, ...]   # l_1 .. l_N
    volume: int = field(init=False)

    def __post_init__(self):
        n = len(self.step_counts)
        object.__setattr__(
            self, "volume",
            sum((n - j - 1) * self.step_counts[j] for j in range(n)),
        )
        if self.kind == "C" and sum(self.step_counts) != weight(self.shape):
            raise ValueError("step counts do not add up to the shape weight")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "shape": list(self.shape),
            "step_counts": list(self.step_counts),
            "volume": str(self.volume),
        }

    def render(self) -> str:
        """Small ASCII picture: one line per column, '#' per north step."""
        return "\n".join(
            f"x{j + 1}: " + "#" * l for j, l in enumerate(self.step_counts)
        )


def enumerate_nests(lam: Partition, n: int,
                    cap: int = DEFAULT_ENUM_CAP) -> Iterator[PathNest]:
    """One nest per SSYT of shape lam with entries <= n."""
    lam = check_partition(lam)
    if schur_count_at_one(lam, n) > cap:
        raise EnumerationCapError("nest enumeration exceeds cap")
    for tab in ssyt(lam, n):
        yield PathNest("C", lam, tableau_step_counts(tab, n))


def nest_partition_function(lam: Partition, n: int,
                            cap: int = DEFAULT_ENUM_CAP) -> QPolynomial:
    """Sum of q^{|lam| + volume} over nests; equals the Schur value at (q,..,q^n)."""
    w = weight(check_partition(lam))
    out: dict[int, int] = {}
    for nest in enumerate_nests(lam, n, cap=cap):
        e = w + nest.volume
        out[e] = out.get(e, 0) + 1
    return QPolynomial(out)


def conjugate_nest_partition_function(lam: Partition, n: int, m: int,
                                      cap: int = DEFAULT_ENUM_CAP) -> QPolynomial:
    """Partition function of the conjugate nests; equals Schur at (1, q, .., q^{n-1}).

    Weighted by q^{sum_j (j-1) l_j} over the same step-count data.
    """
    lam = check_partition(lam)
    if lam and lam[0] > m - n + 1:
        raise ValueError(f"shape {lam} does not fit the width bound {m - n + 1}")
    out: dict[int, int] = {}
    for nest in enumerate_nests(lam, n, cap=cap):
        e = sum(j * l for j, l in enumerate(nest.step_counts))
        out[e] = out.get(e, 0) + 1
    return QPolynomial(out)


def count_random_turns_paths(start: StrictPartition, end: StrictPartition,
                             steps: int, m: int) -> int:
    """Exact number of `steps`-edge trajectories of vicious random-turns walkers.

    Walkers live on a ring of m+1 sites; per tick exactly one walker moves
    one site left or right (two distinct moves even when the targets
    coincide on the 2-site ring), and configurations with two walkers on a
    site are discarded.
    """
    end = check_strict_partition(end)
    if len(start) != len(end):
        raise ValueError("walker counts differ between start and end")
    if end and end[0] > m:
        raise ValueError(f"positions exceed the largest site index {m}")
    return random_turns_counts_from(start, steps, m).get(end, 0)


def random_turns_counts_from(start: StrictPartition, steps: int,
                             m: int) -> dict[tuple[int, ...], int]:
    """Counts to every reachable configuration after `steps` ticks."""
    start = check_strict_partition(start)
    if start and start[0] > m:
        raise ValueError(f"positions exceed the largest site index {m}")
    if steps < 0:
        raise ValueError("steps must be non-negative")
    ring = m + 1
    nwalk = len(start)
    layer: dict[tuple[int, ...], int] = {start: 1}
    for _ in range(steps):
        nxt: dict[tuple[int, ...], int] = {}
        for config, count in layer.items():
            occupied = set(config)
            assert len(occupied) == nwalk
            for i, pos in enumerate(config):
                for move in (1, -1):
                    target = (pos + move) % ring
                    if target in occupied:
                        continue
                    new = tuple(sorted(config[:i] + (target,) + config[i + 1:],
                                       reverse=True))
                    nxt[new] = nxt.get(new, 0) + count
        layer = nxt
    return layer


def watermelon_count(n: int, m: int, n_string: int) -> int:
    """Squared-Schur count over the n_string-shifted box; watermelons at n_string=0."""
    k_cap = m - n + 1
    if not 0 <= n_string <= k_cap:
        raise ValueError(f"need 0 <= n <= {k_cap}")
    total = 0
    for lam in shifted_boxed_partitions(n, k_cap - n_string, n_string):
        total += schur_count_at_one(lam, n) ** 2
    return total
