"""Counting overpartitions without generating functions.

Two independent routes:

* direct enumeration of partitions, each weighted by ``2^(number of distinct
  part sizes)`` since the first occurrence of each size may be overlined
  (exponential; used for ``n <= ENUMERATION_LIMIT``);
* a dynamic program over admissible part sizes (polynomial).

Neither route touches :mod:`qcong.series` arithmetic or the eta-product code,
so both can serve as ground truth for those modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator

from qcong.errors import InvalidOrder, NotCoprime
from qcong.series import TruncatedSeries

__all__ = [
    "BiregularConstraint",
    "ENUMERATION_LIMIT",
    "overpartitions",
    "count_overpartitions",
    "count_biregular",
    "count_biregular_enum",
    "oracle_series",
    "overpartition_series",
]

ENUMERATION_LIMIT = 30


@dataclass(frozen=True)
class BiregularConstraint:
    """No part may be divisible by ``ell`` or by ``mu``; ``gcd(ell, mu) = 1``."""

    ell: int
    mu: int

    def __post_init__(self):
        if self.ell < 2 or self.mu < 2:
            raise ValueError(f"ell and mu must be >= 2, got ({self.ell}, {self.mu})")
        if gcd(self.ell, self.mu) != 1:
            raise NotCoprime(f"gcd({self.ell}, {self.mu}) = {gcd(self.ell, self.mu)} != 1")

    def allows(self, part: int) -> bool:
        return part % self.ell != 0 and part % self.mu != 0

    @property
    def pair(self) -> tuple[int, int]:
        return (self.ell, self.mu)


def _as_constraint(c) -> BiregularConstraint:
    if isinstance(c, BiregularConstraint):
        return c
    ell, mu = c
    return BiregularConstraint(ell, mu)


def _partitions(n: int, largest: int, allowed: Callable[[int], bool]) -> Iterator[list[int]]:
    """Partitions of ``n`` into allowed parts ``<= largest``, non-increasing."""
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        if not allowed(part):
            continue
        for rest in _partitions(n - part, part, allowed):
            yield [part] + rest


def overpartitions(n: int, allowed: Callable[[int], bool] = lambda s: True
                   ) -> Iterator[tuple[tuple[int, bool], ...]]:
    """Every overpartition of ``n`` as ``((part, overlined), ...)``.

    Only the first occurrence of a size may carry the overline.
    """
    for lam in _partitions(n, n, allowed):
        sizes = sorted(set(lam), reverse=True)
        for mask in range(1 << len(sizes)):
            marked = {s for i, s in enumerate(sizes) if mask >> i & 1}
            out = []
            seen = set()
            for p in lam:
                out.append((p, p in marked and p not in seen))
                seen.add(p)
            yield tuple(out)


def _weighted_count(n: int, allowed: Callable[[int], bool]) -> int:
    return sum(2 ** len(set(lam)) for lam in _partitions(n, n, allowed))


def count_biregular_enum(n: int, c) -> int:
    """Brute force: enumerate partitions with admissible parts, weight ``2^distinct``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    c = _as_constraint(c)
    return _weighted_count(n, c.allows)


def _dp(N: int, allowed: Callable[[int], bool]) -> list[int]:
    counts = [0] * N
    counts[0] = 1
    for s in range(1, N):
        if not allowed(s):
            continue
        # size s overlined once or not ...
        for i in range(N - 1, s - 1, -1):
            counts[i] += counts[i - s]
        # ... then any multiplicity of the plain part
        for i in range(s, N):
            counts[i] += counts[i - s]
    return counts


def oracle_series(c, N: int) -> TruncatedSeries:
    """Series of ``count_biregular(n, c)`` for ``n < N``, by dynamic programming."""
    if N < 1:
        raise InvalidOrder(f"order must be >= 1, got {N}")
    c = _as_constraint(c)
    return TruncatedSeries(tuple(_dp(N, c.allows)))


def overpartition_series(N: int) -> TruncatedSeries:
    if N < 1:
        raise InvalidOrder(f"order must be >= 1, got {N}")
    return TruncatedSeries(tuple(_dp(N, lambda s: True)))


def count_overpartitions(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n <= ENUMERATION_LIMIT:
        return _weighted_count(n, lambda s: True)
    return _dp(n + 1, lambda s: True)[n]


def count_biregular(n: int, c) -> int:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    c = _as_constraint(c)
    if n <= ENUMERATION_LIMIT:
        return _weighted_count(n, c.allows)
    return _dp(n + 1, c.allows)[n]
