"""Closed-form and recursive exact counts, plus log-space bound evaluators.

Counting stays in exact integer arithmetic; only the bound evaluators use
floating point, and comparisons against them should allow a small slack
(1e-9 is used throughout the test suite) to absorb rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "BigCount",
    "LogBound",
    "bell",
    "block_recursion",
    "log_lower_bound_uniform",
    "log_upper_bound_block",
    "log_upper_bound_layered",
    "singleton_count",
    "stirling2",
]

BigCount = int


@dataclass(frozen=True)
class LogBound:
    """Natural logarithm of a bound expression; compare bounds in log space."""

    value: float


def bell(n: int) -> BigCount:
    """Bell number via the triangle recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def stirling2(n: int, j: int) -> BigCount:
    """Partitions of [n] into exactly j nonempty blocks,
    S(n, j) = j S(n-1, j) + S(n-1, j-1)."""
    if n < 0 or j < 0:
        raise ValueError("arguments must be nonnegative")
    if j > n:
        return 0
    row = [1]  # S(0, 0)
    for m in range(1, n + 1):
        nxt = [0] * (min(m, j) + 1)
        for i in range(1, len(nxt)):
            above = row[i] if i < len(row) else 0
            nxt[i] = i * above + row[i - 1]
        row = nxt
    return row[j] if j < len(row) else 0


def block_recursion(k: int, n_max: int) -> list[BigCount]:
    """f(0..n_max) where f(n) counts partitions of [n] with all blocks of
    size at most k - 1, via f(n+1) = sum_{i=0}^{k-2} C(n, i) f(n-i).

    The base f(0) = 1 is forced by f(1) = 1. For k = 3 this is
    1, 1, 2, 4, 10, 26, ... (partitions into singletons and pairs).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    f = [1]
    for n in range(n_max):
        f.append(sum(math.comb(n, i) * f[n - i] for i in range(min(k - 1, n + 1))))
    return f


def singleton_count(k: int, n: int) -> BigCount:
    """Partitions of [n] avoiding the all-singleton pattern of [k]: exactly
    those with at most k - 1 blocks, so sum_{j=1..k-1} S(n, j) for n >= 1."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    total = sum(stirling2(n, j) for j in range(1, k))
    assert total <= (k - 1) ** n
    return total


def log_upper_bound_block(k: int, n: int) -> LogBound:
    """ln of k^n * n^(n (1 - 1/(k-1))), the ceiling for the one-block pattern.

    The exponent degenerates at k = 2, where only the all-singleton
    partition avoids; that case returns n ln 2, still an upper bound.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    if k == 2:
        return LogBound(n * math.log(2.0))
    return LogBound(n * math.log(k) + n * (1.0 - 1.0 / (k - 1)) * math.log(n))


def log_upper_bound_layered(k: int, r: int, n: int) -> LogBound:
    """ln of ((k+1)/2)^(2n) * n^(n (1 - 1/(k-r))), the layered-pattern ceiling."""
    if r < 1 or k <= r:
        raise ValueError("need k > r >= 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    return LogBound(
        2 * n * math.log((k + 1) / 2.0) + n * (1.0 - 1.0 / (k - r)) * math.log(n)
    )


def log_lower_bound_uniform(t: int, n: int) -> LogBound:
    """ln of (n/t)!^(t-1), the number of uniform partitions with t sections."""
    if t < 2:
        raise ValueError("t must be >= 2")
    if n % t:
        raise ValueError(f"t={t} does not divide n={n}")
    return LogBound((t - 1) * math.log(math.factorial(n // t)))
