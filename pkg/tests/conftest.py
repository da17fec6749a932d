"""Shared helpers: cached exact counts, brute-force containment, pattern lists.

``cached_count`` memoizes across the whole session so the expensive counts
(for example every layered shape at n = 12) are computed once no matter how
many invariants consult them.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from partpat import SetPartition, all_partitions, count_avoiders, parse


@lru_cache(maxsize=None)
def cached_count(tau_text: str, n: int) -> int:
    return count_avoiders(parse(tau_text), n).count


@lru_cache(maxsize=None)
def patterns_of(k: int) -> tuple[SetPartition, ...]:
    return tuple(all_partitions(k))


@lru_cache(maxsize=None)
def partitions_up_to(n: int) -> tuple[SetPartition, ...]:
    return tuple(p for m in range(n + 1) for p in all_partitions(m))


def compositions(k: int):
    """All ordered tuples of positive integers summing to k."""
    for r in range(1, k + 1):
        for cuts in itertools.combinations(range(1, k), r - 1):
            bounds = (0,) + cuts + (k,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def rgs_key(p: SetPartition, elements=None) -> tuple[int, ...]:
    """Restricted-growth encoding of p (or of its restriction to ``elements``);
    equal keys mean equal standardizations."""
    label: dict[int, int] = {}
    out = []
    for e in elements if elements is not None else range(1, p.n + 1):
        b = p.block_of[e]
        if b not in label:
            label[b] = len(label)
        out.append(label[b])
    return tuple(out)


def brute_contains(host: SetPartition, pattern: SetPartition) -> bool:
    """Definition-level check: some k-subset of the host standardizes to the
    pattern. Independent of the backtracking matcher."""
    key = rgs_key(pattern)
    k = pattern.n
    if k > host.n:
        return False
    return any(
        rgs_key(host, subset) == key
        for subset in itertools.combinations(range(1, host.n + 1), k)
    )
