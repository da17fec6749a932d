"""Exact enumeration of pattern-avoiding set partitions.

The counter walks the restricted-growth-string tree: element i either
joins an existing block or opens a new one, so every partition of [n] is
generated exactly once and the prefix of depth m is the restriction to
[m]. A prefix whose restriction already contains the pattern is pruned.
Because an occurrence created by appending element m must use m as its
largest image, each node runs one anchored matcher call instead of a full
containment search.

Counts are exact Python integers throughout; no tally ever rounds.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from pathlib import Path
from typing import Callable, Iterator, Sequence

from .core import SetPartition, format_partition, parse, permeability, sba

__all__ = [
    "CeilingError",
    "CountCache",
    "CountRecord",
    "DEFAULT_ORACLE_CEILING",
    "GrowthReport",
    "GrowthRow",
    "all_partitions",
    "count_avoiders",
    "count_avoiders_oracle",
    "enumerate_avoiders",
    "f_ratio",
    "growth_report",
    "uniform_avoids",
    "uniform_count",
    "uniform_partitions",
]

DEFAULT_ORACLE_CEILING = 10

# Workers own disjoint RGS prefixes of this depth; aggregation is addition,
# so the parallel count is order-independent.
_SPLIT_DEPTH = 6


class CeilingError(RuntimeError):
    """A configured resource ceiling would be exceeded."""


@dataclass(frozen=True)
class CountRecord:
    """Exact avoider count: tau is the canonical pattern string."""

    tau: str
    n: int
    count: int


def _anchored_checker(pattern: SetPartition) -> Callable[[list[list[int]], int], bool]:
    """Compile ``pattern`` into check(blocks, anchor_idx).

    The call answers: does the prefix partition held in ``blocks`` contain
    the pattern via an occurrence whose largest image is the element just
    appended to blocks[anchor_idx]? Pattern elements are matched downward
    from k, so the anchor pins the image of k and the recursion fills the
    rest below it.
    """
    k = pattern.n
    pat_block = tuple(pattern.block_of[j] for j in range(1, k + 1))
    n_pat_blocks = len(pattern.blocks)
    pat_sizes = [0] * n_pat_blocks
    need_below = []
    for b in pat_block:
        need_below.append(pat_sizes[b])
        pat_sizes[b] += 1
    top_block = pat_block[k - 1]
    top_need = need_below[k - 1]

    def check(blocks: list[list[int]], anchor_idx: int) -> bool:
        anchor_blk = blocks[anchor_idx]
        if len(anchor_blk) <= top_need:
            return False
        if k == 1:
            return True
        binding = [-1] * n_pat_blocks
        used = [False] * len(blocks)
        binding[top_block] = anchor_idx
        used[anchor_idx] = True

        def descend(j: int, bound: int) -> bool:
            # image of pattern element j must be < bound and >= j
            if j == 0:
                return True
            b = pat_block[j - 1]
            nb = need_below[j - 1]
            hb = binding[b]
            if hb >= 0:
                blk = blocks[hb]
                idx = bisect_left(blk, bound) - 1
                while idx >= nb:
                    e = blk[idx]
                    if e < j:
                        break
                    if descend(j - 1, e):
                        return True
                    idx -= 1
                return False
            size_needed = pat_sizes[b]
            for hbi in range(len(blocks)):
                if used[hbi]:
                    continue
                blk = blocks[hbi]
                if len(blk) < size_needed:
                    continue
                idx = bisect_left(blk, bound) - 1
                if idx < nb:
                    continue
                binding[b] = hbi
                used[hbi] = True
                while idx >= nb:
                    e = blk[idx]
                    if e < j:
                        break
                    if descend(j - 1, e):
                        return True
                    idx -= 1
                binding[b] = -1
                used[hbi] = False
            return False

        return descend(k - 1, anchor_blk[-1])

    return check


def _count_pruned(
    check: Callable[[list[list[int]], int], bool],
    n: int,
    blocks: list[list[int]],
    start: int,
) -> int:
    """Completions of the current avoiding prefix into avoiders of [n]."""
    if start > n:
        return 1
    total = 0
    for bi in range(len(blocks)):
        blocks[bi].append(start)
        if not check(blocks, bi):
            total += _count_pruned(check, n, blocks, start + 1)
        blocks[bi].pop()
    blocks.append([start])
    if not check(blocks, len(blocks) - 1):
        total += _count_pruned(check, n, blocks, start + 1)
    blocks.pop()
    return total


def _validate_args(tau: SetPartition, n: int) -> None:
    if tau.n < 1:
        raise ValueError("pattern must be nonempty")
    if n < 0:
        raise ValueError("n must be nonnegative")


def count_avoiders(tau: SetPartition, n: int, *, workers: int = 1) -> CountRecord:
    """Exact number of partitions of [n] avoiding tau.

    With ``workers > 1`` the search tree is split at prefix depth
    min(n, 6) and the disjoint subtrees are counted by a process pool; the
    result is identical to the sequential count.
    """
    _validate_args(tau, n)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    check = _anchored_checker(tau)
    if workers == 1 or n <= _SPLIT_DEPTH:
        total = _count_pruned(check, n, [], 1)
    else:
        tau_text = format_partition(tau)
        tasks = [(tau_text, n, rgs) for rgs in _avoiding_prefixes(check, _SPLIT_DEPTH)]
        chunk = max(1, len(tasks) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(_count_task, tasks, chunksize=chunk))
    return CountRecord(format_partition(tau), n, total)


def _avoiding_prefixes(
    check: Callable[[list[list[int]], int], bool], depth: int
) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    blocks: list[list[int]] = []
    rgs: list[int] = []

    def rec(i: int) -> None:
        if i > depth:
            out.append(tuple(rgs))
            return
        for bi in range(len(blocks)):
            blocks[bi].append(i)
            rgs.append(bi)
            if not check(blocks, bi):
                rec(i + 1)
            rgs.pop()
            blocks[bi].pop()
        blocks.append([i])
        rgs.append(len(blocks) - 1)
        if not check(blocks, len(blocks) - 1):
            rec(i + 1)
        rgs.pop()
        blocks.pop()

    rec(1)
    return out


def _count_task(args: tuple[str, int, tuple[int, ...]]) -> int:
    tau_text, n, rgs = args
    check = _anchored_checker(parse(tau_text))
    blocks: list[list[int]] = []
    for i, bi in enumerate(rgs, start=1):
        if bi == len(blocks):
            blocks.append([])
        blocks[bi].append(i)
    return _count_pruned(check, n, blocks, len(rgs) + 1)


def enumerate_avoiders(tau: SetPartition, n: int) -> Iterator[SetPartition]:
    """Yield every avoider of tau among partitions of [n], each exactly once,
    in lexicographic restricted-growth-string order."""
    _validate_args(tau, n)
    check = _anchored_checker(tau)
    blocks: list[list[int]] = []

    def rec(i: int) -> Iterator[SetPartition]:
        if i > n:
            yield SetPartition(n, tuple(tuple(b) for b in blocks))
            return
        for bi in range(len(blocks)):
            blocks[bi].append(i)
            if not check(blocks, bi):
                yield from rec(i + 1)
            blocks[bi].pop()
        blocks.append([i])
        if not check(blocks, len(blocks) - 1):
            yield from rec(i + 1)
        blocks.pop()

    yield from rec(1)


def all_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of [n] in lexicographic restricted-growth-string order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    blocks: list[list[int]] = []

    def rec(i: int) -> Iterator[SetPartition]:
        if i > n:
            yield SetPartition(n, tuple(tuple(b) for b in blocks))
            return
        for bi in range(len(blocks)):
            blocks[bi].append(i)
            yield from rec(i + 1)
            blocks[bi].pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(1)


def count_avoiders_oracle(
    tau: SetPartition, n: int, *, ceiling: int = DEFAULT_ORACLE_CEILING
) -> CountRecord:
    """Independent counter: enumerate all Bell(n) partitions, test each with
    the witness matcher, no pruning. Used to cross-validate ``count_avoiders``."""
    from .containment import contains

    _validate_args(tau, n)
    if n > ceiling:
        raise CeilingError(f"oracle limited to n <= {ceiling} (requested n={n})")
    total = sum(1 for p in all_partitions(n) if not contains(p, tau))
    return CountRecord(format_partition(tau), n, total)


def f_ratio(record: CountRecord) -> float:
    """ln(count) / (n ln n), the normalized log-growth exponent; needs n >= 2.

    ``math.log`` evaluates exact integers of any magnitude directly, so the
    relative error stays at float precision even when the count overflows
    a double.
    """
    if record.n < 2:
        raise ValueError("f_ratio requires n >= 2")
    if record.count <= 0:
        raise RuntimeError(
            f"internal error: avoider count {record.count} for tau={record.tau}, "
            f"n={record.n} should be positive"
        )
    return math.log(record.count) / (record.n * math.log(record.n))


def uniform_partitions(n: int, t: int) -> Iterator[SetPartition]:
    """All partitions of [n] into n/t blocks of size t in which each of the t
    consecutive sections of length n/t holds exactly one element per block.

    Section 0 fixes the block labels (block i owns element i), and each
    later section contributes one free matching, so there are exactly
    (n/t)!^(t-1) uniform partitions; see ``uniform_count``.
    """
    if t < 1:
        raise ValueError("section count must be >= 1")
    if n % t:
        raise ValueError(f"section count {t} does not divide n={n}")
    b = n // t
    for matchings in product(permutations(range(1, b + 1)), repeat=t - 1):
        blocks = [
            [i] + [j * b + m[i - 1] for j, m in enumerate(matchings, start=1)]
            for i in range(1, b + 1)
        ]
        yield SetPartition(n, tuple(tuple(blk) for blk in blocks))


def uniform_count(n: int, t: int) -> int:
    """Exact number of uniform partitions of [n] with t sections: (n/t)!^(t-1)."""
    if t < 1:
        raise ValueError("section count must be >= 1")
    if n % t:
        raise ValueError(f"section count {t} does not divide n={n}")
    return math.factorial(n // t) ** (t - 1)


def uniform_avoids(tau: SetPartition, t: int) -> bool:
    """True iff sba(tau) >= t, in which case every uniform partition with t
    sections avoids tau.

    Within one section all elements lie in distinct blocks, so consecutive
    images of an occurrence can share a block only across a section
    boundary; t sections offer at most t - 1 boundaries. The condition is
    sufficient, not claimed necessary.
    """
    if t < 1:
        raise ValueError("section count must be >= 1")
    return sba(tau) >= t


@dataclass(frozen=True)
class GrowthRow:
    n: int
    count: int
    f_ratio: float | None
    pm_target: float | None


@dataclass(frozen=True)
class GrowthReport:
    """Per-n growth diagnostics for one pattern. ``pm_target`` is 1 - 1/pm,
    absent when pm = 0; ``f_ratio`` is absent for n < 2."""

    tau: str
    pm: int
    rows: tuple[GrowthRow, ...]


def growth_report(tau: SetPartition, records: Sequence[CountRecord]) -> GrowthReport:
    pm, _ = permeability(tau)
    target = 1.0 - 1.0 / pm if pm >= 1 else None
    rows = tuple(
        GrowthRow(r.n, r.count, f_ratio(r) if r.n >= 2 else None, target)
        for r in sorted(records, key=lambda r: r.n)
    )
    return GrowthReport(format_partition(tau), pm, rows)


class CountCache:
    """Append-only JSON-lines store of count records, keyed by (tau, n).

    Each line is {"tau": str, "n": int, "count": str}; counts are written
    as decimal strings to keep unbounded magnitude intact.
    """

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self._table: dict[tuple[str, int], int] = {}
        if self.path.exists():
            with self.path.open(encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    obj = json.loads(line)
                    self._table[(obj["tau"], int(obj["n"]))] = int(obj["count"])

    def __len__(self) -> int:
        return len(self._table)

    def get(self, tau: str, n: int) -> int | None:
        return self._table.get((tau, n))

    def add(self, record: CountRecord) -> None:
        key = (record.tau, record.n)
        if key in self._table:
            return
        self._table[key] = record.count
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(
                json.dumps({"tau": record.tau, "n": record.n, "count": str(record.count)})
                + "\n"
            )
