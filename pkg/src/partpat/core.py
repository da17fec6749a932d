"""Set partitions of [n] in canonical form, plus structural measures.

A set partition splits {1, ..., n} into disjoint nonempty blocks whose
union is the whole ground set. Values are immutable; equality and hashing
are structural on the canonical form (blocks ordered by their minimum,
elements ascending inside each block).

Text notation joins blocks with "/". For n <= 9 the elements of a block
are written as bare digits ("134/25"); for n >= 10 they are
comma-separated ("1,10,12/2,3"). ``parse`` accepts both forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

__all__ = [
    "IntervalCut",
    "LayeredShape",
    "ParseError",
    "SetPartition",
    "format_partition",
    "is_layered",
    "is_permutation_partition",
    "parse",
    "permeability",
    "permeability_oracle",
    "sba",
    "standardize",
]


class ParseError(ValueError):
    """Text is not valid slash notation; ``position`` is a 0-based character index."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1, ..., n} into disjoint nonempty blocks.

    The constructor canonicalizes and validates: blocks are re-sorted, and
    the element multiset must be exactly 1..n. The empty partition (n = 0,
    no blocks) is a valid value.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("ground size must be nonnegative")
        seen: set[int] = set()
        canon: list[tuple[int, ...]] = []
        for block in self.blocks:
            ordered = tuple(sorted(block))
            if not ordered:
                raise ValueError("empty block")
            for e in ordered:
                if not isinstance(e, int) or e < 1:
                    raise ValueError(f"element {e!r} is not a positive integer")
                if e in seen:
                    raise ValueError(f"duplicate element {e}")
                seen.add(e)
            canon.append(ordered)
        if seen and max(seen) > self.n:
            raise ValueError(f"element {max(seen)} exceeds ground size {self.n}")
        if len(seen) != self.n:
            missing = next(e for e in range(1, self.n + 1) if e not in seen)
            raise ValueError(f"missing element {missing}")
        canon.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(canon))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        """Build from any iterable of blocks, inferring n from the largest element."""
        mat = tuple(tuple(b) for b in blocks)
        n = max((e for b in mat for e in b), default=0)
        return cls(n, mat)

    @cached_property
    def block_of(self) -> dict[int, int]:
        """Element -> index of its block in canonical order."""
        return {e: i for i, b in enumerate(self.blocks) for e in b}

    def __str__(self) -> str:
        return format_partition(self)


def parse(text: str) -> SetPartition:
    """Parse slash notation into a canonical partition.

    A text containing a comma or the digit 0 is read in comma form, where
    each block is a comma-separated list of decimal elements; otherwise
    every character of a block is a single-digit element. Any partition
    with n >= 10 contains the element 10, whose rendering includes a "0",
    so the dispatch never misreads a formatted partition. The empty string
    denotes the empty partition.

    >>> parse("134/25").blocks
    ((1, 3, 4), (2, 5))
    >>> str(parse("21/3"))
    '12/3'
    >>> parse("1").n
    1
    """
    if text == "":
        return SetPartition(0, ())
    comma_form = "," in text or "0" in text
    positions: dict[int, int] = {}
    blocks: list[list[int]] = []
    cursor = 0
    for token in text.split("/"):
        if not token:
            raise ParseError("empty block", cursor)
        elems: list[int] = []
        if comma_form:
            offset = 0
            for piece in token.split(","):
                if not piece or not (piece.isascii() and piece.isdigit()):
                    raise ParseError(f"malformed element {piece!r}", cursor + offset)
                value = int(piece)
                if value == 0:
                    raise ParseError("element 0 is not allowed", cursor + offset)
                _note_element(value, cursor + offset, positions)
                elems.append(value)
                offset += len(piece) + 1
        else:
            for offset, ch in enumerate(token):
                if ch not in "123456789":
                    raise ParseError(f"malformed character {ch!r}", cursor + offset)
                _note_element(int(ch), cursor + offset, positions)
                elems.append(int(ch))
        blocks.append(elems)
        cursor += len(token) + 1
    n = max(positions)
    for e in range(1, n + 1):
        if e not in positions:
            raise ParseError(f"missing element {e}", len(text))
    return SetPartition(n, tuple(tuple(b) for b in blocks))


def _note_element(value: int, position: int, positions: dict[int, int]) -> None:
    if value in positions:
        raise ParseError(f"duplicate element {value}", position)
    positions[value] = position


def format_partition(p: SetPartition) -> str:
    """Canonical slash notation; comma form exactly when n >= 10.

    >>> format_partition(SetPartition.from_blocks([(2, 5), (1, 3, 4)]))
    '134/25'
    """
    if p.n >= 10:
        return "/".join(",".join(map(str, b)) for b in p.blocks)
    return "/".join("".join(map(str, b)) for b in p.blocks)


def standardize(elements: Iterable[int], host: SetPartition) -> SetPartition:
    """Restriction of host to ``elements``, relabeled onto [k] by the increasing bijection.

    Two elements share a block in the result exactly when they share a
    block in the host.

    >>> str(standardize({1, 3, 5}, parse("124/35")))
    '1/23'
    """
    chosen = sorted(set(elements))
    if not chosen:
        raise ValueError("cannot standardize an empty element set")
    if chosen[0] < 1 or chosen[-1] > host.n:
        raise ValueError(f"elements must lie in 1..{host.n}")
    grouped: dict[int, list[int]] = {}
    for rank, e in enumerate(chosen, start=1):
        grouped.setdefault(host.block_of[e], []).append(rank)
    return SetPartition(len(chosen), tuple(tuple(g) for g in grouped.values()))


@dataclass(frozen=True)
class LayeredShape:
    """Block sizes (a_1, ..., a_r) of a layered partition: the smallest a_1
    elements form one block, the next a_2 the second, and so on."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(a) for a in self.parts)
        if any(a < 1 for a in parts):
            raise ValueError("layer sizes must be positive")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def to_partition(self) -> SetPartition:
        blocks = []
        start = 1
        for a in self.parts:
            blocks.append(tuple(range(start, start + a)))
            start += a
        return SetPartition(start - 1, tuple(blocks))


def is_layered(p: SetPartition) -> LayeredShape | None:
    """The layer sizes if every block is an interval of consecutive integers, else None.

    >>> is_layered(parse("12/345/67")).parts
    (2, 3, 2)
    >>> is_layered(parse("13/245/67")) is None
    True
    """
    parts = []
    for b in p.blocks:
        if b[-1] - b[0] + 1 != len(b):
            return None
        parts.append(len(b))
    return LayeredShape(tuple(parts))


def is_permutation_partition(p: SetPartition) -> tuple[int, ...] | None:
    """The permutation s with blocks {r, k + s(r)} if p has that form, else None.

    Requires n = 2k with every block pairing an element <= k with one > k.
    The empty partition yields the empty permutation.

    >>> is_permutation_partition(parse("14/23"))
    (2, 1)
    >>> is_permutation_partition(parse("123")) is None
    True
    """
    if p.n % 2:
        return None
    k = p.n // 2
    sigma = []
    for r, block in enumerate(p.blocks, start=1):
        if len(block) != 2:
            return None
        lo, hi = block
        if lo != r or hi <= k:
            return None
        sigma.append(hi - k)
    return tuple(sigma)


def sba(p: SetPartition) -> int:
    """Number of positions i in 1..n-1 with i and i+1 in the same block."""
    bo = p.block_of
    return sum(1 for i in range(1, p.n) if bo[i] == bo[i + 1])


@dataclass(frozen=True)
class IntervalCut:
    """Cut positions in 1..n-1; cutting after each yields len(cuts)+1 intervals."""

    cuts: tuple[int, ...]

    def __post_init__(self) -> None:
        cuts = tuple(int(c) for c in self.cuts)
        if any(c < 1 for c in cuts) or any(a >= b for a, b in zip(cuts, cuts[1:])):
            raise ValueError("cuts must be strictly increasing positive positions")
        object.__setattr__(self, "cuts", cuts)

    def intervals(self, n: int) -> list[tuple[int, int]]:
        """The induced intervals of [n] as inclusive (lo, hi) pairs."""
        if n == 0:
            if self.cuts:
                raise ValueError("cuts on an empty ground set")
            return []
        if self.cuts and self.cuts[-1] >= n:
            raise ValueError(f"cut {self.cuts[-1]} out of range for n={n}")
        bounds = (0,) + self.cuts + (n,)
        return [(lo + 1, hi) for lo, hi in zip(bounds, bounds[1:])]


def permeability(p: SetPartition) -> tuple[int, IntervalCut]:
    """Minimum number of cuts so each interval has at most one element per block.

    Greedy: extend each interval as far right as possible before cutting,
    which is optimal by the usual exchange argument; ``permeability_oracle``
    provides an exhaustive cross-check. Returns the count and the witness
    cut set (the leftmost-maximal one).

    >>> permeability(parse("13/24"))
    (1, IntervalCut(cuts=(2,)))
    """
    bo = p.block_of
    cuts: list[int] = []
    seen: set[int] = set()
    for e in range(1, p.n + 1):
        b = bo[e]
        if b in seen:
            cuts.append(e - 1)
            seen = {b}
        else:
            seen.add(b)
    return len(cuts), IntervalCut(tuple(cuts))


def permeability_oracle(p: SetPartition) -> int:
    """Exhaustive minimum over all cut sets, for cross-checking the greedy routine."""
    if p.n == 0:
        return 0
    bo = p.block_of

    def feasible(cuts: tuple[int, ...]) -> bool:
        boundaries = set(cuts)
        seen: set[int] = set()
        for e in range(1, p.n + 1):
            b = bo[e]
            if b in seen:
                return False
            seen.add(b)
            if e in boundaries:
                seen.clear()
        return True

    for m in range(p.n):
        for cuts in itertools.combinations(range(1, p.n), m):
            if feasible(cuts):
                return m
    raise AssertionError("unreachable: cutting everywhere is always feasible")
