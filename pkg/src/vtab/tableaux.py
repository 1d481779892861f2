"""Partitions, partial and standard Young tableaux, set partitions.

Partitions are plain tuples of positive integers in weakly decreasing
order; ``()`` is the empty partition.  Tableaux are immutable, validated
on construction and stored row-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Box = tuple[int, int]

DEFAULT_SYT_BOUND = 12


class BoundExceededError(ValueError):
    """An exhaustive enumeration was asked for more than its configured bound."""


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a partition tuple."""
    lam = tuple(int(p) for p in parts)
    for a, b in zip(lam, lam[1:]):
        if b > a:
            raise ValueError(f"parts must be weakly decreasing: {lam}")
    if lam and lam[-1] < 1:
        raise ValueError(f"parts must be positive: {lam}")
    return lam


def size(lam: Partition) -> int:
    return sum(lam)


def star(lam: Partition) -> Partition:
    """Drop the first row: ``(3, 2, 1) -> (2, 1)``."""
    return tuple(lam[1:])


def contains(outer: Partition, inner: Partition) -> bool:
    """Whether the Young diagram of ``inner`` sits inside that of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def skew_box(outer: Partition, inner: Partition) -> Box:
    """The unique box of ``outer / inner`` when the two differ by one box."""
    if not contains(outer, inner) or size(outer) - size(inner) != 1:
        raise ValueError(f"{outer} / {inner} is not a single box")
    for r, length in enumerate(outer):
        inner_len = inner[r] if r < len(inner) else 0
        if length != inner_len:
            return (r, inner_len)
    raise AssertionError("unreachable")


def removable_boxes(lam: Partition) -> list[Box]:
    """Outer corners of ``lam`` as ``(row, col)``, top row first."""
    out = []
    for r, length in enumerate(lam):
        below = lam[r + 1] if r + 1 < len(lam) else 0
        if length > below:
            out.append((r, length - 1))
    return out


def addable_boxes(lam: Partition) -> list[Box]:
    out = []
    for r in range(len(lam) + 1):
        length = lam[r] if r < len(lam) else 0
        above = lam[r - 1] if r > 0 else None
        if above is None or above > length:
            out.append((r, length))
    return out


def remove_box(lam: Partition, row: int) -> Partition:
    parts = list(lam)
    parts[row] -= 1
    if parts[row] == 0:
        parts.pop()
    return partition(parts)


def add_box(lam: Partition, row: int) -> Partition:
    parts = list(lam)
    if row == len(parts):
        parts.append(1)
    else:
        parts[row] += 1
    return partition(parts)


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n,)`` first."""

    def gen(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


@dataclass(frozen=True)
class Tableau:
    """A partial tableau: distinct positive entries, rows and columns increasing.

    Entries need not be ``1..n``; :attr:`is_standard` tells whether they are.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if any(len(row) == 0 for row in rows):
            raise ValueError("tableau rows must be nonempty")
        object.__setattr__(self, "rows", rows)
        partition(len(row) for row in rows)
        flat = [x for row in rows for x in row]
        if len(set(flat)) != len(flat):
            raise ValueError(f"tableau entries must be distinct: {rows}")
        if any(x < 1 for x in flat):
            raise ValueError(f"tableau entries must be positive: {rows}")
        for r, row in enumerate(rows):
            for c, x in enumerate(row):
                if c + 1 < len(row) and row[c + 1] <= x:
                    raise ValueError(f"row {r} is not increasing: {rows}")
                if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c] <= x:
                    raise ValueError(f"column {c} is not increasing: {rows}")

    @classmethod
    def row(cls, n: int) -> "Tableau":
        """The one-row tableau ``1 2 ... n``."""
        return cls((tuple(range(1, n + 1)),) if n else ())

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def content(self) -> frozenset[int]:
        return frozenset(x for row in self.rows for x in row)

    @property
    def is_standard(self) -> bool:
        return self.content == frozenset(range(1, self.size + 1))

    def find(self, x: int) -> Box:
        for r, row in enumerate(self.rows):
            if x in row:
                return (r, row.index(x))
        raise KeyError(x)

    def __contains__(self, x: object) -> bool:
        return any(x in row for row in self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        width = max((len(str(x)) for row in self.rows for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


def standard_tableau(rows: Sequence[Sequence[int]]) -> Tableau:
    """Build a tableau and insist that its content is exactly ``1..n``."""
    t = Tableau(tuple(tuple(r) for r in rows))
    if not t.is_standard:
        raise ValueError(f"not a standard Young tableau: {t.rows}")
    return t


def enumerate_syt(shape: Partition, bound: int = DEFAULT_SYT_BOUND) -> list[Tableau]:
    """Every standard Young tableau of ``shape``, by placing ``1..n`` box by box."""
    shape = partition(shape)
    n = size(shape)
    if n > bound:
        raise BoundExceededError(f"|shape| = {n} exceeds enumeration bound {bound}")
    out: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def place(value: int) -> None:
        if value > n:
            out.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for r, length in enumerate(shape):
            cur = len(rows[r])
            if cur < length and (r == 0 or len(rows[r - 1]) > cur):
                rows[r].append(value)
                place(value + 1)
                rows[r].pop()

    place(1)
    return out


def hook_lengths(shape: Partition) -> list[list[int]]:
    conj = conjugate(shape)
    return [[shape[r] - c - 1 + conj[c] - r for c in range(shape[r])] for r in range(len(shape))]


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part > c) for c in range(shape[0]))


def count_syt(shape: Partition) -> int:
    """Number of standard Young tableaux of ``shape`` by the hook-length formula."""
    shape = partition(shape)
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    return factorial(size(shape)) // prod


@dataclass(frozen=True)
class SetPartition:
    """A set partition of ``{1..k}``; blocks are sorted and listed by least element."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(len(b) == 0 for b in blocks):
            raise ValueError("set partition blocks must be nonempty")
        flat = sorted(x for b in blocks for x in b)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks must partition 1..k: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int:
        return sum(len(b) for b in self.blocks)

    def by_max_desc(self) -> tuple[tuple[int, ...], ...]:
        """Blocks ordered by their largest element, largest first."""
        return tuple(sorted(self.blocks, key=lambda b: b[-1], reverse=True))

    def __len__(self) -> int:
        return len(self.blocks)


def set_partition_blocks(seq: Sequence[int]) -> SetPartition:
    """Group positions ``1..k`` of ``seq`` by the value found there."""
    groups: dict[int, list[int]] = {}
    for pos, value in enumerate(seq, start=1):
        groups.setdefault(value, []).append(pos)
    return SetPartition(tuple(tuple(g) for g in groups.values()))


def set_partitions(k: int) -> Iterator[SetPartition]:
    """All set partitions of ``{1..k}`` via restricted growth strings."""

    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == k:
            yield prefix
            return
        for label in range(top + 2):
            yield from grow(prefix + [label], max(top, label))

    if k == 0:
        yield SetPartition(())
        return
    for rgs in grow([0], 0):
        blocks: dict[int, list[int]] = {}
        for pos, label in enumerate(rgs, start=1):
            blocks.setdefault(label, []).append(pos)
        yield SetPartition(tuple(tuple(b) for b in blocks.values()))
