"""Direct descriptions of the sequences whose VT-shape is ``(n)``, a hook, or two rows.

Also holds the exact reference counts (Stirling, Bell, binomial, ballot,
Catalan) these descriptions are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import groupby
from math import comb
from typing import Sequence

from .di import check_sequence
from .tableaux import SetPartition, Tableau, count_syt, set_partition_blocks


def is_one_row(seq: Sequence[int], n: int) -> bool:
    """Every entry ``m < n`` is followed later by an ``m + 1``."""
    seq = check_sequence(seq, n)
    for r, m in enumerate(seq):
        if m < n and m + 1 not in seq[r + 1:]:
            return False
    return True


def one_row_to_set_partition(seq: Sequence[int], n: int) -> SetPartition:
    if not is_one_row(seq, n):
        raise ValueError(f"{tuple(seq)} does not have one-row VT-shape for n = {n}")
    return set_partition_blocks(seq)


def set_partition_to_one_row(p: SetPartition, n: int) -> tuple[int, ...]:
    """Blocks ordered by largest element, descending; block ``b`` (1-based) gets value ``n - b + 1``."""
    if len(p) > n:
        raise ValueError(f"{len(p)} blocks do not fit in n = {n} values")
    out = [0] * p.k
    for b, block in enumerate(p.by_max_desc(), start=1):
        for pos in block:
            out[pos - 1] = n - b + 1
    return tuple(out)


def is_hook_sequence(seq: Sequence[int], n: int) -> bool:
    """``n > i_1 > i_2 > ... > i_k``."""
    seq = check_sequence(seq, n)
    return all(a > b for a, b in zip(seq, seq[1:])) and (not seq or seq[0] < n)


def two_row_from_syt(p: Tableau) -> tuple[int, ...]:
    """Replace each maximal run ``a, a+1, ..., a+l-1`` of the second row by ``l`` copies of ``a - 1``."""
    if len(p.shape) != 2 or not p.is_standard:
        raise ValueError(f"expected a two-row standard tableau, got shape {p.shape}")
    segments: list[list[int]] = []
    for x in p.rows[1]:
        if segments and x == segments[-1][-1] + 1:
            segments[-1].append(x)
        else:
            segments.append([x])
    return tuple(seg[0] - 1 for seg in segments for _ in seg)


def _runs(seq: Sequence[int]) -> list[tuple[int, int]]:
    return [(value, len(list(group))) for value, group in groupby(seq)]


def _offsets(seq: Sequence[int]) -> list[int]:
    """``0^{r_1} r_1^{r_2} (r_1 + r_2)^{r_3} ...`` for the runs of ``seq``."""
    out: list[int] = []
    total = 0
    for _, length in _runs(seq):
        out.extend([total] * length)
        total += length
    return out


@dataclass(frozen=True)
class LatticePath:
    """East/north steps from ``(0, 0)`` to ``(n - k, k)`` staying on or below ``y = x``."""

    steps: str

    def __post_init__(self) -> None:
        if set(self.steps) - {"E", "N"}:
            raise ValueError("steps must be E or N")
        x = y = 0
        for s in self.steps:
            x, y = (x + 1, y) if s == "E" else (x, y + 1)
            if y > x:
                raise ValueError(f"path rises above the diagonal: {self.steps}")

    @classmethod
    def from_north_xs(cls, xs: Sequence[int], width: int) -> "LatticePath":
        steps = []
        x = 0
        for v in xs:
            steps.append("E" * (v - x) + "N")
            x = v
        steps.append("E" * (width - x))
        return cls("".join(steps))

    @property
    def north_xs(self) -> tuple[int, ...]:
        out = []
        x = 0
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                out.append(x)
        return tuple(out)


@dataclass(frozen=True)
class TwoRowDecomposition:
    v: tuple[int, ...]
    eps: tuple[int, ...]
    path: LatticePath

    @property
    def second_row(self) -> tuple[int, ...]:
        return tuple(j + x for j, x in enumerate(self.v, start=1))


def two_row_decompose(seq: Sequence[int], n: int) -> TwoRowDecomposition:
    """Split a two-row sequence as ``i = v + eps``, ``v`` the north-step x-coordinates.

    ``eps`` is built from the runs of equal values in ``i``.  Raises
    ``ValueError`` when ``seq`` is not in the two-row class for ``n``.
    """
    seq = check_sequence(seq, n)
    k = len(seq)
    if n < 2 * k:
        raise ValueError(f"two-row shape ({n - k}, {k}) needs n >= 2k")
    if any(b < a for a, b in zip(seq, seq[1:])):
        raise ValueError(f"{seq} is not weakly increasing")
    eps = tuple(_offsets(seq))
    v = tuple(i - e for i, e in zip(seq, eps))
    if tuple(_offsets(v)) != eps or any(b < a for a, b in zip(v, v[1:])):
        raise ValueError(f"{seq} does not come from a lattice path")
    if any(x < j for j, x in enumerate(v, start=1)) or (v and v[-1] > n - k):
        raise ValueError(f"{seq} gives a path leaving the region below y = x")
    return TwoRowDecomposition(v, eps, LatticePath.from_north_xs(v, n - k))


def is_two_row_sequence(seq: Sequence[int], n: int) -> bool:
    try:
        two_row_decompose(seq, n)
    except ValueError:
        return False
    return True


def syt_from_second_row(b: Sequence[int], n: int) -> Tableau:
    first = tuple(x for x in range(1, n + 1) if x not in set(b))
    return Tableau((first, tuple(b)) if b else (first,))


@cache
def stirling2(k: int, i: int) -> int:
    if k == 0 and i == 0:
        return 1
    if k == 0 or i == 0:
        return 0
    return i * stirling2(k - 1, i) + stirling2(k - 1, i - 1)


def bell(k: int) -> int:
    return sum(stirling2(k, i) for i in range(k + 1))


def one_row_count(n: int, k: int) -> int:
    """Set partitions of ``[k]`` with at most ``n`` blocks."""
    return sum(stirling2(k, i) for i in range(min(n, k) + 1))


def ballot(n: int, k: int) -> int:
    """Standard tableaux of shape ``(n - k, k)``: ``C(n, k) - C(n, k - 1)``."""
    if k < 0 or n < 2 * k:
        return 0
    return comb(n, k) - (comb(n, k - 1) if k else 0)


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def count_reference(kind: str, *args: int) -> int:
    """Exact reference counts by name: ``stirling2``, ``bell``, ``binomial``, ``ballot``, ``catalan``."""
    table = {
        "stirling2": stirling2,
        "bell": bell,
        "binomial": comb,
        "ballot": ballot,
        "catalan": catalan,
    }
    if kind not in table:
        raise ValueError(f"unknown count {kind!r}")
    return table[kind](*args)


def ballot_matches_syt(n: int, k: int) -> bool:
    return ballot(n, k) == count_syt((n - k, k) if k else (n,))
