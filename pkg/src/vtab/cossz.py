"""The RSK-only bijection from ``[n]^k`` to (SYT, standard multiset tableau) pairs.

Position sets ``M_r = {j : i_j = r}`` label the recording side; empty
cells pad the first row.  Cells compare by their largest element, and the
empty set sits below everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .di import check_sequence
from .rsk import TwoLineArray, inverse_rsk, rsk
from .tableaux import Partition, Tableau

Cell = frozenset[int]


def cell_key(cell: Cell) -> int:
    return max(cell) if cell else 0


@dataclass(frozen=True)
class MultisetTableau:
    """Young-diagram filling by disjoint subsets of ``[k]``, increasing by :func:`cell_key`.

    Empty cells may repeat along a row but never down a column; nonempty
    cells strictly increase along rows and columns.
    """

    rows: tuple[tuple[Cell, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(frozenset(c) for c in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(x == 0 for x in lengths) or any(b > a for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"row lengths must be positive and weakly decreasing: {lengths}")
        cells = [c for row in rows for c in row if c]
        flat = sorted(x for c in cells for x in c)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError("nonempty cells must be disjoint with union 1..k")
        for r, row in enumerate(rows):
            for c, cell in enumerate(row):
                right = row[c + 1] if c + 1 < len(row) else None
                below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
                if below is not None and cell_key(below) <= cell_key(cell) and (cell or not below):
                    raise ValueError(f"column {c} does not increase below row {r}")
                if right is not None and cell and cell_key(right) <= cell_key(cell):
                    raise ValueError(f"row {r} does not increase at column {c}")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def k(self) -> int:
        return sum(len(c) for row in self.rows for c in row)

    def to_lists(self) -> list[list[list[int]]]:
        return [[sorted(c) for c in row] for row in self.rows]


def two_line_array(seq: Sequence[int], n: int) -> TwoLineArray:
    """Empty cells over the unused values in increasing order, then blocks ``M_r`` over ``r`` by max."""
    seq = check_sequence(seq, n)
    blocks: dict[int, set[int]] = {}
    for pos, value in enumerate(seq, start=1):
        blocks.setdefault(value, set()).add(pos)
    unused = [x for x in range(1, n + 1) if x not in blocks]
    used = sorted(blocks, key=lambda r: max(blocks[r]))
    top = [frozenset()] * len(unused) + [frozenset(blocks[r]) for r in used]
    return TwoLineArray(tuple(top), tuple(unused + used), key=cell_key)


def cossz_forward(seq: Sequence[int], n: int) -> tuple[Tableau, MultisetTableau]:
    p, q = rsk(two_line_array(seq, n))
    return p, MultisetTableau(q)


def cossz_inverse(s: Tableau, t: MultisetTableau) -> tuple[int, ...]:
    if s.shape != t.shape:
        raise ValueError(f"shape mismatch: {s.shape} vs {t.shape}")
    if not s.is_standard:
        raise ValueError("s must be a standard Young tableau")
    array = inverse_rsk(s, t.rows, key=cell_key)
    out = [0] * t.k
    for cell, value in zip(array.top, array.bottom):
        for pos in cell:
            out[pos - 1] = value
    result = tuple(out)
    if cossz_forward(result, s.size) != (s, t):
        raise ValueError("pair is not in the image of the bijection")
    return result


def cossz_maxshape(seq: Sequence[int], n: int) -> bool:
    """Whether the image shape has first row ``n - k``."""
    k = len(seq)
    s, _ = cossz_forward(seq, n)
    return s.shape[0] == n - k
