"""Row insertion, jeu de taquin deletion, Knuth's RSK and its inverse.

All operations take and return immutable :class:`~vtab.tableaux.Tableau`
values; internally they work on lists of lists.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Sequence

from .tableaux import Box, Tableau


class InvalidArrayError(ValueError):
    pass


def _freeze(rows: list[list[int]]) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows if r))


def _insert_rows(rows: list[list[int]], x: int) -> tuple[int, int | None]:
    """Row-insert ``x`` in place; return (row of new box, entry bumped from row 0)."""
    first_bump = None
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, first_bump
        row = rows[r]
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return r, first_bump
        row[pos], x = x, row[pos]
        if r == 0:
            first_bump = x
        r += 1


def row_insert(t: Tableau, x: int) -> tuple[Tableau, int, int | None]:
    """Insert ``x`` into ``t`` by RSK row bumping.

    Returns the new tableau, the index of the row that received the new box,
    and the entry displaced from the first row (``None`` if ``x`` was placed
    at the end of the first row).
    """
    if x in t:
        raise ValueError(f"{x} is already in the tableau")
    rows = t.to_lists()
    row_index, bumped = _insert_rows(rows, x)
    return _freeze(rows), row_index, bumped


def reverse_row_insert(t: Tableau, row_index: int) -> tuple[Tableau, int]:
    """Undo a row insertion whose new box ended row ``row_index``.

    Returns the smaller tableau and the value that had been inserted.
    """
    rows = t.to_lists()
    if row_index >= len(rows):
        raise ValueError(f"row {row_index} does not exist")
    below = len(rows[row_index + 1]) if row_index + 1 < len(rows) else 0
    if len(rows[row_index]) <= below:
        raise ValueError(f"the end of row {row_index} is not a corner")
    x = rows[row_index].pop()
    for r in range(row_index - 1, -1, -1):
        row = rows[r]
        pos = bisect_left(row, x) - 1
        row[pos], x = x, row[pos]
    return _freeze(rows), x


def jdt_delete(t: Tableau, x: int) -> Tableau:
    """Delete ``x`` from ``t`` by sliding the hole to a corner.

    At each step the hole swaps with the smaller of its right and lower
    neighbours.
    """
    rows = t.to_lists()
    try:
        r, c = t.find(x)
    except KeyError:
        raise ValueError(f"{x} is not in the tableau") from None
    while True:
        right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
        down = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
        if right is None and down is None:
            break
        if down is None or (right is not None and right < down):
            rows[r][c] = right
            c += 1
        else:
            rows[r][c] = down
            r += 1
    del rows[r][c]
    return _freeze(rows)


def reverse_jdt(t: Tableau, box: Box, x: int) -> Tableau:
    """Inverse of :func:`jdt_delete`: put ``x`` back so that deleting it empties ``box``.

    ``box`` must be an addable cell of ``t``'s shape.  The hole moves up or
    left, taking the larger neighbour, for as long as that neighbour exceeds
    ``x``.
    """
    if x in t:
        raise ValueError(f"{x} is already in the tableau")
    rows = t.to_lists()
    r, c = box
    length = len(rows[r]) if r < len(rows) else 0
    above = len(rows[r - 1]) if r > 0 else None
    if c != length or (above is not None and above <= c):
        raise ValueError(f"{box} is not an addable cell")
    if r == len(rows):
        rows.append([])
    rows[r].append(0)
    while True:
        up = rows[r - 1][c] if r > 0 else None
        left = rows[r][c - 1] if c > 0 else None
        bigger = max((v for v in (up, left) if v is not None), default=None)
        if bigger is None or bigger < x:
            break
        if bigger == up:
            rows[r][c] = up
            r -= 1
        else:
            rows[r][c] = left
            c -= 1
    rows[r][c] = x
    return _freeze(rows)


def _identity(label: Any) -> Any:
    return label


@dataclass(frozen=True)
class TwoLineArray:
    """Columns ``(top[j], bottom[j])`` in non-decreasing lexicographic order.

    ``key`` maps top labels to comparable values; labels with equal keys
    count as equal.  Bottom entries must be distinct positive integers.
    """

    top: tuple[Hashable, ...]
    bottom: tuple[int, ...]
    key: Callable[[Any], Any] = field(default=_identity, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(int(b) for b in self.bottom))
        if len(self.top) != len(self.bottom):
            raise InvalidArrayError("top and bottom lines differ in length")
        if len(set(self.bottom)) != len(self.bottom):
            raise InvalidArrayError("bottom line entries must be distinct")
        cols = [(self.key(u), v) for u, v in zip(self.top, self.bottom)]
        for a, b in zip(cols, cols[1:]):
            if b < a:
                raise InvalidArrayError(f"columns out of lexicographic order: {a} then {b}")

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "TwoLineArray":
        return cls(tuple(range(1, len(word) + 1)), tuple(word))


def rsk(array: TwoLineArray) -> tuple[Tableau, tuple[tuple[Any, ...], ...]]:
    """Knuth's RSK: insertion tableau of the bottom line, recording filling by top labels."""
    p: list[list[int]] = []
    q: list[list[Any]] = []
    for u, v in zip(array.top, array.bottom):
        r, _ = _insert_rows(p, v)
        if r == len(q):
            q.append([])
        q[r].append(u)
    return _freeze(p), tuple(tuple(row) for row in q)


def rsk_word(word: Sequence[int]) -> tuple[Tableau, Tableau]:
    """RSK of a word of distinct integers against the top line ``1..n``."""
    p, q = rsk(TwoLineArray.from_word(word))
    return p, Tableau(q)


def inverse_rsk(
    p: Tableau,
    q: Sequence[Sequence[Any]],
    key: Callable[[Any], Any] = _identity,
) -> TwoLineArray:
    """Rebuild the two-line array from an insertion tableau and a recording filling.

    Columns are peeled off from the right: the recording label with the
    largest key (rightmost among ties) marks the box that was added last.
    """
    q_rows = [list(row) for row in q]
    if p.shape != tuple(len(row) for row in q_rows):
        raise ValueError(f"shape mismatch: {p.shape} vs {tuple(len(r) for r in q_rows)}")
    cur = p
    top: list[Any] = []
    bottom: list[int] = []
    for _ in range(p.size):
        best: tuple[Any, int, int] | None = None
        for r, row in enumerate(q_rows):
            for c, label in enumerate(row):
                rank = (key(label), c)
                if best is None or rank > (best[0], best[2]):
                    best = (key(label), r, c)
        assert best is not None
        _, r, c = best
        if c != len(q_rows[r]) - 1 or (r + 1 < len(q_rows) and len(q_rows[r + 1]) > c):
            raise ValueError("recording filling does not give a valid removal order")
        top.append(q_rows[r].pop())
        if not q_rows[r]:
            q_rows.pop()
        cur, x = reverse_row_insert(cur, r)
        bottom.append(x)
    top.reverse()
    bottom.reverse()
    return TwoLineArray(tuple(top), tuple(bottom), key)


def inverse_rsk_word(p: Tableau, q: Tableau) -> tuple[int, ...]:
    """The word whose RSK pair is ``(p, q)``, for standard recording tableau ``q``."""
    if not q.is_standard:
        raise ValueError("recording tableau must be standard")
    return inverse_rsk(p, q.rows).bottom


def longest_increasing(seq: Sequence[int]) -> int:
    """Length of a longest strictly increasing subsequence (patience sorting)."""
    piles: list[int] = []
    for x in seq:
        pos = bisect_left(piles, x)
        if pos == len(piles):
            piles.append(x)
        else:
            piles[pos] = x
    return len(piles)


def increasing_ends(seq: Sequence[int]) -> list[int]:
    """For each position, the longest increasing subsequence ending there."""
    g = []
    for i, x in enumerate(seq):
        g.append(1 + max((g[j] for j in range(i) if seq[j] < x), default=0))
    return g


def first_row_by_ends(seq: Sequence[int]) -> list[int]:
    """First row of the insertion tableau of ``seq`` read off from :func:`increasing_ends`.

    Box ``j`` holds the last entry whose longest increasing run ending at it
    has length ``j``.
    """
    g = increasing_ends(seq)
    last: dict[int, int] = {}
    for x, length in zip(seq, g):
        last[length] = x
    return [last[j] for j in range(1, len(last) + 1)]
