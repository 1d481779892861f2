"""Which sequences occur as bumping sequences or suffixes of permutations in ``R_k^n``.

The same conditions describe a reparking game: ``k`` cars on a street of
``n`` spots each move to the nearest free spot on one side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .maxindex import pull_left, push_right
from .rsk import longest_increasing


def _check_distinct(xs: Sequence[int], n: int) -> tuple[int, ...]:
    xs = tuple(int(x) for x in xs)
    if len(set(xs)) != len(xs):
        raise ValueError(f"entries must be distinct: {xs}")
    if any(not 1 <= x <= n for x in xs):
        raise ValueError(f"entries must lie in 1..{n}: {xs}")
    return xs


def gaps(xs: Sequence[int]) -> tuple[int, ...]:
    """Values strictly between ``min(xs)`` and ``max(xs)`` missing from ``xs``."""
    if not xs:
        return ()
    present = set(xs)
    return tuple(x for x in range(min(xs), max(xs) + 1) if x not in present)


def bumping_criterion(t: Sequence[int], n: int) -> bool:
    """``min(t) > is(t, gaps) - #gaps``."""
    t = _check_distinct(t, n)
    if not t:
        return True
    m = gaps(t)
    return min(t) > longest_increasing(t + m) - len(m)


def suffix_criterion(a: Sequence[int], n: int) -> bool:
    """``n + 1 - max(a) > is(gaps, a) - #gaps``."""
    a = _check_distinct(a, n)
    if not a:
        return True
    m = gaps(a)
    return n + 1 - max(a) > longest_increasing(m + a) - len(m)


def reverse_complement(xs: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(n + 1 - x for x in reversed(xs))


@dataclass(frozen=True)
class ReparkOutcome:
    success: bool
    positions: tuple[int, ...]
    predicted: bool


def repark(n: int, positions: Sequence[int], direction: str) -> ReparkOutcome:
    """Move every car to the closest free spot on one side and compare with the prediction.

    ``right``: cars ``1..k`` in turn; ``left``: cars ``k..1``.  A car never
    stays put, and the spot it leaves is free for the cars after it.  The
    returned positions may fall off the street (``> n`` or ``< 1``) when
    reparking fails.
    """
    x = _check_distinct(positions, n)
    m = gaps(x)
    if direction == "right":
        moved = push_right(x)
        success = all(p <= n for p in moved)
        spare = n - max(x) if x else n
        predicted = spare >= longest_increasing(m + x) - len(m)
    elif direction == "left":
        moved = pull_left(x)
        success = all(p >= 1 for p in moved)
        spare = min(x) - 1 if x else n
        predicted = spare >= longest_increasing(x + m) - len(m)
    else:
        raise ValueError(f"direction must be 'right' or 'left', got {direction!r}")
    return ReparkOutcome(success, moved, predicted)
