"""The delete-insert bijection from ``[n]^k`` to (SYT, n-vacillating tableau) pairs.

Round ``j`` deletes ``i_j`` from the current standard tableau by jeu de
taquin and row-inserts it back.  The shapes met along the way form the
vacillating tableau; the final tableau is the SYT component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rsk import jdt_delete, reverse_jdt, reverse_row_insert, row_insert
from .tableaux import Partition, Tableau, size, skew_box, star
from .vacillating import VacillatingTableau


def check_sequence(seq: Sequence[int], n: int) -> tuple[int, ...]:
    seq = tuple(int(x) for x in seq)
    if n < 1:
        raise ValueError("n must be positive")
    for x in seq:
        if not 1 <= x <= n:
            raise ValueError(f"entry {x} is outside 1..{n}")
    return seq


@dataclass(frozen=True)
class DiImage:
    p: Tableau
    gamma: VacillatingTableau
    trace: tuple[Tableau, ...]
    # entry pushed out of the first row by each insertion, None if nothing was
    bumped: tuple[int | None, ...]

    @property
    def shape(self) -> Partition:
        return self.p.shape

    @property
    def vt_index(self) -> int:
        return size(star(self.shape))


def di_forward(seq: Sequence[int], n: int) -> DiImage:
    seq = check_sequence(seq, n)
    t = Tableau.row(n)
    trace = [t]
    bumped = []
    for x in seq:
        t = jdt_delete(t, x)
        trace.append(t)
        t, _, out = row_insert(t, x)
        trace.append(t)
        bumped.append(out)
    gamma = VacillatingTableau(n, len(seq), tuple(s.shape for s in trace))
    return DiImage(t, gamma, tuple(trace), tuple(bumped))


def di_inverse(p: Tableau, gamma: VacillatingTableau) -> tuple[int, ...]:
    """Run the rounds backwards: un-insert into the removed box, then un-delete.

    Each round's insertion box is ``lambda^(j+1) / lambda^(j+1/2)`` and its
    deletion box ``lambda^(j) / lambda^(j+1/2)``.
    """
    if p.shape != gamma.shape:
        raise ValueError(f"shape mismatch: {p.shape} vs {gamma.shape}")
    if not p.is_standard:
        raise ValueError("p must be a standard Young tableau")
    t = p
    out: list[int] = []
    for j in range(gamma.k - 1, -1, -1):
        half = gamma.half_step(j)
        row, _ = skew_box(gamma.step(j + 1), half)
        t, x = reverse_row_insert(t, row)
        t = reverse_jdt(t, skew_box(gamma.step(j), half), x)
        out.append(x)
    out.reverse()
    return tuple(out)


def vt_shape(seq: Sequence[int], n: int) -> Partition:
    return di_forward(seq, n).shape


def vt_index(seq: Sequence[int], n: int) -> int:
    """Number of boxes below the first row of the VT-shape."""
    return di_forward(seq, n).vt_index
