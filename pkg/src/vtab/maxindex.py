"""Sequences of maximal VT-index ``k`` and the permutations that encode them.

``R_k^n`` is the set of permutations of ``[n]`` whose first ``n - k``
entries increase and whose longest increasing subsequence has length
``n - k``.  :func:`psi` sends a sequence of VT-index ``k`` to such a
permutation through DI and RSK; Algorithms A and B do the same with plain
integer bookkeeping through the bumping sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .di import check_sequence, di_forward, di_inverse
from .rsk import inverse_rsk_word, longest_increasing, rsk_word
from .tableaux import Partition, Tableau
from .vacillating import syt_star_to_vt, vt_to_syt_star


def _check_perm(w: Sequence[int]) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def is_in_rnk(w: Sequence[int], k: int) -> bool:
    w = _check_perm(w)
    head = w[: len(w) - k]
    return all(a < b for a, b in zip(head, head[1:])) and longest_increasing(w) == len(w) - k


def with_suffix(a: Sequence[int], n: int) -> tuple[int, ...]:
    """The permutation ``b_1 < ... < b_{n-k}`` followed by ``a``."""
    rest = sorted(set(range(1, n + 1)) - set(a))
    return tuple(rest) + tuple(a)


def enumerate_rnk(n: int, k: int) -> list[tuple[int, ...]]:
    """``R_k^n`` in lexicographic order of the suffix."""
    out = []
    for a in permutations(range(1, n + 1), k):
        w = with_suffix(a, n)
        if longest_increasing(w) == n - k:
            out.append(w)
    return sorted(out)


def rk_of_shape(n: int, k: int, shape: Partition) -> list[tuple[int, ...]]:
    return [w for w in enumerate_rnk(n, k) if rsk_word(w)[0].shape == tuple(shape)]


def _next_free_above(x: int, taken: Iterable[int]) -> int:
    taken = set(taken)
    x += 1
    while x in taken:
        x += 1
    return x


def _next_free_below(x: int, taken: Iterable[int]) -> int:
    taken = set(taken)
    x -= 1
    while x in taken:
        x -= 1
    return x


def push_right(a: Sequence[int]) -> tuple[int, ...]:
    """``t_j`` = least ``x > a_j`` avoiding ``t_1..t_{j-1}`` and ``a_{j+1}..a_k``."""
    t: list[int] = []
    for j, x in enumerate(a):
        t.append(_next_free_above(x, t + list(a[j + 1:])))
    return tuple(t)


def pull_left(t: Sequence[int]) -> tuple[int, ...]:
    """``a_j`` (from ``j = k`` down) = largest ``c < t_j`` avoiding ``t_1..t_{j-1}`` and ``a_{j+1}..a_k``."""
    k = len(t)
    a = [0] * k
    for j in range(k - 1, -1, -1):
        a[j] = _next_free_below(t[j], list(t[:j]) + a[j + 1:])
    return tuple(a)


def drop_to_sequence(t: Sequence[int]) -> tuple[int, ...]:
    """``i_j`` = largest ``c < t_j`` avoiding ``t_1..t_{j-1}``."""
    return tuple(_next_free_below(x, t[:j]) for j, x in enumerate(t))


def algorithm_a(w: Sequence[int], k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """From ``w`` in ``R_k^n`` to its bumping sequence ``t`` and the sequence ``i``."""
    w = _check_perm(w)
    if not is_in_rnk(w, k):
        raise ValueError(f"{w} is not in R_{k}^{len(w)}")
    a = w[len(w) - k:]
    t = push_right(a)
    i = drop_to_sequence(t)
    if any(x < 1 for x in i):
        raise ArithmeticError(f"Algorithm A produced an entry below 1: {i}")
    return t, i


@dataclass(frozen=True)
class AlgorithmBResult:
    t: tuple[int, ...]
    a: tuple[int, ...] | None
    w: tuple[int, ...] | None
    # "overflow": some t_j > n; "underflow": some a_j < 1
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def algorithm_b(seq: Sequence[int], n: int) -> AlgorithmBResult:
    """From a sequence to a candidate permutation, or the step at which that fails."""
    seq = check_sequence(seq, n)
    t = push_right(seq)
    if any(x > n for x in t):
        return AlgorithmBResult(t, None, None, "overflow")
    a = pull_left(t)
    if any(x < 1 for x in a):
        return AlgorithmBResult(t, a, None, "underflow")
    return AlgorithmBResult(t, a, with_suffix(a, n))


def has_max_vt_index(seq: Sequence[int], n: int) -> bool:
    """Algorithm B stays inside ``[n]`` and dropping its ``t`` gives back ``seq``."""
    result = algorithm_b(seq, n)
    return result.ok and drop_to_sequence(result.t) == tuple(seq)


def _lift_recording(q_star: Tableau, n: int) -> Tableau:
    k = q_star.size
    rows = [tuple(range(1, n - k + 1))] + [tuple(x + n - k for x in row) for row in q_star.rows]
    return Tableau(tuple(r for r in rows if r))


def psi(seq: Sequence[int], n: int) -> tuple[int, ...]:
    """The permutation whose RSK pair is ``(P, Q)``: ``P`` from DI, ``Q`` from the vacillating tableau."""
    image = di_forward(seq, n)
    k = image.gamma.k
    if image.shape[0] != n - k:
        raise ValueError(f"VT-index of {tuple(seq)} is {image.vt_index}, not {k}")
    q = _lift_recording(vt_to_syt_star(image.gamma), n)
    return inverse_rsk_word(image.p, q)


def psi_inverse(w: Sequence[int], k: int) -> tuple[int, ...]:
    w = _check_perm(w)
    n = len(w)
    if not is_in_rnk(w, k):
        raise ValueError(f"{w} is not in R_{k}^{n}")
    p, q = rsk_word(w)
    q_star = Tableau(tuple(tuple(x - (n - k) for x in row) for row in q.rows[1:]))
    return di_inverse(p, syt_star_to_vt(q_star, n))


def render_grid(n: int, k: int, marks: dict[str, Sequence[int]]) -> str:
    """ASCII picture of an ``n x k`` grid, row ``n`` on top, column ``j`` for step ``j``.

    ``marks`` maps a one-character label to a length-``k`` sequence of rows;
    later labels overwrite earlier ones in the same cell.
    """
    cells = [["." for _ in range(k)] for _ in range(n)]
    for label, rows in marks.items():
        for j, r in enumerate(rows):
            if 1 <= r <= n:
                cells[n - r][j] = label[0]
    width = len(str(n))
    lines = [f"{n - idx:>{width}} " + " ".join(row) for idx, row in enumerate(cells)]
    return "\n".join(lines)
